#pragma once

// Weighted Bergman kernels and projections, the reproducing formula, the
// duality pairing, the measure embedding, and the Hardy transfer map.

#include <utility>
#include <vector>

#include "siegel/geometry.hpp"
#include "siegel/holofun.hpp"
#include "siegel/quadrature.hpp"

namespace siegel {

struct KernelSpec {
  int n = 1;
  double lambda = 0.0;
  /// K~(z, w) = K(z, w) - K(i, w) instead of K(z, w) = rho(z, w)^{-(n+1+lambda)}.
  bool modified = false;

  void validate() const;
};

cd kernel(const KernelSpec& spec, const Point& z, const Point& w);
/// The kernel as a function of its first argument, w fixed.
HoloFun kernel_fun(const KernelSpec& spec, const Point& w);

/// int_U K(z, w) g(w) dV_lambda(w).
IntegralResult project(const KernelSpec& spec, const PointFunction& g, const Point& z, const QuadratureSpec& quad);

/// b_N P~_lambda(rho^N L_n^N f)(z); equals f(z) for f in the normalised Bloch space.
/// Throws MembershipError unless f carries a BlochTilde certificate.
IntegralResult reproduce(const TaggedFun& f, int N, double lambda, const Point& z, const QuadratureSpec& quad);

/// <f, g> = int_U rho d_n f conj(g) dV_lambda for f in the normalised Bloch
/// space and g in A^1_lambda.
IntegralResult pairing(const TaggedFun& f, const TaggedFun& g, double lambda, const QuadratureSpec& quad);

struct PairingBound {
  double derivative_sup = 0.0;  // ||rho d_n f||_inf over the standard grid
  double g_norm = 0.0;          // ||g||_{A^1_lambda}
  double bound() const { return derivative_sup * g_norm; }
};
PairingBound pairing_bound(const TaggedFun& f, const TaggedFun& g, double lambda, const QuadratureSpec& quad);

/// Both sides of  int f conj(g) dV_lambda = b_1 int (rho L_n f) conj(g) dV_lambda.
struct PairingIdentity {
  IntegralResult lhs;
  IntegralResult rhs_integral;  // before the factor b_1
  cd rhs;
};
PairingIdentity pairing_identity(const TaggedFun& f, const TaggedFun& g, double lambda, const QuadratureSpec& quad);

/// A finite complex measure on U.
struct DiscreteMeasure {
  std::vector<std::pair<Point, cd>> atoms;

  double total_variation() const;
};

/// g(w) = sum_k c_k rho(z_k) / rho(w, z_k)^{n+2+lambda}.
cd measure_embed(const DiscreteMeasure& mu, double lambda, const Point& w);
/// c_lambda 4 pi^n Gamma(1+lambda) / Gamma((n+2+lambda)/2)^2: the A^1_lambda norm of a unit atom.
double measure_embed_constant(int n, double lambda);
double measure_embed_norm(const DiscreteMeasure& mu, double lambda, const QuadratureSpec& quad);

/// T f(xi) = c_{n,p} (1 + xi_n)^{-2n/p} f(Phi(xi)).
cd hardy_transfer(const PointFunction& f, int n, double p, const BallPoint& xi);
BallFunction hardy_transfer_fun(PointFunction f, int n, double p);

/// C with L^alpha rho(., w)^{-s} = C (conj(z') - conj(w'))^{alpha'} rho(., w)^{-s-|alpha|},
/// one operator at a time.
cd kernel_derivative_constant(double s, const MultiIndex& alpha);
/// The right-hand side of that formula as a catalogue expression.
HoloFun kernel_derivative_form(const Point& w, double s, const MultiIndex& alpha);

/// int_U |K~_lambda(z, w)| dV_lambda(w).
IntegralResult modified_kernel_l1(int n, double lambda, const Point& z, const QuadratureSpec& quad);
/// 1 + log(|rho(z, i)|^2 / rho(z)).
double log_growth(const Point& z);

}  // namespace siegel
