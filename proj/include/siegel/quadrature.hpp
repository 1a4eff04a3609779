#pragma once

// Integration over U, bU and the ball, and the Hardy/Bergman norms built on it.
//
// U-integrals are carried to the ball through the Cayley transform. The
// deterministic engine (n = 1) is a tensor double-exponential rule in
// (|xi|^2, arg xi) split at the Cayley pole, which absorbs the corner
// singularity at xi = -1. The Monte Carlo engine samples U directly in slice
// coordinates from a heavy-tailed density comparable to |rho(., i)|^{-(n+1+lambda)}.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "siegel/geometry.hpp"
#include "siegel/holofun.hpp"

namespace siegel {

enum class Engine { Tensor, MC };

struct QuadratureSpec {
  Engine engine = Engine::Tensor;
  /// Tensor engine: double-exponential steps per unit length (h = 1/order).
  int radial_order = 16;
  int angular_order = 16;
  /// Monte Carlo sample count.
  long long sample_count = 1'000'000;
  std::uint64_t seed = 0xC0FFEE;
  /// Boundary integrals substitute t = T tan(phi).
  double truncation = 4.0;
  /// Tail exponent of the Monte Carlo proposal beyond the kernel decay.
  double tail_kappa = 0.5;
  /// Dyadic levels of the epsilon/radius grids in Hardy norms.
  int levels = 12;
  /// Worker threads; 0 means hardware concurrency. Results do not depend on it.
  int workers = 0;
  /// U-integrals: pull back through sigma_c^{-1} so the rule resolves scale rho(c) around c.
  std::optional<Point> center;

  static QuadratureSpec tensor() { return {}; }
  static QuadratureSpec mc(long long samples, std::uint64_t seed = 0xC0FFEE) {
    QuadratureSpec s;
    s.engine = Engine::MC;
    s.sample_count = samples;
    s.seed = seed;
    return s;
  }
};

struct IntegralResult {
  cd value{0.0, 0.0};
  /// Integral of |integrand| over the same rule.
  double abs_integral = 0.0;
  /// Monte Carlo standard error of `value` (0 for the tensor engine).
  double stderr_estimate = 0.0;
  /// Tensor engine: max of the step-halving and truncation differences plus the tail bound.
  double richardson_delta = 0.0;
  bool converged = true;
  long long evaluations = 0;

  /// stderr for MC, richardson_delta for the tensor engine.
  double error_estimate() const { return stderr_estimate > 0.0 ? stderr_estimate : richardson_delta; }
};

using BallFunction = std::function<cd(const BallPoint&)>;

/// int_U F dV_lambda, dV_lambda = c_lambda rho^lambda dV.
IntegralResult integrate_U(const PointFunction& F, int n, double lambda, const QuadratureSpec& spec);
/// int_bU G dbeta, dbeta = dz' dt in Heisenberg coordinates.
/// Throws DomainError when G does not decay fast enough to be integrable.
IntegralResult integrate_bU(const PointFunction& G, int n, const QuadratureSpec& spec);
/// int_B F dv_lambda with the probability measure dv_lambda = 4 c_lambda (1-|xi|^2)^lambda dV.
IntegralResult integrate_B(const BallFunction& F, int n, double lambda, const QuadratureSpec& spec);
/// Normalised surface integral over the sphere of radius r (trapezoid for n = 1,
/// quasi-MC for n >= 2).
IntegralResult integrate_sphere(const BallFunction& F, int n, double r, const QuadratureSpec& spec);

/// A norm computed as a supremum along a dyadic grid.
struct NormResult {
  double value = 0.0;
  /// p-th power integrals at each level, finest last.
  std::vector<double> levels;
  /// False when a level drops below its predecessor by more than the quadrature error.
  bool monotone = true;
};

/// sup_eps ( int_bU |f(u + eps i)|^p dbeta )^{1/p} over eps = 1, 1/2, ..., 2^-K.
NormResult hardy_norm_U(const PointFunction& f, int n, double p, const QuadratureSpec& spec);
/// sup_r ( int_S |F(r zeta)|^p dsigma )^{1/p} over r = 1 - 2^-k, k = 1..K.
NormResult hardy_norm_B(const BallFunction& F, int n, double p, const QuadratureSpec& spec);
double bergman_norm_B(const BallFunction& F, int n, double p, double lambda, const QuadratureSpec& spec);
double bergman_norm_U(const PointFunction& f, int n, double p, double lambda, const QuadratureSpec& spec);

}  // namespace siegel
