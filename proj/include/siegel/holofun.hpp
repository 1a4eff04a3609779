#pragma once

// A closed symbolic catalogue of holomorphic test functions on U.
//
// Every function is kept in a canonical sum-of-products form
//
//     sum_k  c_k * z^{a_k} * conj(z')^{b_k} * prod_w rho(., w)^{s_{k,w}} * prod_w log(rho(., w))^{m_{k,w}}
//
// The conj(z') factors only appear after applying the tangential operators
// L_j = d_j + 2i conj(z_j) d_n; the holomorphic derivatives d_k annihilate them,
// so the catalogue is closed under every L_j and L^alpha is exact.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "siegel/geometry.hpp"

namespace siegel {

/// alpha in N_0^n; the last entry is alpha_n.
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<int> alpha);
  static MultiIndex unit(int n, int j);

  int dim() const { return static_cast<int>(alpha_.size()); }
  int operator[](int j) const { return alpha_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& entries() const { return alpha_; }
  int order() const;         // |alpha|
  int prime_order() const;   // |alpha'|
  double bracket() const;    // <alpha> = |alpha'|/2 + alpha_n

  MultiIndex operator+(const MultiIndex& other) const;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> alpha_;
};

/// All alpha in N_0^n with |alpha| = N, in lexicographic order.
std::vector<MultiIndex> multi_indices_of_order(int n, int N);

class HoloFun {
 public:
  struct Term {
    cd coeff{1.0, 0.0};
    std::vector<int> z_pow;                          // n entries
    std::vector<int> zbar_pow;                       // n-1 entries
    std::vector<std::pair<Point, double>> kernels;   // rho(., w)^s, s != 0, sorted by w
    std::vector<std::pair<Point, int>> logs;         // log rho(., w)^m, m > 0, sorted by w
  };

  explicit HoloFun(int n);

  static HoloFun constant(int n, cd c);
  /// z_j, j in [0, n).
  static HoloFun coordinate(int n, int j);
  /// conj(z_j), j in [0, n-1): the coefficient introduced by L_j.
  static HoloFun conj_coordinate(int n, int j);
  /// rho(., w0)^s for a fixed w0 in the closure of U.
  static HoloFun kernel_power(const Point& w0, double s);
  /// log rho(., w0), principal branch.
  static HoloFun log_kernel(const Point& w0);
  /// (z_n + i)^s = (2i)^s rho(., i)^s.
  static HoloFun shifted_power(int n, double s);

  int dim() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when no conj(z') factor is present.
  bool holomorphic() const;

  cd operator()(const Point& z) const;

  HoloFun operator+(const HoloFun& g) const;
  HoloFun operator-(const HoloFun& g) const;
  HoloFun operator*(const HoloFun& g) const;
  HoloFun operator*(cd c) const;
  HoloFun operator-() const { return *this * cd(-1.0, 0.0); }

  /// Holomorphic partial d/dz_k, k in [0, n).
  HoloFun partial(int k) const;
  /// L_j for j in [0, n); j == n-1 gives L_n = d_n.
  HoloFun apply_L(int j) const;
  HoloFun apply_L_alpha(const MultiIndex& alpha) const;

  /// Coefficientwise comparison of canonical forms.
  bool approx_equal(const HoloFun& g, double tol) const;
  std::string to_string() const;

 private:
  void canonicalize();

  int n_;
  std::vector<Term> terms_;
};

HoloFun operator*(cd c, const HoloFun& f);

using PointFunction = std::function<cd(const Point&)>;

/// d^m f / dz_j^m at z by the trapezoid rule on a circle of the given radius.
/// Default radius: min(0.1, rho(z)/4) for z_n, and for z'_j the largest radius up to
/// 0.1 that keeps |z'|^2 from moving by more than rho(z)/4.
/// Throws DomainError if the circle leaves U.
cd cauchy_derivative(const PointFunction& f, const Point& z, int j, int m,
                     std::optional<double> radius = std::nullopt, int nodes = 64);
/// Mixed partial d^beta f at z on a polydisc (nested circles).
cd cauchy_mixed(const PointFunction& f, const Point& z, const MultiIndex& beta,
                std::optional<double> radius = std::nullopt, int nodes = 48);
/// L^alpha f(z) assembled from Cauchy mixed partials (numerical oracle).
cd cauchy_L_alpha(const PointFunction& f, const Point& z, const MultiIndex& alpha,
                  std::optional<double> radius = std::nullopt, int nodes = 48);

double invariant_gradient(const HoloFun& f, const Point& z);
/// Max of the invariant gradient over the grid: a lower bound of the Bloch semi-norm.
double bloch_seminorm_estimate(const HoloFun& f, const std::vector<Point>& grid);
/// Max over the grid of rho(z)^<alpha> |L^alpha f(z)|.
double weighted_derivative_sup(const HoloFun& f, const MultiIndex& alpha,
                               const std::vector<Point>& grid);

// ---------------------------------------------------------------------------
// Membership certificates.

enum class SpaceKind { S_t, Korenblum, BlochTilde, BergmanA1, Hardy };

struct SpaceTag {
  SpaceKind kind = SpaceKind::BlochTilde;
  /// t for S_t / Korenblum, lambda for BergmanA1, p for Hardy; unused for BlochTilde.
  double param = 0.0;
  /// For BergmanA1 and Hardy the witness is an S_t bound with this exponent.
  double witness_exponent = 0.0;

  static SpaceTag s_t(double t) { return {SpaceKind::S_t, t, t}; }
  static SpaceTag korenblum(double t) { return {SpaceKind::Korenblum, t, t}; }
  static SpaceTag bloch_tilde() { return {SpaceKind::BlochTilde, 0.0, 0.0}; }
  static SpaceTag bergman_a1(double lambda, double t) { return {SpaceKind::BergmanA1, lambda, t}; }
  static SpaceTag hardy(double p, double t) { return {SpaceKind::Hardy, p, t}; }

  std::string name() const;
};

class MembershipError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Certificate {
  double bound = 0.0;          // witness sup on the standard grid
  double refined_bound = 0.0;  // same on the x4 refined grid
  double growth = 0.0;         // refined_bound / bound - 1
  bool passed = false;
  std::string reason;
};

/// Checks the witness bound of `tag` for `f` on the standard grid and its x4
/// refinement. BlochTilde additionally requires f(i) = 0 to 1e-12.
Certificate certify(const HoloFun& f, const SpaceTag& tag, std::uint64_t seed = 0xC0FFEE);

/// A catalogue function carrying a verified membership certificate.
class TaggedFun {
 public:
  /// Throws MembershipError if the certificate fails.
  TaggedFun(HoloFun f, SpaceTag tag, std::uint64_t seed = 0xC0FFEE);

  const HoloFun& fun() const { return f_; }
  const SpaceTag& tag() const { return tag_; }
  const Certificate& certificate() const { return cert_; }
  cd operator()(const Point& z) const { return f_(z); }

 private:
  HoloFun f_;
  SpaceTag tag_;
  Certificate cert_;
};

}  // namespace siegel
