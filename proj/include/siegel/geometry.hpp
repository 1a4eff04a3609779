#pragma once

// Points of the Siegel upper half-space U = { z in C^n : Im z_n - |z'|^2 > 0 },
// its boundary bU, the unit ball B, and the maps relating them.

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace siegel {

using cd = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr cd kI{0.0, 1.0};

/// Raised when a point leaves the domain on which a formula is defined
/// (kernel base with Re <= 0, Cayley pole, non-positive Gamma argument, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when points or multi-indices of different dimensions are mixed.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Region { Interior, Boundary, Exterior };

/// A point z = (z', z_n) of C^n. The dimension n >= 1 is fixed at construction.
class Point {
 public:
  Point() = default;
  Point(std::vector<cd> zprime, cd zn);
  /// n = 1 convenience constructor.
  explicit Point(cd zn) : zn_(zn) {}

  /// The base point i = (0', i).
  static Point i_point(int n);

  int dim() const { return static_cast<int>(zprime_.size()) + 1; }
  std::span<const cd> zprime() const { return zprime_; }
  cd zn() const { return zn_; }
  /// Coordinate j in [0, n); j == n-1 is z_n.
  cd coord(int j) const;
  double norm_prime_sq() const;
  double norm() const;

  Region classify() const;

  Point with_zn(cd zn) const { return Point(zprime_, zn); }
  /// z + eps * i, i.e. the vertical translate used in Hardy norms.
  Point lifted(double eps) const { return Point(zprime_, zn_ + cd(0.0, eps)); }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<cd> zprime_;
  cd zn_{0.0, 1.0};
};

/// A point of the ball (or its sphere) in C^n.
struct BallPoint {
  std::vector<cd> xi;

  int dim() const { return static_cast<int>(xi.size()); }
  double norm_sq() const;
};

/// [zeta, t] in C^{n-1} x R.
struct HeisenbergElement {
  std::vector<cd> zeta;
  double t = 0.0;

  int dim() const { return static_cast<int>(zeta.size()) + 1; }
};

/// Affine self-map of U of the form
///   z' -> a z' + b,   z_n -> a^2 z_n + d . z' + e,   a > 0.
/// Heisenberg translations, nonisotropic dilations and their compositions all
/// have this shape, which keeps Jacobians exact.
struct SiegelAffine {
  int n = 1;
  double a = 1.0;
  std::vector<cd> b;  // length n-1
  std::vector<cd> d;  // length n-1, bilinear (not conjugated) in z'
  cd e{0.0, 0.0};

  Point operator()(const Point& z) const;
  SiegelAffine then(const SiegelAffine& outer) const;  // outer o this
  SiegelAffine inverse() const;
  /// Real Jacobian determinant of the induced map on boundary coordinates (z', t).
  double boundary_jacobian() const;
  /// Real Jacobian determinant on C^n.
  double volume_jacobian() const;
};

double rho(const Point& z);
/// rho(z, w) = (i/2)(conj(w_n) - z_n) - z' . conj(w').
cd rho(const Point& z, const Point& w);

/// Cayley transform B -> U and its inverse.
Point cayley(const BallPoint& xi);
BallPoint cayley_inv(const Point& z);
double jacobian_phi(const BallPoint& xi);
double jacobian_phi_inv(const Point& z);

HeisenbergElement heis_mul(const HeisenbergElement& h1, const HeisenbergElement& h2);
HeisenbergElement heis_inv(const HeisenbergElement& h);
Point heis_act(const HeisenbergElement& h, const Point& z);
SiegelAffine heis_map(const HeisenbergElement& h);

Point dilate(double r, const Point& z);
SiegelAffine dilation_map(int n, double r);

/// h_z = [-z', -Re z_n], which sends z to rho(z) i.
HeisenbergElement heis_to_axis(const Point& z0);
/// sigma_{z0} = delta_{rho(z0)^{-1/2}} o h_{z0}; sends z0 to i.
SiegelAffine sigma(const Point& z0);
SiegelAffine sigma_inv(const Point& z0);

/// Boundary coordinates: u in bU <-> (u', t) with u = (u', t + i|u'|^2).
struct BoundaryCoords {
  std::vector<cd> uprime;
  double t = 0.0;
};
BoundaryCoords to_boundary_coords(const Point& u);
Point from_boundary_coords(const BoundaryCoords& c);
/// (u', t + i(|u'|^2 + h)); rho of the result is h.
Point from_slice_coords(std::span<const cd> uprime, double t, double h);

double bergman_metric(const Point& u, const Point& v);

void require_same_dim(int n1, int n2, const char* what);

}  // namespace siegel
