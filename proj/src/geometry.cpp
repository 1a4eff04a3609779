#include "siegel/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace siegel {

void require_same_dim(int n1, int n2, const char* what) {
  if (n1 != n2) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(n1) +
                         " vs " + std::to_string(n2) + ")");
  }
}

Point::Point(std::vector<cd> zprime, cd zn) : zprime_(std::move(zprime)), zn_(zn) {}

Point Point::i_point(int n) {
  if (n < 1) throw DimensionError("Point::i_point: n must be >= 1");
  return Point(std::vector<cd>(static_cast<std::size_t>(n - 1)), kI);
}

cd Point::coord(int j) const {
  if (j < 0 || j >= dim()) throw DimensionError("Point::coord: index out of range");
  return j == dim() - 1 ? zn_ : zprime_[static_cast<std::size_t>(j)];
}

double Point::norm_prime_sq() const {
  double s = 0.0;
  for (const cd& c : zprime_) s += std::norm(c);
  return s;
}

double Point::norm() const { return std::sqrt(norm_prime_sq() + std::norm(zn_)); }

Region Point::classify() const {
  const double r = rho(*this);
  const double tol = 1e-12 * (1.0 + norm_prime_sq() + std::norm(zn_));
  if (std::abs(r) <= tol) return Region::Boundary;
  return r > 0.0 ? Region::Interior : Region::Exterior;
}

double BallPoint::norm_sq() const {
  double s = 0.0;
  for (const cd& c : xi) s += std::norm(c);
  return s;
}

double rho(const Point& z) { return z.zn().imag() - z.norm_prime_sq(); }

cd rho(const Point& z, const Point& w) {
  require_same_dim(z.dim(), w.dim(), "rho(z, w)");
  cd r = 0.5 * kI * (std::conj(w.zn()) - z.zn());
  const auto zp = z.zprime();
  const auto wp = w.zprime();
  for (std::size_t j = 0; j < zp.size(); ++j) r -= zp[j] * std::conj(wp[j]);
  return r;
}

Point cayley(const BallPoint& xi) {
  if (xi.xi.empty()) throw DimensionError("cayley: empty ball point");
  const cd xn = xi.xi.back();
  const cd den = 1.0 + xn;
  if (den == cd(0.0, 0.0)) throw DomainError("cayley: pole at xi = -e_n");
  std::vector<cd> zp(xi.xi.begin(), xi.xi.end() - 1);
  for (cd& c : zp) c /= den;
  return Point(std::move(zp), kI * (1.0 - xn) / den);
}

BallPoint cayley_inv(const Point& z) {
  const cd den = kI + z.zn();
  if (den == cd(0.0, 0.0)) throw DomainError("cayley_inv: pole at z_n = -i");
  BallPoint out;
  out.xi.reserve(static_cast<std::size_t>(z.dim()));
  for (const cd& c : z.zprime()) out.xi.push_back(2.0 * kI * c / den);
  out.xi.push_back((kI - z.zn()) / den);
  return out;
}

double jacobian_phi(const BallPoint& xi) {
  if (xi.xi.empty()) throw DimensionError("jacobian_phi: empty ball point");
  const double m = std::abs(1.0 + xi.xi.back());
  if (m == 0.0) throw DomainError("jacobian_phi: pole at xi = -e_n");
  return 4.0 / std::pow(m, 2.0 * (xi.dim() + 1));
}

double jacobian_phi_inv(const Point& z) {
  const double m = std::abs(rho(z, Point::i_point(z.dim())));
  if (m == 0.0) throw DomainError("jacobian_phi_inv: pole at z_n = -i");
  return 1.0 / (4.0 * std::pow(m, 2.0 * (z.dim() + 1)));
}

HeisenbergElement heis_mul(const HeisenbergElement& h1, const HeisenbergElement& h2) {
  require_same_dim(h1.dim(), h2.dim(), "heis_mul");
  HeisenbergElement out;
  out.zeta.resize(h1.zeta.size());
  cd dot{0.0, 0.0};
  for (std::size_t j = 0; j < h1.zeta.size(); ++j) {
    out.zeta[j] = h1.zeta[j] + h2.zeta[j];
    dot += h1.zeta[j] * std::conj(h2.zeta[j]);
  }
  out.t = h1.t + h2.t + 2.0 * dot.imag();
  return out;
}

HeisenbergElement heis_inv(const HeisenbergElement& h) {
  HeisenbergElement out{h.zeta, -h.t};
  for (cd& c : out.zeta) c = -c;
  return out;
}

SiegelAffine heis_map(const HeisenbergElement& h) {
  SiegelAffine m;
  m.n = h.dim();
  m.a = 1.0;
  m.b = h.zeta;
  m.d.resize(h.zeta.size());
  double nz = 0.0;
  for (std::size_t j = 0; j < h.zeta.size(); ++j) {
    m.d[j] = 2.0 * kI * std::conj(h.zeta[j]);
    nz += std::norm(h.zeta[j]);
  }
  m.e = cd(h.t, nz);
  return m;
}

Point heis_act(const HeisenbergElement& h, const Point& z) {
  require_same_dim(h.dim(), z.dim(), "heis_act");
  return heis_map(h)(z);
}

SiegelAffine dilation_map(int n, double r) {
  if (!(r > 0.0)) throw DomainError("dilation: r must be positive");
  SiegelAffine m;
  m.n = n;
  m.a = r;
  m.b.assign(static_cast<std::size_t>(n - 1), cd{});
  m.d.assign(static_cast<std::size_t>(n - 1), cd{});
  return m;
}

Point dilate(double r, const Point& z) { return dilation_map(z.dim(), r)(z); }

Point SiegelAffine::operator()(const Point& z) const {
  require_same_dim(n, z.dim(), "SiegelAffine");
  const auto zp = z.zprime();
  std::vector<cd> out(zp.size());
  cd zn = a * a * z.zn() + e;
  for (std::size_t j = 0; j < zp.size(); ++j) {
    out[j] = a * zp[j] + b[j];
    zn += d[j] * zp[j];
  }
  return Point(std::move(out), zn);
}

SiegelAffine SiegelAffine::then(const SiegelAffine& outer) const {
  require_same_dim(n, outer.n, "SiegelAffine::then");
  SiegelAffine m;
  m.n = n;
  m.a = a * outer.a;
  const double a2o = outer.a * outer.a;
  m.b.resize(b.size());
  m.d.resize(d.size());
  m.e = a2o * e + outer.e;
  for (std::size_t j = 0; j < b.size(); ++j) {
    m.b[j] = outer.a * b[j] + outer.b[j];
    m.d[j] = a2o * d[j] + a * outer.d[j];
    m.e += outer.d[j] * b[j];
  }
  return m;
}

SiegelAffine SiegelAffine::inverse() const {
  SiegelAffine m;
  m.n = n;
  m.a = 1.0 / a;
  m.b.resize(b.size());
  m.d.resize(d.size());
  cd db{0.0, 0.0};
  for (std::size_t j = 0; j < b.size(); ++j) {
    m.b[j] = -b[j] / a;
    m.d[j] = -d[j] / (a * a * a);
    db += d[j] * b[j];
  }
  m.e = (-e + db / a) / (a * a);
  return m;
}

double SiegelAffine::boundary_jacobian() const { return std::pow(a, 2.0 * n); }

double SiegelAffine::volume_jacobian() const { return std::pow(a, 2.0 * (n + 1)); }

HeisenbergElement heis_to_axis(const Point& z0) {
  HeisenbergElement h;
  h.zeta.assign(z0.zprime().begin(), z0.zprime().end());
  for (cd& c : h.zeta) c = -c;
  h.t = -z0.zn().real();
  return h;
}

SiegelAffine sigma(const Point& z0) {
  const double r = rho(z0);
  if (!(r > 0.0)) throw DomainError("sigma: base point must be interior");
  return heis_map(heis_to_axis(z0)).then(dilation_map(z0.dim(), 1.0 / std::sqrt(r)));
}

SiegelAffine sigma_inv(const Point& z0) {
  const double r = rho(z0);
  if (!(r > 0.0)) throw DomainError("sigma_inv: base point must be interior");
  return dilation_map(z0.dim(), std::sqrt(r)).then(heis_map(heis_inv(heis_to_axis(z0))));
}

BoundaryCoords to_boundary_coords(const Point& u) {
  return BoundaryCoords{std::vector<cd>(u.zprime().begin(), u.zprime().end()), u.zn().real()};
}

Point from_boundary_coords(const BoundaryCoords& c) {
  return from_slice_coords(c.uprime, c.t, 0.0);
}

Point from_slice_coords(std::span<const cd> uprime, double t, double h) {
  double s = 0.0;
  for (const cd& c : uprime) s += std::norm(c);
  return Point(std::vector<cd>(uprime.begin(), uprime.end()), cd(t, s + h));
}

double bergman_metric(const Point& u, const Point& v) {
  const double q = rho(u) * rho(v) / std::norm(rho(u, v));
  const double arg = std::clamp(1.0 - q, 0.0, 1.0);
  return std::atanh(std::sqrt(arg));
}

}  // namespace siegel
