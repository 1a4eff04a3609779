#include "siegel/operators.hpp"

#include <cmath>

#include "siegel/grid.hpp"
#include "siegel/special.hpp"

namespace siegel {

void KernelSpec::validate() const {
  if (n < 1) throw DimensionError("KernelSpec: n must be >= 1");
  if (!(lambda > -1.0)) throw DomainError("KernelSpec: lambda must exceed -1");
}

cd kernel(const KernelSpec& spec, const Point& z, const Point& w) {
  spec.validate();
  require_same_dim(spec.n, z.dim(), "kernel");
  require_same_dim(spec.n, w.dim(), "kernel");
  const double a = -(spec.n + 1.0 + spec.lambda);
  cd k = cpow_principal(rho(z, w), a);
  if (spec.modified) k -= cpow_principal(rho(Point::i_point(spec.n), w), a);
  return k;
}

HoloFun kernel_fun(const KernelSpec& spec, const Point& w) {
  spec.validate();
  const double a = -(spec.n + 1.0 + spec.lambda);
  HoloFun k = HoloFun::kernel_power(w, a);
  if (spec.modified) k = k - HoloFun::constant(spec.n, cpow_principal(rho(Point::i_point(spec.n), w), a));
  return k;
}

IntegralResult project(const KernelSpec& spec, const PointFunction& g, const Point& z, const QuadratureSpec& quad) {
  spec.validate();
  require_same_dim(spec.n, z.dim(), "project");
  return integrate_U([&](const Point& w) { return kernel(spec, z, w) * g(w); }, spec.n, spec.lambda, quad);
}

namespace {

void require_tag(const TaggedFun& f, SpaceKind kind, const char* what) {
  if (f.tag().kind != kind) throw MembershipError(std::string(what) + ": unexpected tag " + f.tag().name());
}

HoloFun normal_derivative(const HoloFun& f, int N) {
  HoloFun d = f;
  for (int k = 0; k < N; ++k) d = d.apply_L(f.dim() - 1);
  return d;
}

}  // namespace

IntegralResult reproduce(const TaggedFun& f, int N, double lambda, const Point& z, const QuadratureSpec& quad) {
  require_tag(f, SpaceKind::BlochTilde, "reproduce");
  if (N < 0) throw DomainError("reproduce: N must be >= 0");
  const int n = f.fun().dim();
  const HoloFun d = normal_derivative(f.fun(), N);
  const KernelSpec ks{n, lambda, true};
  auto r = project(ks, [&](const Point& w) { return std::pow(rho(w), N) * d(w); }, z, quad);
  const cd b = b_N(N, lambda);
  r.value *= b;
  r.abs_integral *= std::abs(b);
  r.stderr_estimate *= std::abs(b);
  r.richardson_delta *= std::abs(b);
  return r;
}

IntegralResult pairing(const TaggedFun& f, const TaggedFun& g, double lambda, const QuadratureSpec& quad) {
  require_tag(f, SpaceKind::BlochTilde, "pairing(f)");
  if (g.tag().kind != SpaceKind::BergmanA1 && g.tag().kind != SpaceKind::S_t)
    throw MembershipError("pairing: g must carry an A^1_lambda witness, got " + g.tag().name());
  const int n = f.fun().dim();
  require_same_dim(n, g.fun().dim(), "pairing");
  const HoloFun d = normal_derivative(f.fun(), 1);
  return integrate_U([&](const Point& w) { return rho(w) * d(w) * std::conj(g(w)); }, n, lambda, quad);
}

PairingBound pairing_bound(const TaggedFun& f, const TaggedFun& g, double lambda, const QuadratureSpec& quad) {
  const int n = f.fun().dim();
  PairingBound b;
  b.derivative_sup = weighted_derivative_sup(f.fun(), MultiIndex::unit(n, n - 1), standard_grid(n, quad.seed, 4));
  b.g_norm = bergman_norm_U(g.fun(), n, 1.0, lambda, quad);
  return b;
}

PairingIdentity pairing_identity(const TaggedFun& f, const TaggedFun& g, double lambda, const QuadratureSpec& quad) {
  require_tag(f, SpaceKind::BlochTilde, "pairing_identity(f)");
  const int n = f.fun().dim();
  require_same_dim(n, g.fun().dim(), "pairing_identity");
  PairingIdentity out;
  out.lhs = integrate_U([&](const Point& w) { return f(w) * std::conj(g(w)); }, n, lambda, quad);
  out.rhs_integral = pairing(f, g, lambda, quad);
  out.rhs = b_N(1, lambda) * out.rhs_integral.value;
  return out;
}

double DiscreteMeasure::total_variation() const {
  double s = 0.0;
  for (const auto& a : atoms) s += std::abs(a.second);
  return s;
}

cd measure_embed(const DiscreteMeasure& mu, double lambda, const Point& w) {
  if (!(lambda > -1.0)) throw DomainError("measure_embed: lambda must exceed -1");
  cd g{0.0, 0.0};
  for (const auto& [z, c] : mu.atoms) {
    if (!(rho(z) > 0.0)) throw DomainError("measure_embed: atoms must be interior");
    g += c * rho(z) * cpow_principal(rho(w, z), -(w.dim() + 2.0 + lambda));
  }
  return g;
}

double measure_embed_constant(int n, double lambda) {
  const double g = gamma_fn(0.5 * (n + 2.0 + lambda));
  return c_lambda(n, lambda) * 4.0 * std::pow(kPi, n) * gamma_fn(1.0 + lambda) / (g * g);
}

double measure_embed_norm(const DiscreteMeasure& mu, double lambda, const QuadratureSpec& quad) {
  if (mu.atoms.empty()) return 0.0;
  const int n = mu.atoms.front().first.dim();
  return bergman_norm_U([&](const Point& w) { return measure_embed(mu, lambda, w); }, n, 1.0, lambda, quad);
}

cd hardy_transfer(const PointFunction& f, int n, double p, const BallPoint& xi) {
  require_same_dim(n, xi.dim(), "hardy_transfer");
  if (!(p > 0.0)) throw DomainError("hardy_transfer: p must be positive");
  const cd base = 1.0 + xi.xi.back();
  if (base == cd(0.0, 0.0)) throw DomainError("hardy_transfer: pole at xi = -e_n");
  return hardy_constant(n, p) * cpow_principal(base, -2.0 * n / p) * f(cayley(xi));
}

BallFunction hardy_transfer_fun(PointFunction f, int n, double p) {
  return [f = std::move(f), n, p](const BallPoint& xi) { return hardy_transfer(f, n, p, xi); };
}

cd kernel_derivative_constant(double s, const MultiIndex& alpha) {
  // L_j rho^{-q} = -q rho^{-q-1} (conj z_j - conj w_j) and L_n rho^{-q} = (i q / 2) rho^{-q-1};
  // the polynomial factor is annihilated by every L_k.
  const int n = alpha.dim();
  cd c{1.0, 0.0};
  double q = s;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < alpha[j]; ++k) {
      c *= -q;
      if (j == n - 1) c *= cd(0.0, -0.5);
      q += 1.0;
    }
  }
  return c;
}

HoloFun kernel_derivative_form(const Point& w, double s, const MultiIndex& alpha) {
  const int n = w.dim();
  require_same_dim(n, alpha.dim(), "kernel_derivative_form");
  HoloFun out = HoloFun::kernel_power(w, -s - alpha.order()) * kernel_derivative_constant(s, alpha);
  for (int j = 0; j < n - 1; ++j) {
    const HoloFun factor =
        HoloFun::conj_coordinate(n, j) - HoloFun::constant(n, std::conj(w.zprime()[static_cast<std::size_t>(j)]));
    for (int k = 0; k < alpha[j]; ++k) out = out * factor;
  }
  return out;
}

IntegralResult modified_kernel_l1(int n, double lambda, const Point& z, const QuadratureSpec& quad) {
  const KernelSpec ks{n, lambda, true};
  // Centred at z. The peak of K(i, .) is resolved as long as z approaches the
  // ideal boundary vertically or along the real axis; horizontal escape
  // (z = x + i, x large) leaves it unresolved.
  QuadratureSpec at_z = quad;
  at_z.center = z;
  return integrate_U([&](const Point& w) { return cd(std::abs(kernel(ks, z, w)), 0.0); }, n, lambda, at_z);
}

double log_growth(const Point& z) {
  return 1.0 + std::log(std::norm(rho(z, Point::i_point(z.dim()))) / rho(z));
}

}  // namespace siegel
