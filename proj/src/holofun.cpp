#include "siegel/holofun.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <tuple>

#include "siegel/grid.hpp"
#include "siegel/special.hpp"

namespace siegel {

// ---------------------------------------------------------------------------
// MultiIndex

MultiIndex::MultiIndex(std::vector<int> alpha) : alpha_(std::move(alpha)) {
  if (alpha_.empty()) throw DimensionError("MultiIndex: empty");
  for (int a : alpha_)
    if (a < 0) throw DomainError("MultiIndex: negative entry");
}

MultiIndex MultiIndex::unit(int n, int j) {
  if (j < 0 || j >= n) throw DimensionError("MultiIndex::unit: index out of range");
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  a[static_cast<std::size_t>(j)] = 1;
  return MultiIndex(std::move(a));
}

int MultiIndex::order() const { return std::accumulate(alpha_.begin(), alpha_.end(), 0); }

int MultiIndex::prime_order() const { return order() - alpha_.back(); }

double MultiIndex::bracket() const { return 0.5 * prime_order() + alpha_.back(); }

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  require_same_dim(dim(), other.dim(), "MultiIndex::operator+");
  std::vector<int> out(alpha_);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] += other.alpha_[j];
  return MultiIndex(std::move(out));
}

std::vector<MultiIndex> multi_indices_of_order(int n, int N) {
  std::vector<MultiIndex> out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      a[static_cast<std::size_t>(pos)] = left;
      out.emplace_back(a);
      return;
    }
    for (int k = left; k >= 0; --k) {
      a[static_cast<std::size_t>(pos)] = k;
      self(self, pos + 1, left - k);
    }
  };
  rec(rec, 0, N);
  return out;
}

// ---------------------------------------------------------------------------
// HoloFun

namespace {

using Term = HoloFun::Term;

int cmp_double(double a, double b) { return a < b ? -1 : (b < a ? 1 : 0); }

int cmp_point(const Point& a, const Point& b) {
  if (int c = cmp_double(a.zn().real(), b.zn().real())) return c;
  if (int c = cmp_double(a.zn().imag(), b.zn().imag())) return c;
  const auto pa = a.zprime();
  const auto pb = b.zprime();
  for (std::size_t j = 0; j < pa.size(); ++j) {
    if (int c = cmp_double(pa[j].real(), pb[j].real())) return c;
    if (int c = cmp_double(pa[j].imag(), pb[j].imag())) return c;
  }
  return 0;
}

template <class V>
int cmp_factors(const std::vector<std::pair<Point, V>>& a, const std::vector<std::pair<Point, V>>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (int c = cmp_point(a[k].first, b[k].first)) return c;
    if (a[k].second != b[k].second) return a[k].second < b[k].second ? -1 : 1;
  }
  return 0;
}

// Orders terms by everything except the coefficient.
int cmp_key(const Term& a, const Term& b) {
  if (a.z_pow != b.z_pow) return a.z_pow < b.z_pow ? -1 : 1;
  if (a.zbar_pow != b.zbar_pow) return a.zbar_pow < b.zbar_pow ? -1 : 1;
  if (int c = cmp_factors(a.kernels, b.kernels)) return c;
  return cmp_factors(a.logs, b.logs);
}

// Multiplies the factor rho(., w)^v into a sorted factor list.
template <class V>
void merge_factor(std::vector<std::pair<Point, V>>& list, const Point& w, V v) {
  auto it = std::lower_bound(list.begin(), list.end(), w,
                             [](const auto& e, const Point& p) { return cmp_point(e.first, p) < 0; });
  if (it != list.end() && cmp_point(it->first, w) == 0) {
    it->second += v;
    if (it->second == V{}) list.erase(it);
  } else if (v != V{}) {
    list.insert(it, {w, v});
  }
}

Term unit_term(int n) {
  Term t;
  t.z_pow.assign(static_cast<std::size_t>(n), 0);
  t.zbar_pow.assign(static_cast<std::size_t>(n - 1), 0);
  return t;
}

Term multiply_terms(const Term& a, const Term& b) {
  Term t = a;
  t.coeff *= b.coeff;
  for (std::size_t j = 0; j < t.z_pow.size(); ++j) t.z_pow[j] += b.z_pow[j];
  for (std::size_t j = 0; j < t.zbar_pow.size(); ++j) t.zbar_pow[j] += b.zbar_pow[j];
  for (const auto& [w, s] : b.kernels) merge_factor(t.kernels, w, s);
  for (const auto& [w, m] : b.logs) merge_factor(t.logs, w, m);
  return t;
}

// d/dz_k of rho(z, w) (a constant).
cd d_rho(const Point& w, int k) {
  if (k == w.dim() - 1) return cd(0.0, -0.5);
  return -std::conj(w.zprime()[static_cast<std::size_t>(k)]);
}

cd int_power(cd base, int k) {
  cd r{1.0, 0.0};
  for (int j = 0; j < k; ++j) r *= base;
  return r;
}

}  // namespace

HoloFun::HoloFun(int n) : n_(n) {
  if (n < 1) throw DimensionError("HoloFun: n must be >= 1");
}

HoloFun HoloFun::constant(int n, cd c) {
  HoloFun f(n);
  Term t = unit_term(n);
  t.coeff = c;
  f.terms_.push_back(std::move(t));
  f.canonicalize();
  return f;
}

HoloFun HoloFun::coordinate(int n, int j) {
  if (j < 0 || j >= n) throw DimensionError("HoloFun::coordinate: index out of range");
  HoloFun f(n);
  Term t = unit_term(n);
  t.z_pow[static_cast<std::size_t>(j)] = 1;
  f.terms_.push_back(std::move(t));
  return f;
}

HoloFun HoloFun::conj_coordinate(int n, int j) {
  if (j < 0 || j >= n - 1) throw DimensionError("HoloFun::conj_coordinate: index out of range");
  HoloFun f(n);
  Term t = unit_term(n);
  t.zbar_pow[static_cast<std::size_t>(j)] = 1;
  f.terms_.push_back(std::move(t));
  return f;
}

HoloFun HoloFun::kernel_power(const Point& w0, double s) {
  if (w0.classify() == Region::Exterior) throw DomainError("HoloFun::kernel_power: base point outside U");
  const int n = w0.dim();
  HoloFun f(n);
  Term t = unit_term(n);
  if (s != 0.0) t.kernels.push_back({w0, s});
  f.terms_.push_back(std::move(t));
  return f;
}

HoloFun HoloFun::log_kernel(const Point& w0) {
  if (w0.classify() == Region::Exterior) throw DomainError("HoloFun::log_kernel: base point outside U");
  const int n = w0.dim();
  HoloFun f(n);
  Term t = unit_term(n);
  t.logs.push_back({w0, 1});
  f.terms_.push_back(std::move(t));
  return f;
}

HoloFun HoloFun::shifted_power(int n, double s) {
  return kernel_power(Point::i_point(n), s) * std::exp(s * std::log(cd(0.0, 2.0)));
}

bool HoloFun::holomorphic() const {
  for (const auto& t : terms_)
    for (int b : t.zbar_pow)
      if (b != 0) return false;
  return true;
}

cd HoloFun::operator()(const Point& z) const {
  require_same_dim(n_, z.dim(), "HoloFun::eval");
  cd total{0.0, 0.0};
  for (const auto& t : terms_) {
    cd v = t.coeff;
    for (int j = 0; j < n_; ++j) v *= int_power(z.coord(j), t.z_pow[static_cast<std::size_t>(j)]);
    for (int j = 0; j < n_ - 1; ++j)
      v *= int_power(std::conj(z.coord(j)), t.zbar_pow[static_cast<std::size_t>(j)]);
    for (const auto& [w, s] : t.kernels) v *= cpow_principal(rho(z, w), s);
    for (const auto& [w, m] : t.logs) v *= int_power(log_principal(rho(z, w)), m);
    total += v;
  }
  return total;
}

HoloFun HoloFun::operator+(const HoloFun& g) const {
  require_same_dim(n_, g.n_, "HoloFun::operator+");
  HoloFun out(n_);
  out.terms_ = terms_;
  out.terms_.insert(out.terms_.end(), g.terms_.begin(), g.terms_.end());
  out.canonicalize();
  return out;
}

HoloFun HoloFun::operator-(const HoloFun& g) const { return *this + (-g); }

HoloFun HoloFun::operator*(const HoloFun& g) const {
  require_same_dim(n_, g.n_, "HoloFun::operator*");
  HoloFun out(n_);
  for (const auto& a : terms_)
    for (const auto& b : g.terms_) out.terms_.push_back(multiply_terms(a, b));
  out.canonicalize();
  return out;
}

HoloFun HoloFun::operator*(cd c) const {
  HoloFun out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  out.canonicalize();
  return out;
}

HoloFun operator*(cd c, const HoloFun& f) { return f * c; }

HoloFun HoloFun::partial(int k) const {
  if (k < 0 || k >= n_) throw DimensionError("HoloFun::partial: index out of range");
  HoloFun out(n_);
  const auto kk = static_cast<std::size_t>(k);
  for (const auto& t : terms_) {
    if (t.z_pow[kk] > 0) {
      Term d = t;
      d.coeff *= static_cast<double>(t.z_pow[kk]);
      d.z_pow[kk] -= 1;
      out.terms_.push_back(std::move(d));
    }
    for (std::size_t q = 0; q < t.kernels.size(); ++q) {
      const auto& [w, s] = t.kernels[q];
      const cd dr = d_rho(w, k);
      if (dr == cd(0.0, 0.0)) continue;
      Term d = t;
      d.coeff *= s * dr;
      d.kernels.erase(d.kernels.begin() + static_cast<std::ptrdiff_t>(q));
      merge_factor(d.kernels, w, s - 1.0);
      out.terms_.push_back(std::move(d));
    }
    for (std::size_t q = 0; q < t.logs.size(); ++q) {
      const auto& [w, m] = t.logs[q];
      const cd dr = d_rho(w, k);
      if (dr == cd(0.0, 0.0)) continue;
      Term d = t;
      d.coeff *= static_cast<double>(m) * dr;
      d.logs.erase(d.logs.begin() + static_cast<std::ptrdiff_t>(q));
      merge_factor(d.logs, w, m - 1);
      merge_factor(d.kernels, w, -1.0);
      out.terms_.push_back(std::move(d));
    }
  }
  out.canonicalize();
  return out;
}

HoloFun HoloFun::apply_L(int j) const {
  if (j < 0 || j >= n_) throw DimensionError("HoloFun::apply_L: index out of range");
  if (j == n_ - 1) return partial(j);
  return partial(j) + conj_coordinate(n_, j) * partial(n_ - 1) * cd(0.0, 2.0);
}

HoloFun HoloFun::apply_L_alpha(const MultiIndex& alpha) const {
  require_same_dim(n_, alpha.dim(), "HoloFun::apply_L_alpha");
  HoloFun out = *this;
  for (int j = n_ - 1; j >= 0; --j)
    for (int k = 0; k < alpha[j]; ++k) out = out.apply_L(j);
  return out;
}

void HoloFun::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return cmp_key(a, b) < 0; });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && cmp_key(merged.back(), t) == 0) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == cd(0.0, 0.0); });
  terms_ = std::move(merged);
}

bool HoloFun::approx_equal(const HoloFun& g, double tol) const {
  const HoloFun diff = *this - g;
  double scale = 1.0;
  for (const auto& t : terms_) scale = std::max(scale, std::abs(t.coeff));
  for (const auto& t : g.terms_) scale = std::max(scale, std::abs(t.coeff));
  for (const auto& t : diff.terms_)
    if (std::abs(t.coeff) > tol * scale) return false;
  return true;
}

std::string HoloFun::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os.precision(6);
  auto point_str = [](const Point& w) {
    std::ostringstream ps;
    ps.precision(6);
    ps << "(";
    for (const cd& c : w.zprime()) ps << c << ",";
    ps << w.zn() << ")";
    return ps.str();
  };
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    if (k) os << " + ";
    os << t.coeff;
    for (int j = 0; j < n_; ++j)
      if (int e = t.z_pow[static_cast<std::size_t>(j)]) os << "*z" << j + 1 << "^" << e;
    for (int j = 0; j < n_ - 1; ++j)
      if (int e = t.zbar_pow[static_cast<std::size_t>(j)]) os << "*conj(z" << j + 1 << ")^" << e;
    for (const auto& [w, s] : t.kernels) os << "*rho(z," << point_str(w) << ")^" << s;
    for (const auto& [w, m] : t.logs) os << "*log(rho(z," << point_str(w) << "))^" << m;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Cauchy-integral oracles

namespace {

Point shift_coord(const Point& z, int j, cd delta) {
  if (j == z.dim() - 1) return z.with_zn(z.zn() + delta);
  std::vector<cd> zp(z.zprime().begin(), z.zprime().end());
  zp[static_cast<std::size_t>(j)] += delta;
  return Point(std::move(zp), z.zn());
}

// Radius keeping every node inside U when `active` coordinates move at once.
double default_radius(const Point& z, int j, int active) {
  const double r = rho(z);
  if (!(r > 0.0)) throw DomainError("cauchy: base point must be interior");
  if (j == z.dim() - 1) return std::min(0.1, r / (4.0 * active));
  const double zj = std::abs(z.coord(j));
  return std::min(0.1, r / (4.0 * active * (2.0 * zj + 1.0)));
}

}  // namespace

cd cauchy_derivative(const PointFunction& f, const Point& z, int j, int m, std::optional<double> radius,
                     int nodes) {
  if (j < 0 || j >= z.dim()) throw DimensionError("cauchy_derivative: index out of range");
  if (m < 0) throw DomainError("cauchy_derivative: negative order");
  const double r = radius ? *radius : default_radius(z, j, 1);
  cd acc{0.0, 0.0};
  for (int k = 0; k < nodes; ++k) {
    const double th = 2.0 * kPi * k / nodes;
    const Point zk = shift_coord(z, j, std::polar(r, th));
    if (!(rho(zk) > 0.0)) throw DomainError("cauchy_derivative: circle leaves U");
    acc += f(zk) * std::polar(1.0, -m * th);
  }
  return acc * factorial(m) / (std::pow(r, m) * nodes);
}

cd cauchy_mixed(const PointFunction& f, const Point& z, const MultiIndex& beta, std::optional<double> radius,
                int nodes) {
  require_same_dim(z.dim(), beta.dim(), "cauchy_mixed");
  std::vector<int> active;
  for (int j = 0; j < z.dim(); ++j)
    if (beta[j] > 0) active.push_back(j);
  if (active.empty()) return f(z);
  const int na = static_cast<int>(active.size());
  std::vector<double> radii;
  for (int j : active) radii.push_back(radius ? *radius : default_radius(z, j, na));

  std::vector<int> idx(active.size(), 0);
  cd acc{0.0, 0.0};
  for (;;) {
    Point zk = z;
    double phase = 0.0;
    for (std::size_t a = 0; a < active.size(); ++a) {
      const double th = 2.0 * kPi * idx[a] / nodes;
      zk = shift_coord(zk, active[a], std::polar(radii[a], th));
      phase -= beta[active[a]] * th;
    }
    if (!(rho(zk) > 0.0)) throw DomainError("cauchy_mixed: polydisc leaves U");
    acc += f(zk) * std::polar(1.0, phase);
    std::size_t a = 0;
    while (a < idx.size() && ++idx[a] == nodes) idx[a++] = 0;
    if (a == idx.size()) break;
  }
  double scale = 1.0;
  for (std::size_t a = 0; a < active.size(); ++a) {
    const int b = beta[active[a]];
    scale *= factorial(b) / (std::pow(radii[a], b) * nodes);
  }
  return acc * scale;
}

cd cauchy_L_alpha(const PointFunction& f, const Point& z, const MultiIndex& alpha, std::optional<double> radius,
                  int nodes) {
  require_same_dim(z.dim(), alpha.dim(), "cauchy_L_alpha");
  const int n = z.dim();
  const int m = n - 1;
  // L_j = d_j + c_j d_n with c_j = 2i conj(z_j) frozen at z: expand binomially.
  std::vector<int> k(static_cast<std::size_t>(m), 0);
  cd total{0.0, 0.0};
  for (;;) {
    std::vector<int> beta(static_cast<std::size_t>(n), 0);
    cd coef{1.0, 0.0};
    int extra_n = 0;
    for (int j = 0; j < m; ++j) {
      const int a = alpha[j];
      const int kj = k[static_cast<std::size_t>(j)];
      beta[static_cast<std::size_t>(j)] = kj;
      extra_n += a - kj;
      coef *= factorial(a) / (factorial(kj) * factorial(a - kj)) *
              int_power(2.0 * kI * std::conj(z.coord(j)), a - kj);
    }
    beta[static_cast<std::size_t>(m)] = alpha[m] + extra_n;
    if (coef != cd(0.0, 0.0)) total += coef * cauchy_mixed(f, z, MultiIndex(beta), radius, nodes);
    int j = 0;
    while (j < m && ++k[static_cast<std::size_t>(j)] > alpha[j]) k[static_cast<std::size_t>(j++)] = 0;
    if (j == m) break;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Semi-norm estimators

namespace {

struct GradientParts {
  std::vector<HoloFun> tangential;  // L_j f, j < n-1
  HoloFun normal;                   // d_n f
};

GradientParts gradient_parts(const HoloFun& f) {
  GradientParts g{{}, f.partial(f.dim() - 1)};
  for (int j = 0; j < f.dim() - 1; ++j) g.tangential.push_back(f.apply_L(j));
  return g;
}

double gradient_from_parts(const GradientParts& g, const Point& z) {
  const double r = rho(z);
  double s = 0.0;
  for (const auto& lj : g.tangential) s += std::norm(lj(z));
  return std::sqrt(2.0 * r * s + 8.0 * r * r * std::norm(g.normal(z)));
}

}  // namespace

double invariant_gradient(const HoloFun& f, const Point& z) {
  require_same_dim(f.dim(), z.dim(), "invariant_gradient");
  return gradient_from_parts(gradient_parts(f), z);
}

double bloch_seminorm_estimate(const HoloFun& f, const std::vector<Point>& grid) {
  if (grid.empty()) throw DomainError("bloch_seminorm_estimate: empty grid");
  const auto parts = gradient_parts(f);
  double best = 0.0;
  for (const auto& z : grid) best = std::max(best, gradient_from_parts(parts, z));
  return best;
}

double weighted_derivative_sup(const HoloFun& f, const MultiIndex& alpha, const std::vector<Point>& grid) {
  if (grid.empty()) throw DomainError("weighted_derivative_sup: empty grid");
  const HoloFun d = f.apply_L_alpha(alpha);
  const double w = alpha.bracket();
  double best = 0.0;
  for (const auto& z : grid) best = std::max(best, std::pow(rho(z), w) * std::abs(d(z)));
  return best;
}

// ---------------------------------------------------------------------------
// Certificates

std::string SpaceTag::name() const {
  std::ostringstream os;
  switch (kind) {
    case SpaceKind::S_t: os << "S_t(t=" << param << ")"; break;
    case SpaceKind::Korenblum: os << "Korenblum(t=" << param << ")"; break;
    case SpaceKind::BlochTilde: os << "BlochTilde"; break;
    case SpaceKind::BergmanA1: os << "BergmanA1(lambda=" << param << ",t=" << witness_exponent << ")"; break;
    case SpaceKind::Hardy: os << "Hardy(p=" << param << ",t=" << witness_exponent << ")"; break;
  }
  return os.str();
}

namespace {

double witness_sup(const HoloFun& f, const SpaceTag& tag, const std::vector<Point>& grid) {
  switch (tag.kind) {
    case SpaceKind::BlochTilde:
      return bloch_seminorm_estimate(f, grid);
    case SpaceKind::Korenblum: {
      double best = 0.0;
      for (const auto& z : grid) best = std::max(best, std::pow(rho(z), tag.param) * std::abs(f(z)));
      return best;
    }
    default: {
      double best = 0.0;
      for (const auto& z : grid)
        best = std::max(best, std::pow(std::abs(z.zn() + kI), tag.witness_exponent) * std::abs(f(z)));
      return best;
    }
  }
}

}  // namespace

Certificate certify(const HoloFun& f, const SpaceTag& tag, std::uint64_t seed) {
  Certificate c;
  const int n = f.dim();
  if (!f.holomorphic()) {
    c.reason = "function carries conj(z') factors";
    return c;
  }
  if (tag.kind == SpaceKind::BlochTilde && std::abs(f(Point::i_point(n))) > 1e-12) {
    c.reason = "f(i) != 0";
    return c;
  }
  if (tag.kind == SpaceKind::BergmanA1 && !(tag.witness_exponent > n + 1 + tag.param)) {
    c.reason = "witness exponent must exceed n+1+lambda";
    return c;
  }
  if (tag.kind == SpaceKind::Hardy && !(tag.witness_exponent * tag.param > n)) {
    c.reason = "witness exponent times p must exceed n";
    return c;
  }
  c.bound = witness_sup(f, tag, standard_grid(n, seed, 1));
  c.refined_bound = witness_sup(f, tag, standard_grid(n, seed, 4));
  if (!std::isfinite(c.bound) || !std::isfinite(c.refined_bound)) {
    c.reason = "witness sup is not finite";
    return c;
  }
  c.growth = c.bound > 0.0 ? c.refined_bound / c.bound - 1.0 : (c.refined_bound > 0.0 ? INFINITY : 0.0);
  c.passed = c.growth < 0.05;
  if (!c.passed) c.reason = "witness sup grows under refinement";
  return c;
}

TaggedFun::TaggedFun(HoloFun f, SpaceTag tag, std::uint64_t seed)
    : f_(std::move(f)), tag_(tag), cert_(certify(f_, tag_, seed)) {
  if (!cert_.passed) throw MembershipError(tag_.name() + ": " + cert_.reason);
}

}  // namespace siegel
