#include "siegel/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "siegel/catalog.hpp"
#include "siegel/grid.hpp"
#include "siegel/operators.hpp"
#include "siegel/regression_constants.hpp"
#include "siegel/special.hpp"

namespace siegel {

std::string metric_name(Metric m) {
  switch (m) {
    case Metric::Relative: return "relative";
    case Metric::PureRelative: return "pure_relative";
    case Metric::Scaled: return "scaled";
    case Metric::Cancellation: return "cancellation";
    case Metric::Bound: return "bound";
    case Metric::Count: return "count";
    case Metric::Absolute: return "absolute";
  }
  return "unknown";
}

void finalize(VerificationReport& r, double scale) {
  const double e = std::abs(r.expected);
  const double diff = std::abs(r.expected - r.actual);
  switch (r.metric) {
    case Metric::Relative: r.residual = diff / std::max(1.0, e); break;
    case Metric::PureRelative: r.residual = e > 0.0 ? diff / e : diff; break;
    case Metric::Scaled: r.residual = diff / (1.0 + e); break;
    case Metric::Cancellation:
      r.residual = scale > 0.0 ? std::abs(r.actual) / scale : std::numeric_limits<double>::infinity();
      break;
    case Metric::Bound: r.residual = std::max(0.0, r.actual.real() - r.expected.real()); break;
    case Metric::Count: r.residual = r.actual.real(); break;
    case Metric::Absolute: r.residual = diff; break;
  }
  r.passed = std::isfinite(r.residual) && r.residual <= r.tolerance;
}

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> t{
      {"tensor", 1e-3},       {"mc", 2e-2},          {"cancellation", 1e-3}, {"mc_cancellation", 1e-2},
      {"projection", 1e-2},   {"reproducing", 1e-2}, {"duality", 1e-2},      {"embedding", 1e-3},
      {"hardy", 1e-2},        {"hardy_closed_form", 1e-3},                   {"derivatives", 1e-10},
      {"geometry", 1e-12},    {"jacobian", 1e-6},    {"linearity", 1e-12},
  };
  return t;
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids{"identities", "cancellation", "projection", "reproducing", "duality",
                                            "embedding",  "hardy",        "seminorms",  "geometry",    "derivatives"};
  return ids;
}

bool is_suite(const std::string& id) {
  return id == "all" || std::find(suite_ids().begin(), suite_ids().end(), id) != suite_ids().end();
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

namespace {

std::string format_complex(cd c) {
  std::string s = format_number(c.real());
  const double im = c.imag();
  s += (im < 0.0 || (im == 0.0 && std::signbit(im))) ? "-" : "+";
  s += format_number(std::abs(im)) + "i";
  return s;
}

}  // namespace

std::string format_point(const Point& z) {
  if (z.dim() == 1) return format_complex(z.zn());
  std::string s = "(";
  for (cd c : z.zprime()) s += format_complex(c) + ";";
  return s + format_complex(z.zn()) + ")";
}

// ---------------------------------------------------------------------------
// Measurements shared with the constant fitter.

std::vector<Point> kernel_growth_points() {
  std::vector<Point> out;
  for (int e = 2; e <= 16; e += 2) {
    const double small = std::exp2(-e);
    out.emplace_back(cd(0.0, small));
    out.emplace_back(cd(1.0, small));
    out.emplace_back(cd(0.0, std::exp2(e)));
  }
  return out;
}

double kernel_growth_ratio(double lambda, const Point& z, const QuadratureSpec& quad) {
  return modified_kernel_l1(z.dim(), lambda, z, quad).value.real() / log_growth(z);
}

double SandwichValues::max_ratio() const {
  double m = 1.0;
  for (double a : {bloch, normal, full})
    for (double b : {bloch, normal, full})
      if (b > 0.0) m = std::max(m, a / b);
  return m;
}

SandwichValues sandwich_values(const HoloFun& f, int N, const std::vector<Point>& grid) {
  const int n = f.dim();
  SandwichValues v;
  v.bloch = bloch_seminorm_estimate(f, grid);
  std::vector<int> normal(static_cast<std::size_t>(n), 0);
  normal.back() = N;
  v.normal = weighted_derivative_sup(f, MultiIndex(normal), grid);
  for (const auto& alpha : multi_indices_of_order(n, N)) v.full += weighted_derivative_sup(f, alpha, grid);
  return v;
}

double hardy_pointwise_ratio(const HoloFun& f, double p, double norm, const std::vector<Point>& grid) {
  double m = 0.0;
  for (const auto& z : grid) m = std::max(m, std::abs(f(z)) * std::pow(rho(z), z.dim() / p));
  return m / norm;
}

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

std::optional<double> kernel_log_constant(double lambda) {
  for (const auto& c : regression::kKernelLogBound)
    if (c.lambda == lambda) return c.value;
  return std::nullopt;
}

std::optional<double> hardy_pointwise_constant(int n, double p) {
  for (const auto& c : regression::kHardyPointwise)
    if (c.n == n && c.p == p) return c.value;
  return std::nullopt;
}

class Collector {
 public:
  explicit Collector(const SuiteConfig& cfg) : cfg_(cfg) {
    for (const auto& [k, v] : cfg.tolerances)
      if (!default_tolerances().count(k)) throw std::invalid_argument("unknown tolerance class: " + k);
  }

  const SuiteConfig& cfg() const { return cfg_; }

  double tol(const std::string& key) const {
    auto it = cfg_.tolerances.find(key);
    return it != cfg_.tolerances.end() ? it->second : default_tolerances().at(key);
  }

  /// Tolerance of a quadrature check: the class tolerance, widened for Monte
  /// Carlo to the larger of the MC tolerance and three standard errors.
  double quad_tol(const std::string& key, const QuadratureSpec& q, const IntegralResult& r, double scale) const {
    if (q.engine != Engine::MC) return tol(key);
    const std::string mc_key = key == "cancellation" ? "mc_cancellation" : "mc";
    return std::max({tol(key), tol(mc_key), 3.0 * r.stderr_estimate / std::max(1.0, scale)});
  }

  std::vector<int> dims(std::initializer_list<int> supported) const {
    std::vector<int> out;
    for (int n : supported)
      if (cfg_.dim == 0 || cfg_.dim == n) out.push_back(n);
    return out;
  }

  std::vector<double> lambdas(std::initializer_list<double> grid) const {
    if (cfg_.lambda) return {*cfg_.lambda};
    return grid;
  }

  QuadratureSpec quad(int n) const {
    QuadratureSpec q = (n == 1 && cfg_.engine == Engine::Tensor) ? QuadratureSpec::tensor()
                                                                 : QuadratureSpec::mc(cfg_.samples, cfg_.seed);
    q.workers = cfg_.workers;
    return q;
  }

  /// The deterministic engine, used where norms are taken as suprema over
  /// many integrals (n = 1).
  QuadratureSpec tensor() const {
    QuadratureSpec q = QuadratureSpec::tensor();
    q.workers = cfg_.workers;
    return q;
  }

  static void describe(Params& p, const QuadratureSpec& q) {
    if (q.engine == Engine::Tensor) {
      p.emplace_back("engine", "tensor");
      p.emplace_back("order", std::to_string(q.radial_order));
    } else {
      p.emplace_back("engine", "mc");
      p.emplace_back("samples", std::to_string(q.sample_count));
    }
  }

  /// Runs one check. `fn` fills expected/actual/metric/tolerance and calls finalize.
  template <class Fn>
  void check(const std::string& base, const Params& key, const Params& extra, Fn fn) {
    VerificationReport r;
    r.check_id = base;
    for (const auto& [k, v] : key) {
      r.check_id += "/" + k + "=" + v;
      r.params[k] = v;
    }
    for (const auto& [k, v] : extra) r.params[k] = v;
    r.seed = cfg_.seed;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      fn(r);
    } catch (const std::exception& e) {
      r.params["error"] = e.what();
      r.residual = std::numeric_limits<double>::infinity();
      r.passed = false;
    }
    r.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    out_.push_back(std::move(r));
  }

  std::vector<VerificationReport> take() { return std::move(out_); }

 private:
  const SuiteConfig& cfg_;
  std::vector<VerificationReport> out_;
};

Params quad_params(const QuadratureSpec& q) {
  Params p;
  Collector::describe(p, q);
  return p;
}

void set_value(VerificationReport& r, cd expected, const IntegralResult& res) {
  r.expected = expected;
  r.actual = res.value;
  r.params["error_estimate"] = format_number(res.error_estimate());
  if (!res.converged) r.params["converged"] = "false";
}

std::string fmt_int(long long k) { return std::to_string(k); }

Point point2(cd z1, cd zn) { return Point({z1}, zn); }

/// Sample points used by the suites that need a handful of interior points in dimension n.
std::vector<Point> sample_points(int n) {
  if (n == 1) return {Point(cd(0.0, 1.0)), Point(cd(0.0, 2.0)), Point(cd(1.0, 3.0))};
  return {Point::i_point(2), point2(cd(0.5, 0.0), cd(1.0, 2.0))};
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<VerificationReport> suite_identities(const SuiteConfig& cfg) {
  Collector c(cfg);
  for (int n : c.dims({1, 2})) {
    const QuadratureSpec q = c.quad(n);
    const std::vector<double> thetas = n == 1 ? std::vector<double>{1.0, 2.0} : std::vector<double>{2.0};
    for (double theta : thetas) {
      for (const Point& z : sample_points(n)) {
        if (n == 2 && !(z == Point::i_point(2))) continue;
        c.check("identities.boundary", {{"n", fmt_int(n)}, {"theta", format_number(theta)}, {"z", format_point(z)}},
                quad_params(q), [&](VerificationReport& r) {
                  const auto res = integrate_bU(
                      [&](const Point& u) { return cd(std::pow(std::abs(rho(z, u)), -(n + theta)), 0.0); }, n, q);
                  set_value(r, identity_rhs_boundary(n, theta, z), res);
                  r.metric = Metric::Relative;
                  r.tolerance = c.quad_tol("tensor", q, res, std::abs(r.expected));
                  finalize(r);
                });
      }
    }
    const std::vector<double> gammas = n == 1 ? c.lambdas({0.0, 1.0}) : c.lambdas({0.0});
    for (double gamma : gammas) {
      for (double theta : n == 1 ? std::vector<double>{1.0, 2.0} : std::vector<double>{1.0}) {
        for (const Point& z : sample_points(n)) {
          if (n == 2 && !(z == Point::i_point(2))) continue;
          c.check("identities.volume",
                  {{"n", fmt_int(n)}, {"gamma", format_number(gamma)}, {"theta", format_number(theta)},
                   {"z", format_point(z)}},
                  quad_params(q), [&](VerificationReport& r) {
                    const double s = n + 1.0 + theta + gamma;
                    const double cg = c_lambda(n, gamma);
                    const auto res = integrate_U(
                        [&](const Point& w) { return cd(std::pow(std::abs(rho(z, w)), -s) / cg, 0.0); }, n, gamma, q);
                    set_value(r, identity_rhs_volume(n, theta, gamma, z), res);
                    r.metric = Metric::Relative;
                    r.tolerance = c.quad_tol("tensor", q, res, std::abs(r.expected));
                    finalize(r);
                  });
        }
      }
    }
  }
  return c.take();
}

std::vector<VerificationReport> suite_cancellation(const SuiteConfig& cfg) {
  Collector c(cfg);
  for (int n : c.dims({1, 2})) {
    const QuadratureSpec q = c.quad(n);
    const Point I = Point::i_point(n);
    auto cancellation = [&](VerificationReport& r, const IntegralResult& res) {
      r.expected = 0.0;
      r.actual = res.value;
      r.params["abs_integral"] = format_number(res.abs_integral);
      r.metric = Metric::Cancellation;
      r.tolerance = q.engine == Engine::MC
                        ? std::max({c.tol("cancellation"), c.tol("mc_cancellation"),
                                    3.0 * res.stderr_estimate / std::max(res.abs_integral, 1e-300)})
                        : c.tol("cancellation");
      finalize(r, res.abs_integral);
    };
    // Boundary integral of rho(u, z)^{-(n+s)}.
    for (double s : n == 1 ? std::vector<double>{1.0, 2.0} : std::vector<double>{1.0}) {
      for (const Point& z : sample_points(n)) {
        if (n == 2 && !(z == I)) continue;
        c.check("cancellation.boundary", {{"n", fmt_int(n)}, {"s", format_number(s)}, {"z", format_point(z)}},
                quad_params(q), [&](VerificationReport& r) {
                  cancellation(r, integrate_bU([&](const Point& u) { return cpow_principal(rho(u, z), -(n + s)); },
                                               n, q));
                });
      }
    }
    // Volume integral of the A^1_lambda function rho(., w)^{-(n+2+lambda)}.
    const std::vector<Point> centres =
        n == 1 ? std::vector<Point>{I, Point(cd(1.0, 2.0))} : std::vector<Point>{I};
    for (double lambda : n == 1 ? c.lambdas({0.0, 1.0}) : c.lambdas({0.0})) {
      for (const Point& w : centres) {
        c.check("cancellation.volume",
                {{"n", fmt_int(n)}, {"lambda", format_number(lambda)}, {"w", format_point(w)}}, quad_params(q),
                [&](VerificationReport& r) {
                  cancellation(r, integrate_U([&](const Point& v) { return cpow_principal(rho(v, w), -(n + 2.0 + lambda)); },
                                              n, lambda, q));
                });
      }
    }
    // Slices: int_bU g(u + t i) dbeta(u) = 0 for g = rho(., i)^{-(n+2)}.
    for (double t : n == 1 ? std::vector<double>{0.5, 1.0, 2.0} : std::vector<double>{1.0}) {
      c.check("cancellation.slice", {{"n", fmt_int(n)}, {"t", format_number(t)}}, quad_params(q),
              [&](VerificationReport& r) {
                cancellation(r, integrate_bU(
                                    [&](const Point& u) { return cpow_principal(rho(u.lifted(t), I), -(n + 2.0)); }, n,
                                    q));
              });
    }
  }
  return c.take();
}

std::vector<VerificationReport> suite_projection(const SuiteConfig& cfg) {
  Collector c(cfg);
  if (c.dims({1}).empty()) return c.take();
  const QuadratureSpec q = c.quad(1);
  const std::vector<std::pair<cd, cd>> pairs{{cd(0.0, 2.0), cd(0.5, 1.0)}, {cd(1.0, 3.0), cd(0.0, 2.0)},
                                             {cd(-1.0, 0.5), cd(1.0, 2.0)}};
  const Point I = Point::i_point(1);
  for (double lambda : c.lambdas({0.0, 1.0})) {
    const KernelSpec ks{1, lambda, true};
    for (const auto& [zn, wn] : pairs) {
      const Point z(zn), w(wn);
      c.check("projection.kernel_reproduction",
              {{"lambda", format_number(lambda)}, {"z", format_point(z)}, {"w", format_point(w)}}, quad_params(q),
              [&](VerificationReport& r) {
                const auto res = project(ks, [&](const Point& u) { return kernel(ks, u, w); }, z, q);
                set_value(r, kernel(ks, z, w), res);
                r.metric = Metric::PureRelative;
                r.tolerance = c.quad_tol("projection", q, res, 1.0);
                finalize(r);
              });
    }
    // rho(., i)^{-t} lies in the Korenblum space A^{-t} and is reproduced by P_lambda for lambda > t - 1.
    const double t_kor = lambda + 0.5;
    const TaggedFun kor(HoloFun::kernel_power(I, -t_kor), SpaceTag::korenblum(t_kor), cfg.seed);
    // (z + i)^{-t} with t > 2 + lambda lies in S_t and in A^1_lambda.
    const double t_st = lambda + 2.5;
    const TaggedFun st(HoloFun::shifted_power(1, -t_st), SpaceTag::s_t(t_st), cfg.seed);
    const KernelSpec plain{1, lambda, false};
    for (const auto& [name, g, t] : {std::tuple{"korenblum", &kor, t_kor}, std::tuple{"s_t", &st, t_st}}) {
      for (const Point& z : sample_points(1)) {
        c.check(std::string("projection.") + name,
                {{"lambda", format_number(lambda)}, {"t", format_number(t)}, {"z", format_point(z)}}, quad_params(q),
                [&](VerificationReport& r) {
                  const auto res = project(plain, [&](const Point& u) { return (*g)(u); }, z, q);
                  set_value(r, (*g)(z), res);
                  r.metric = Metric::PureRelative;
                  r.tolerance = c.quad_tol("projection", q, res, 1.0);
                  finalize(r);
                });
      }
    }
    // int |K~_lambda(z, .)| dV_lambda <= C (1 + log(|rho(z,i)|^2 / rho(z))) along escape sequences.
    if (const auto bound = kernel_log_constant(lambda)) {
      const QuadratureSpec qt = c.tensor();
      for (const Point& z : kernel_growth_points()) {
        c.check("projection.kernel_log_bound", {{"lambda", format_number(lambda)}, {"z", format_point(z)}},
                quad_params(qt), [&](VerificationReport& r) {
                  r.expected = *bound;
                  r.actual = kernel_growth_ratio(lambda, z, qt);
                  r.metric = Metric::Bound;
                  r.tolerance = 0.0;
                  finalize(r);
                });
      }
    }
  }
  return c.take();
}

std::vector<VerificationReport> suite_reproducing(const SuiteConfig& cfg, int N_max) {
  Collector c(cfg);
  if (c.dims({1}).empty()) return c.take();
  const QuadratureSpec q = c.quad(1);
  const TaggedFun f(HoloFun::log_kernel(Point::i_point(1)), SpaceTag::bloch_tilde(), cfg.seed);
  for (double lambda : c.lambdas({0.0, 1.0})) {
    for (int N = 0; N <= N_max; ++N) {
      for (const Point& z : sample_points(1)) {
        c.check("reproducing.log_rho_i",
                {{"lambda", format_number(lambda)}, {"N", fmt_int(N)}, {"z", format_point(z)}}, quad_params(q),
                [&](VerificationReport& r) {
                  const auto res = reproduce(f, N, lambda, z, q);
                  set_value(r, f(z), res);
                  r.metric = Metric::Scaled;
                  r.tolerance = c.quad_tol("reproducing", q, res, 1.0 + std::abs(r.expected));
                  finalize(r);
                });
      }
    }
  }
  // The rest of the catalogue once, at N = 1 and lambda = 0.
  const double lambda = cfg.lambda.value_or(0.0);
  for (const auto& e : bloch_catalog(1)) {
    if (e.name == "log rho(z,i)") continue;
    const TaggedFun g(e.f, e.tag, cfg.seed);
    const Point z(cd(1.0, 3.0));
    c.check("reproducing.catalog", {{"f", e.name}, {"lambda", format_number(lambda)}, {"N", "1"}, {"z", format_point(z)}},
            quad_params(q), [&](VerificationReport& r) {
              const auto res = reproduce(g, 1, lambda, z, q);
              set_value(r, g(z), res);
              r.metric = Metric::Scaled;
              r.tolerance = c.quad_tol("reproducing", q, res, 1.0 + std::abs(r.expected));
              finalize(r);
            });
  }
  return c.take();
}

std::vector<VerificationReport> suite_duality(const SuiteConfig& cfg) {
  Collector c(cfg);
  if (c.dims({1}).empty()) return c.take();
  const QuadratureSpec q = c.quad(1);
  const int n = 1;
  const Point I = Point::i_point(n);
  const TaggedFun f(HoloFun::log_kernel(I), SpaceTag::bloch_tilde(), cfg.seed);
  for (double lambda : c.lambdas({0.0, 1.0})) {
    const double t = n + 2.0 + lambda;
    const TaggedFun g(HoloFun::kernel_power(I, -t), SpaceTag::s_t(t), cfg.seed);
    const Params key{{"lambda", format_number(lambda)}, {"g", "rho(z,i)^-" + format_number(t)}};
    c.check("duality.identity", key, quad_params(q), [&](VerificationReport& r) {
      const auto id = pairing_identity(f, g, lambda, q);
      r.expected = id.lhs.value;
      r.actual = id.rhs;
      r.complex_valued = true;
      IntegralResult both = id.lhs;
      both.stderr_estimate = id.lhs.stderr_estimate + std::abs(b_N(1, lambda)) * id.rhs_integral.stderr_estimate;
      r.params["error_estimate"] =
          format_number(id.lhs.error_estimate() + std::abs(b_N(1, lambda)) * id.rhs_integral.error_estimate());
      r.metric = Metric::PureRelative;
      r.tolerance = c.quad_tol("duality", q, both, std::abs(r.expected));
      finalize(r);
    });
    c.check("duality.bound", key, quad_params(q), [&](VerificationReport& r) {
      const auto value = pairing(f, g, lambda, q);
      const auto b = pairing_bound(f, g, lambda, q);
      r.expected = b.bound();
      r.actual = std::abs(value.value);
      r.params["derivative_sup"] = format_number(b.derivative_sup);
      r.params["g_norm"] = format_number(b.g_norm);
      r.params["slack"] = format_number(b.bound() - std::abs(value.value));
      r.metric = Metric::Bound;
      r.tolerance = 0.0;
      finalize(r);
    });
    c.check("duality.conjugate_symmetry", key, quad_params(q), [&](VerificationReport& r) {
      const cd scale(0.6, -0.8);
      const TaggedFun cg(g.fun() * scale, SpaceTag::s_t(t), cfg.seed);
      r.expected = std::conj(scale) * pairing(f, g, lambda, q).value;
      r.actual = pairing(f, cg, lambda, q).value;
      r.complex_valued = true;
      r.metric = Metric::Relative;
      r.tolerance = c.tol("linearity");
      finalize(r);
    });
  }
  return c.take();
}

std::vector<VerificationReport> suite_embedding(const SuiteConfig& cfg) {
  Collector c(cfg);
  for (int n : c.dims({1, 2})) {
    const QuadratureSpec q = c.quad(n);
    const std::vector<Point> atoms =
        n == 1 ? std::vector<Point>{Point(cd(0.0, 1.0)), Point(cd(2.0, 0.5)), Point(cd(-1.0, 3.0))}
               : std::vector<Point>{Point::i_point(2)};
    for (double lambda : n == 1 ? c.lambdas({0.0, 1.0}) : c.lambdas({0.0})) {
      for (const Point& a : atoms) {
        c.check("embedding.single_atom", {{"n", fmt_int(n)}, {"lambda", format_number(lambda)}, {"atom", format_point(a)}},
                quad_params(q), [&](VerificationReport& r) {
                  const DiscreteMeasure mu{{{a, cd(1.0, 0.0)}}};
                  const auto res = integrate_U(
                      [&](const Point& w) { return cd(std::abs(measure_embed(mu, lambda, w)), 0.0); }, n, lambda, q);
                  set_value(r, measure_embed_constant(n, lambda), res);
                  r.metric = Metric::Relative;
                  r.tolerance = c.quad_tol("embedding", q, res, std::abs(r.expected));
                  finalize(r);
                });
      }
      if (n != 1) continue;
      const DiscreteMeasure mu{{{atoms[0], cd(1.0, 0.0)}, {atoms[1], cd(0.0, -0.5)}, {atoms[2], cd(0.25, 0.25)}}};
      c.check("embedding.norm_bound", {{"n", fmt_int(n)}, {"lambda", format_number(lambda)}, {"atoms", "3"}},
              quad_params(q), [&](VerificationReport& r) {
                r.expected = measure_embed_constant(n, lambda) * mu.total_variation();
                r.actual = measure_embed_norm(mu, lambda, q);
                r.params["slack"] = format_number(r.expected.real() - r.actual.real());
                r.metric = Metric::Bound;
                r.tolerance = 0.0;
                finalize(r);
              });
      c.check("embedding.linearity", {{"n", fmt_int(n)}, {"lambda", format_number(lambda)}}, {},
              [&](VerificationReport& r) {
                const Point w(cd(0.3, 0.7));
                cd sum{0.0, 0.0};
                for (const auto& atom : mu.atoms) sum += measure_embed(DiscreteMeasure{{atom}}, lambda, w);
                r.expected = sum;
                r.actual = measure_embed(mu, lambda, w);
                r.complex_valued = true;
                r.metric = Metric::Relative;
                r.tolerance = c.tol("linearity");
                finalize(r);
              });
    }
  }
  return c.take();
}

namespace {

/// ||(z + i)^{-a}||_{H^p(U)} for n = 1: ( int (t^2 + 1)^{-ap/2} dt )^{1/p}.
double shifted_power_hardy_norm(double a, double p) {
  return std::pow(std::sqrt(kPi) * gamma_fn(0.5 * (a * p - 1.0)) / gamma_fn(0.5 * a * p), 1.0 / p);
}

}  // namespace

std::vector<VerificationReport> suite_hardy(const SuiteConfig& cfg) {
  Collector c(cfg);
  if (c.dims({1}).empty()) return c.take();
  const int n = 1;
  const QuadratureSpec q = c.tensor();
  // (a, p) with f = (z + i)^{-a}; ap > 1 is needed for f to lie in H^p.
  const std::vector<std::pair<double, double>> cases{{1.0, 2.0}, {2.0, 2.0}, {2.0, 1.0}, {4.0, 0.5}};
  for (const auto& [a, p] : cases) {
    const HoloFun f = HoloFun::shifted_power(n, -a);
    const PointFunction fp = [&f](const Point& z) { return f(z); };
    const Params key{{"p", format_number(p)}, {"f", "(z+i)^-" + format_number(a)}};
    NormResult hu, hb;
    bool computed = false;
    auto norms = [&] {
      if (!computed) {
        hu = hardy_norm_U(fp, n, p, q);
        hb = hardy_norm_B(hardy_transfer_fun(fp, n, p), n, p, q);
        computed = true;
      }
    };
    c.check("hardy.isometry", key, quad_params(q), [&](VerificationReport& r) {
      norms();
      r.expected = 1.0;
      r.actual = hb.value / hu.value;
      r.params["norm_U"] = format_number(hu.value);
      r.params["norm_B"] = format_number(hb.value);
      r.metric = Metric::Absolute;
      r.tolerance = c.tol("hardy");
      finalize(r);
    });
    c.check("hardy.closed_form", key, quad_params(q), [&](VerificationReport& r) {
      norms();
      r.expected = shifted_power_hardy_norm(a, p);
      r.actual = hu.value;
      r.metric = Metric::PureRelative;
      r.tolerance = c.tol("hardy_closed_form");
      finalize(r);
    });
    c.check("hardy.monotone", key, quad_params(q), [&](VerificationReport& r) {
      norms();
      r.expected = 0.0;
      r.actual = static_cast<double>(!hu.monotone) + static_cast<double>(!hb.monotone);
      r.metric = Metric::Count;
      r.tolerance = 0.0;
      finalize(r);
    });
  }
  // ||T f||_{A^q_gamma(B)} = c_{n,p} ||f||_{A^q_gamma(U)} with gamma = nq/p - (n+1).
  const std::vector<std::tuple<double, double, double>> transfers{{0.5, 1.0, 3.0}, {1.0, 2.0, 2.0}};
  for (const auto& [p, qexp, a] : transfers) {
    const double gamma = n * qexp / p - (n + 1.0);
    const HoloFun f = HoloFun::shifted_power(n, -a);
    const PointFunction fp = [&f](const Point& z) { return f(z); };
    c.check("hardy.bergman_transfer",
            {{"p", format_number(p)}, {"q", format_number(qexp)}, {"gamma", format_number(gamma)},
             {"f", "(z+i)^-" + format_number(a)}},
            quad_params(q), [&](VerificationReport& r) {
              r.expected = hardy_constant(n, p) * bergman_norm_U(fp, n, qexp, gamma, q);
              r.actual = bergman_norm_B(hardy_transfer_fun(fp, n, p), n, qexp, gamma, q);
              r.metric = Metric::PureRelative;
              r.tolerance = c.tol("hardy");
              finalize(r);
            });
  }
  // |f(z)| rho(z)^{n/p} <= C ||f||_{H^p(U)} on the standard grid.
  const auto grid = standard_grid(n, cfg.seed);
  for (double p : {0.5, 1.0, 2.0}) {
    const auto bound = hardy_pointwise_constant(n, p);
    if (!bound) continue;
    for (const auto& e : hardy_catalog(p)) {
      c.check("hardy.pointwise", {{"p", format_number(p)}, {"f", e.name}}, quad_params(q),
              [&](VerificationReport& r) {
                const TaggedFun g(e.f, e.tag, cfg.seed);
                const double norm = hardy_norm_U([&](const Point& z) { return g(z); }, n, p, q).value;
                r.expected = *bound;
                r.actual = hardy_pointwise_ratio(g.fun(), p, norm, grid);
                r.metric = Metric::Bound;
                r.tolerance = 0.0;
                finalize(r);
              });
    }
  }
  return c.take();
}

std::vector<VerificationReport> suite_seminorms(const SuiteConfig& cfg) {
  Collector c(cfg);
  for (int n : c.dims({1, 2})) {
    const auto grid = standard_grid(n, cfg.seed);
    for (const auto& e : bloch_catalog(n)) {
      for (int N = 1; N <= 3; ++N) {
        c.check("seminorms.sandwich", {{"n", fmt_int(n)}, {"f", e.name}, {"N", fmt_int(N)}}, {},
                [&](VerificationReport& r) {
                  const TaggedFun g(e.f, e.tag, cfg.seed);
                  const auto v = sandwich_values(g.fun(), N, grid);
                  r.expected = regression::kSandwich[N];
                  r.actual = v.max_ratio();
                  r.params["bloch"] = format_number(v.bloch);
                  r.params["normal"] = format_number(v.normal);
                  r.params["full"] = format_number(v.full);
                  r.metric = Metric::Bound;
                  r.tolerance = 0.0;
                  finalize(r);
                });
      }
    }
    const Point I = Point::i_point(n);
    const HoloFun log_i = HoloFun::log_kernel(I);
    if (n == 1) {
      c.check("seminorms.bloch_estimate", {{"n", "1"}, {"f", "log rho(z,i)"}, {"side", "upper"}}, {},
              [&](VerificationReport& r) {
                r.expected = 2.0 * std::sqrt(2.0);
                r.actual = bloch_seminorm_estimate(log_i, grid);
                r.metric = Metric::Bound;
                r.tolerance = 0.0;
                finalize(r);
              });
      c.check("seminorms.bloch_estimate", {{"n", "1"}, {"f", "log rho(z,i)"}, {"side", "lower"}}, {},
              [&](VerificationReport& r) {
                r.expected = bloch_seminorm_estimate(log_i, grid);
                r.actual = std::sqrt(2.0);
                r.metric = Metric::Bound;
                r.tolerance = 0.0;
                finalize(r);
              });
      c.check("seminorms.normal_derivative", {{"n", "1"}, {"f", "log rho(z,i)"}}, {}, [&](VerificationReport& r) {
        r.expected = 1.0;
        r.actual = weighted_derivative_sup(log_i, MultiIndex::unit(1, 0), grid);
        r.metric = Metric::Bound;
        r.tolerance = 0.0;
        finalize(r);
      });
    }
    // z_n is not in the Bloch space: its certificate must fail.
    c.check("seminorms.non_member", {{"n", fmt_int(n)}, {"f", "z_n"}}, {}, [&](VerificationReport& r) {
      const HoloFun zn = HoloFun::coordinate(n, n - 1) - HoloFun::constant(n, cd(0.0, 1.0));
      const auto cert = certify(zn, SpaceTag::bloch_tilde(), cfg.seed);
      r.expected = 0.0;
      r.actual = cert.passed ? 1.0 : 0.0;
      r.params["bound"] = format_number(cert.bound);
      r.params["refined_bound"] = format_number(cert.refined_bound);
      r.metric = Metric::Count;
      r.tolerance = 0.0;
      finalize(r);
    });
  }
  return c.take();
}

namespace {

constexpr int kPropertySamples = 10000;

/// Real Jacobian determinant of a map R^d -> R^d by central differences.
template <class Map>
double numeric_jacobian(const Map& map, const Eigen::VectorXd& x, double h) {
  const auto d = x.size();
  Eigen::MatrixXd J(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    Eigen::VectorXd xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    J.col(k) = (map(xp) - map(xm)) / (2.0 * h);
  }
  return J.determinant();
}

Eigen::VectorXd ball_to_real(const BallPoint& xi) {
  Eigen::VectorXd v(2 * xi.dim());
  for (int j = 0; j < xi.dim(); ++j) {
    v[2 * j] = xi.xi[static_cast<std::size_t>(j)].real();
    v[2 * j + 1] = xi.xi[static_cast<std::size_t>(j)].imag();
  }
  return v;
}

Eigen::VectorXd point_to_real(const Point& z) {
  Eigen::VectorXd v(2 * z.dim());
  for (int j = 0; j < z.dim(); ++j) {
    v[2 * j] = z.coord(j).real();
    v[2 * j + 1] = z.coord(j).imag();
  }
  return v;
}

BallPoint real_to_ball(const Eigen::VectorXd& v) {
  BallPoint xi;
  for (Eigen::Index j = 0; j < v.size() / 2; ++j) xi.xi.emplace_back(v[2 * j], v[2 * j + 1]);
  return xi;
}

/// Boundary coordinates (Re z', Im z', t) of a boundary point.
Eigen::VectorXd boundary_to_real(const Point& u) {
  const auto bc = to_boundary_coords(u);
  Eigen::VectorXd v(2 * bc.uprime.size() + 1);
  for (std::size_t j = 0; j < bc.uprime.size(); ++j) {
    v[static_cast<Eigen::Index>(2 * j)] = bc.uprime[j].real();
    v[static_cast<Eigen::Index>(2 * j + 1)] = bc.uprime[j].imag();
  }
  v[v.size() - 1] = bc.t;
  return v;
}

Point real_to_boundary(const Eigen::VectorXd& v) {
  BoundaryCoords bc;
  for (Eigen::Index j = 0; j + 1 < v.size(); j += 2) bc.uprime.emplace_back(v[j], v[j + 1]);
  bc.t = v[v.size() - 1];
  return from_boundary_coords(bc);
}

HeisenbergElement random_heis(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  HeisenbergElement h;
  for (int j = 0; j < n - 1; ++j) h.zeta.emplace_back(g(rng), g(rng));
  h.t = g(rng);
  return h;
}

Point random_boundary_point(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cd> up;
  for (int j = 0; j < n - 1; ++j) up.emplace_back(g(rng), g(rng));
  return from_slice_coords(up, g(rng), 0.0);
}

double heis_distance(const HeisenbergElement& a, const HeisenbergElement& b) {
  double d = std::abs(a.t - b.t);
  for (std::size_t j = 0; j < a.zeta.size(); ++j) d = std::max(d, std::abs(a.zeta[j] - b.zeta[j]));
  return d;
}

double point_distance(const Point& a, const Point& b) {
  double d = 0.0;
  for (int j = 0; j < a.dim(); ++j) d = std::max(d, std::abs(a.coord(j) - b.coord(j)));
  return d;
}

double ball_distance(const BallPoint& a, const BallPoint& b) {
  double d = 0.0;
  for (std::size_t j = 0; j < a.xi.size(); ++j) d = std::max(d, std::abs(a.xi[j] - b.xi[j]));
  return d;
}

cd ball_inner(const BallPoint& a, const BallPoint& b) {
  cd s{0.0, 0.0};
  for (std::size_t j = 0; j < a.xi.size(); ++j) s += a.xi[j] * std::conj(b.xi[j]);
  return s;
}

/// Relative difference scaled by the magnitude of the compared quantities.
double rel(cd a, cd b) { return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))); }

}  // namespace

std::vector<VerificationReport> suite_geometry(const SuiteConfig& cfg) {
  Collector c(cfg);
  const double gtol = c.tol("geometry");
  for (int n : c.dims({1, 2})) {
    const Params nk{{"n", fmt_int(n)}};
    const Params samples{{"samples", fmt_int(kPropertySamples)}};
    auto count_check = [&](const std::string& id, auto body) {
      c.check(id, nk, samples, [&](VerificationReport& r) {
        std::mt19937_64 rng(cfg.seed);
        int violations = 0;
        for (int k = 0; k < kPropertySamples; ++k)
          if (!body(rng)) ++violations;
        r.expected = 0.0;
        r.actual = violations;
        r.metric = Metric::Count;
        r.tolerance = 0.0;
        finalize(r);
      });
    };
    auto max_check = [&](const std::string& id, double tolerance, auto body) {
      c.check(id, nk, samples, [&](VerificationReport& r) {
        std::mt19937_64 rng(cfg.seed);
        double worst = 0.0;
        for (int k = 0; k < kPropertySamples; ++k) worst = std::max(worst, body(rng));
        r.expected = 0.0;
        r.actual = worst;
        r.metric = Metric::Absolute;
        r.tolerance = tolerance;
        finalize(r);
      });
    };

    count_check("geometry.positivity", [&](std::mt19937_64& rng) {
      const Point z = random_wide_point(rng, n), w = random_wide_point(rng, n);
      double dp = 0.0;
      for (int j = 0; j < n - 1; ++j) dp += std::norm(z.coord(j) - w.coord(j));
      const double lhs = 2.0 * rho(z, w).real();
      const double rhs = rho(z) + rho(w) + dp;
      return lhs > 0.0 && std::abs(lhs - rhs) <= gtol * std::max(1.0, rhs);
    });
    count_check("geometry.tangential_distance", [&](std::mt19937_64& rng) {
      const Point z = random_wide_point(rng, n), w = random_wide_point(rng, n);
      double dp = 0.0;
      for (int j = 0; j < n - 1; ++j) dp += std::norm(z.coord(j) - w.coord(j));
      return dp <= 2.0 * std::abs(rho(z, w));
    });
    max_check("geometry.rho_diagonal", gtol, [&](std::mt19937_64& rng) {
      const Point z = random_wide_point(rng, n);
      return rel(rho(z, z), rho(z));
    });
    max_check("geometry.cayley_round_trip", gtol, [&](std::mt19937_64& rng) {
      const BallPoint xi = random_ball_point(rng, n);
      return ball_distance(cayley_inv(cayley(xi)), xi);
    });
    max_check("geometry.cayley_rho", gtol, [&](std::mt19937_64& rng) {
      const BallPoint xi = random_ball_point(rng, n), eta = random_ball_point(rng, n);
      const cd expected =
          (1.0 - ball_inner(xi, eta)) / ((1.0 + xi.xi.back()) * (1.0 + std::conj(eta.xi.back())));
      return rel(rho(cayley(xi), cayley(eta)), expected);
    });
    max_check("geometry.cayley_inner_product", gtol, [&](std::mt19937_64& rng) {
      const Point z = random_interior_point(rng, n), w = random_interior_point(rng, n);
      const Point I = Point::i_point(n);
      const cd lhs = 1.0 - ball_inner(cayley_inv(z), cayley_inv(w));
      const cd rhs = rho(z, w) / (rho(z, I) * rho(I, w));
      return rel(lhs, rhs);
    });
    max_check("geometry.jacobian_product", gtol, [&](std::mt19937_64& rng) {
      const BallPoint xi = random_ball_point(rng, n);
      return std::abs(jacobian_phi(xi) * jacobian_phi_inv(cayley(xi)) - 1.0);
    });
    c.check("geometry.jacobian_numeric", nk, {{"samples", "100"}}, [&](VerificationReport& r) {
      std::mt19937_64 rng(cfg.seed);
      double worst = 0.0;
      for (int k = 0; k < 100; ++k) {
        BallPoint xi = random_ball_point(rng, n);
        for (cd& v : xi.xi) v *= 0.8;
        const double det = numeric_jacobian(
            [](const Eigen::VectorXd& v) { return point_to_real(cayley(real_to_ball(v))); }, ball_to_real(xi), 1e-5);
        worst = std::max(worst, std::abs(det / jacobian_phi(xi) - 1.0));
      }
      r.expected = 0.0;
      r.actual = worst;
      r.metric = Metric::Absolute;
      r.tolerance = c.tol("jacobian");
      finalize(r);
    });
    max_check("geometry.heisenberg_inverse", gtol, [&](std::mt19937_64& rng) {
      const HeisenbergElement h = random_heis(rng, n);
      return heis_distance(heis_mul(h, heis_inv(h)), HeisenbergElement{std::vector<cd>(h.zeta.size()), 0.0});
    });
    max_check("geometry.heisenberg_associative", gtol, [&](std::mt19937_64& rng) {
      const HeisenbergElement a = random_heis(rng, n), b = random_heis(rng, n), d = random_heis(rng, n);
      return heis_distance(heis_mul(heis_mul(a, b), d), heis_mul(a, heis_mul(b, d))) /
             std::max(1.0, std::abs(heis_mul(heis_mul(a, b), d).t));
    });
    max_check("geometry.heisenberg_invariance", gtol, [&](std::mt19937_64& rng) {
      const HeisenbergElement h = random_heis(rng, n);
      const Point z = random_interior_point(rng, n), u = random_interior_point(rng, n);
      return rel(rho(heis_act(h, z), heis_act(h, u)), rho(z, u)) +
             std::abs(rho(heis_act(h, z)) - rho(z)) / std::max(1.0, rho(z));
    });
    max_check("geometry.sigma_to_axis", gtol, [&](std::mt19937_64& rng) {
      const Point z0 = random_interior_point(rng, n);
      return point_distance(sigma(z0)(z0), Point::i_point(n)) +
             point_distance(sigma_inv(z0)(Point::i_point(n)), z0) / std::max(1.0, z0.norm());
    });
    max_check("geometry.sigma_lift", gtol, [&](std::mt19937_64& rng) {
      const Point z0 = random_interior_point(rng, n);
      const Point u = random_boundary_point(rng, n);
      std::uniform_real_distribution<double> e(0.0, 2.0);
      const double eps = e(rng);
      const Point lhs = sigma_inv(z0)(u.lifted(eps));
      const Point rhs = sigma_inv(z0)(u).lifted(rho(z0) * eps);
      return point_distance(lhs, rhs) / std::max(1.0, rhs.norm());
    });
    max_check("geometry.dilation", gtol, [&](std::mt19937_64& rng) {
      const Point z = random_interior_point(rng, n);
      std::uniform_real_distribution<double> rr(0.1, 10.0);
      const double r = rr(rng);
      return std::abs(rho(dilate(r, z)) - r * r * rho(z)) / std::max(1.0, r * r * rho(z));
    });
    c.check("geometry.boundary_jacobians", nk, {{"samples", "100"}}, [&](VerificationReport& r) {
      std::mt19937_64 rng(cfg.seed);
      double worst = 0.0;
      for (int k = 0; k < 100; ++k) {
        const HeisenbergElement h = random_heis(rng, n);
        const Point z0 = random_interior_point(rng, n);
        std::uniform_real_distribution<double> rr(0.25, 4.0);
        const double dil = rr(rng);
        const Point u = random_boundary_point(rng, n);
        const std::vector<std::pair<SiegelAffine, double>> maps{
            {heis_map(h), 1.0}, {dilation_map(n, dil), std::pow(dil, 2 * n)}, {sigma(z0), std::pow(rho(z0), -n)}};
        for (const auto& [m, expected] : maps) {
          const double det = numeric_jacobian(
              [&m](const Eigen::VectorXd& v) { return boundary_to_real(m(real_to_boundary(v))); },
              boundary_to_real(u), 0.5);
          worst = std::max({worst, std::abs(det / expected - 1.0), std::abs(m.boundary_jacobian() / expected - 1.0)});
        }
      }
      r.expected = 0.0;
      r.actual = worst;
      r.metric = Metric::Absolute;
      r.tolerance = c.tol("jacobian");
      finalize(r);
    });
    count_check("geometry.metric_kernel_ratio", [&](std::mt19937_64& rng) {
      const Point z = random_wide_point(rng, n), u = random_interior_point(rng, n), v = random_interior_point(rng, n);
      const double th = std::tanh(bergman_metric(u, v));
      const double ratio = std::abs(rho(z, u)) / std::abs(rho(z, v));
      const double slack = 1e-12;
      return ratio >= (1.0 - th) / (1.0 + th) * (1.0 - slack) && ratio <= (1.0 + th) / (1.0 - th) * (1.0 + slack);
    });
    c.check("geometry.escape", nk, {}, [&](VerificationReport& r) {
      // Along each escape family rho(z)/|rho(z,i)|^2 decreases to 0.
      const auto pts = escape_points(n, 16, 16.0);
      const Point I = Point::i_point(n);
      int violations = 0;
      for (int fam = 0; fam < 4; ++fam) {
        double prev = std::numeric_limits<double>::infinity();
        double last = prev;
        for (std::size_t k = static_cast<std::size_t>(fam); k < pts.size(); k += 4) {
          last = rho(pts[k]) / std::norm(rho(pts[k], I));
          if (!(last < prev)) ++violations;
          prev = last;
        }
        if (!(last < 1e-3)) ++violations;
      }
      r.expected = 0.0;
      r.actual = violations;
      r.metric = Metric::Count;
      r.tolerance = 0.0;
      finalize(r);
    });
  }
  if (!c.dims({1}).empty()) {
    c.check("geometry.metric_value", {{"n", "1"}, {"u", "0+1i"}, {"v", "0+2i"}}, {}, [&](VerificationReport& r) {
      r.expected = std::atanh(1.0 / 3.0);
      r.actual = bergman_metric(Point(cd(0.0, 1.0)), Point(cd(0.0, 2.0)));
      r.metric = Metric::Absolute;
      r.tolerance = gtol;
      finalize(r);
    });
  }
  return c.take();
}

std::vector<VerificationReport> suite_derivatives(const SuiteConfig& cfg) {
  Collector c(cfg);
  const double dtol = c.tol("derivatives");
  for (int n : c.dims({1, 2})) {
    const auto catalog = derivative_catalog(n);
    for (const auto& e : catalog) {
      c.check("derivatives.oracle", {{"n", fmt_int(n)}, {"f", e.name}}, {{"samples", "100"}},
              [&](VerificationReport& r) {
                std::mt19937_64 rng(cfg.seed);
                const PointFunction fp = [&e](const Point& z) { return e.f(z); };
                double worst = 0.0;
                for (int k = 0; k < 100; ++k) {
                  const Point z = random_interior_point(rng, n);
                  for (int j = 0; j < n; ++j) {
                    const cd symbolic = e.f.apply_L(j)(z);
                    const cd numeric = cauchy_L_alpha(fp, z, MultiIndex::unit(n, j));
                    worst = std::max(worst, std::abs(symbolic - numeric) / std::max(1.0, std::abs(symbolic)));
                  }
                }
                r.expected = 0.0;
                r.actual = worst;
                r.metric = Metric::Absolute;
                r.tolerance = dtol;
                finalize(r);
              });
    }
    c.check("derivatives.kernel_form", {{"n", fmt_int(n)}}, {}, [&](VerificationReport& r) {
      // L^alpha rho(., w)^{-s} against C (conj z' - conj w')^{alpha'} rho(., w)^{-s-|alpha|}, symbolically.
      const Point w = n == 1 ? Point(cd(0.5, 1.5)) : point2(cd(0.3, -0.2), cd(0.5, 1.5));
      int mismatches = 0;
      int cases = 0;
      for (double s : {n + 1.0, n + 2.0, 2.5}) {
        for (int order = 0; order <= 3; ++order) {
          for (const auto& alpha : multi_indices_of_order(n, order)) {
            const HoloFun lhs = HoloFun::kernel_power(w, -s).apply_L_alpha(alpha);
            if (!lhs.approx_equal(kernel_derivative_form(w, s, alpha), 1e-12)) ++mismatches;
            ++cases;
          }
        }
      }
      r.params["cases"] = fmt_int(cases);
      r.expected = 0.0;
      r.actual = mismatches;
      r.metric = Metric::Count;
      r.tolerance = 0.0;
      finalize(r);
    });
    c.check("derivatives.normal_kernel_constant", {{"n", fmt_int(n)}}, {}, [&](VerificationReport& r) {
      // d_n rho(., w)^{-(n+1+lambda)} = (i/2)(n+1+lambda) rho(., w)^{-(n+2+lambda)}.
      double worst = 0.0;
      for (double lambda : {0.0, 0.5, 1.0}) {
        const double s = n + 1.0 + lambda;
        worst = std::max(worst, std::abs(kernel_derivative_constant(s, MultiIndex::unit(n, n - 1)) - cd(0.0, 0.5 * s)));
      }
      r.expected = 0.0;
      r.actual = worst;
      r.metric = Metric::Absolute;
      r.tolerance = dtol;
      finalize(r);
    });
    c.check("derivatives.leibniz", {{"n", fmt_int(n)}}, {{"samples", "100"}}, [&](VerificationReport& r) {
      std::mt19937_64 rng(cfg.seed);
      double worst = 0.0;
      for (std::size_t a = 0; a < catalog.size(); ++a) {
        const auto& f = catalog[a].f;
        const auto& g = catalog[(a + 1) % catalog.size()].f;
        const HoloFun fg = f * g;
        for (int j = 0; j < n; ++j) {
          const HoloFun lhs = fg.apply_L(j);
          const HoloFun rhs = f.apply_L(j) * g + f * g.apply_L(j);
          for (int k = 0; k < 100 / static_cast<int>(catalog.size()) + 1; ++k) {
            const Point z = random_interior_point(rng, n);
            worst = std::max(worst, rel(lhs(z), rhs(z)));
          }
        }
      }
      r.expected = 0.0;
      r.actual = worst;
      r.metric = Metric::Absolute;
      r.tolerance = dtol;
      finalize(r);
    });
    c.check("derivatives.bracket_additivity", {{"n", fmt_int(n)}}, {}, [&](VerificationReport& r) {
      int violations = 0;
      for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
          for (const auto& alpha : multi_indices_of_order(n, a))
            for (const auto& beta : multi_indices_of_order(n, b))
              if ((alpha + beta).bracket() != alpha.bracket() + beta.bracket()) ++violations;
      r.expected = 0.0;
      r.actual = violations;
      r.metric = Metric::Count;
      r.tolerance = 0.0;
      finalize(r);
    });
  }
  return c.take();
}

// ---------------------------------------------------------------------------

std::vector<VerificationReport> run_suite(const std::string& id, const SuiteConfig& cfg) {
  if (id == "identities") return suite_identities(cfg);
  if (id == "cancellation") return suite_cancellation(cfg);
  if (id == "projection") return suite_projection(cfg);
  if (id == "reproducing") return suite_reproducing(cfg);
  if (id == "duality") return suite_duality(cfg);
  if (id == "embedding") return suite_embedding(cfg);
  if (id == "hardy") return suite_hardy(cfg);
  if (id == "seminorms") return suite_seminorms(cfg);
  if (id == "geometry") return suite_geometry(cfg);
  if (id == "derivatives") return suite_derivatives(cfg);
  if (id == "all") {
    std::vector<VerificationReport> out;
    for (const auto& s : suite_ids()) {
      auto part = run_suite(s, cfg);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
  }
  throw std::invalid_argument("unknown suite: " + id);
}

std::vector<VerificationReport> run_suites(const std::vector<std::string>& ids, const SuiteConfig& cfg) {
  for (const auto& id : ids)
    if (!is_suite(id)) throw std::invalid_argument("unknown suite: " + id);
  for (const auto& [k, v] : cfg.tolerances)
    if (!default_tolerances().count(k)) throw std::invalid_argument("unknown tolerance class: " + k);
  std::vector<std::string> expanded;
  for (const auto& id : ids) {
    if (id == "all")
      expanded.insert(expanded.end(), suite_ids().begin(), suite_ids().end());
    else
      expanded.push_back(id);
  }
  std::sort(expanded.begin(), expanded.end());
  expanded.erase(std::unique(expanded.begin(), expanded.end()), expanded.end());
  std::vector<VerificationReport> out;
  for (const auto& id : expanded) {
    auto part = run_suite(id, cfg);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const VerificationReport& a, const VerificationReport& b) { return a.check_id < b.check_id; });
  return out;
}

}  // namespace siegel
