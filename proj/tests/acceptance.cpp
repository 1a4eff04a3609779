// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "siegel/operators.hpp"
#include "siegel/report.hpp"
#include "siegel/special.hpp"
#include "siegel/verify.hpp"

using namespace siegel;

namespace {

class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

  void require(bool ok, const std::string& note) {
    ok_ = ok_ && ok;
    notes_ += (notes_.empty() ? "" : "; ") + note + (ok ? "" : " [failed]");
  }

  bool finish() const {
    std::printf("criterion %2d %s  %s: %s\n", id_, ok_ ? "PASS" : "FAIL", title_.c_str(), notes_.c_str());
    std::fflush(stdout);
    return ok_;
  }

 private:
  int id_;
  std::string title_;
  std::string notes_;
  bool ok_ = true;
};

template <class Fn>
auto timed(double& seconds, Fn fn) {
  const auto t0 = std::chrono::steady_clock::now();
  auto r = fn();
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double rel(cd a, cd e) { return std::abs(a - e) / std::abs(e); }

PointFunction abs_power(const Point& z, double s, double scale = 1.0) {
  return [z, s, scale](const Point& w) { return cd(scale * std::pow(std::abs(rho(z, w)), -s), 0.0); };
}

const QuadratureSpec T = QuadratureSpec::tensor();
const QuadratureSpec MC = QuadratureSpec::mc(1'000'000);

bool criterion1() {
  Criterion c(1, "boundary kernel integral");
  for (double y : {1.0, 2.0}) {
    const Point z(cd(0.0, y));
    double sec = 0.0;
    const auto r = timed(sec, [&] { return integrate_bU(abs_power(z, 2.0), 1, T); });
    const double e = rel(r.value, identity_rhs_boundary(1, 1.0, z));
    c.require(e <= 1e-3 && sec < 1.0, "n=1 z=" + format_point(z) + fmt(" rel %.2e", e) + fmt(" %.3fs", sec));
  }
  double sec = 0.0;
  const Point I2 = Point::i_point(2);
  const auto r = timed(sec, [&] { return integrate_bU(abs_power(I2, 4.0), 2, MC); });
  const double e = rel(r.value, 4.0 * kPi * kPi);
  c.require(e <= 2e-2 && sec < 30.0, "n=2 MC" + fmt(" rel %.2e", e) + fmt(" %.2fs", sec));
  return c.finish();
}

bool criterion2() {
  Criterion c(2, "volume kernel integral");
  for (double lambda : {0.0, 1.0}) {
    const Point I = Point::i_point(1);
    const auto r = integrate_U(abs_power(I, 3.0 + lambda, 1.0 / c_lambda(1, lambda)), 1, lambda, T);
    const double expected = lambda == 0.0 ? 16.0 : 4.0 * kPi;
    const double e = rel(r.value, expected);
    c.require(e <= 1e-3, "n=1 lambda=" + format_number(lambda) + fmt(" rel %.2e", e));
  }
  const Point I2 = Point::i_point(2);
  const auto r = integrate_U(abs_power(I2, 4.0, 1.0 / c_lambda(2, 0.0)), 2, 0.0, MC);
  const double e = rel(r.value, 4.0 * kPi * kPi);
  c.require(e <= 2e-2, "n=2 MC" + fmt(" rel %.2e", e));
  return c.finish();
}

bool criterion3() {
  Criterion c(3, "cancellation");
  for (int n : {1, 2}) {
    const Point I = Point::i_point(n);
    const QuadratureSpec& q = n == 1 ? T : MC;
    const double tol = n == 1 ? 1e-3 : 1e-2;
    const auto b = integrate_bU([&](const Point& u) { return cpow_principal(rho(u, I), -(n + 1.0)); }, n, q);
    const auto v = integrate_U([&](const Point& w) { return cpow_principal(rho(w, I), -(n + 2.0)); }, n, 0.0, q);
    const auto s = integrate_bU([&](const Point& u) { return cpow_principal(rho(u.lifted(1.0), I), -(n + 2.0)); }, n, q);
    for (const auto& [name, r] : {std::pair{"boundary", &b}, {"volume", &v}, {"slice", &s}}) {
      const double ratio = std::abs(r->value) / r->abs_integral;
      c.require(ratio <= tol, "n=" + std::to_string(n) + " " + name + fmt(" %.2e", ratio));
    }
  }
  return c.finish();
}

bool criterion4() {
  Criterion c(4, "kernel self-reproduction and projection identities");
  const KernelSpec mod{1, 0.0, true}, plain{1, 0.0, false};
  const Point I = Point::i_point(1);
  double worst_k = 0.0, worst_kor = 0.0, worst_st = 0.0;
  const std::vector<std::pair<cd, cd>> pairs{{cd(0.0, 2.0), cd(0.5, 1.0)}, {cd(1.0, 3.0), cd(0.0, 2.0)},
                                             {cd(-1.0, 0.5), cd(1.0, 2.0)}};
  const TaggedFun kor(HoloFun::kernel_power(I, -0.5), SpaceTag::korenblum(0.5));
  const TaggedFun st(HoloFun::shifted_power(1, -2.5), SpaceTag::s_t(2.5));
  for (const auto& [zn, wn] : pairs) {
    const Point z(zn), w(wn);
    const auto r = project(mod, [&](const Point& u) { return kernel(mod, u, w); }, z, T);
    worst_k = std::max(worst_k, rel(r.value, kernel(mod, z, w)));
    worst_kor = std::max(worst_kor, rel(project(plain, [&](const Point& u) { return kor(u); }, z, T).value, kor(z)));
    worst_st = std::max(worst_st, rel(project(plain, [&](const Point& u) { return st(u); }, z, T).value, st(z)));
  }
  c.require(worst_k <= 1e-2, fmt("modified kernel max rel %.2e", worst_k));
  c.require(worst_kor <= 1e-2, fmt("Korenblum t=0.5 max rel %.2e", worst_kor));
  c.require(worst_st <= 1e-2, fmt("S_t t=2.5 max rel %.2e", worst_st));
  return c.finish();
}

bool criterion5() {
  Criterion c(5, "reproducing formula for log rho(., i)");
  const TaggedFun f(HoloFun::log_kernel(Point::i_point(1)), SpaceTag::bloch_tilde());
  double worst = 0.0, slowest = 0.0;
  for (double lambda : {0.0, 1.0})
    for (int N : {0, 1, 2})
      for (cd zn : {cd(0.0, 1.0), cd(0.0, 2.0), cd(1.0, 3.0)}) {
        const Point z(zn);
        double sec = 0.0;
        const auto r = timed(sec, [&] { return reproduce(f, N, lambda, z, T); });
        worst = std::max(worst, std::abs(r.value - f(z)) / (1.0 + std::abs(f(z))));
        slowest = std::max(slowest, sec);
      }
  c.require(worst <= 1e-2, fmt("18 cases, max scaled error %.2e", worst));
  c.require(slowest < 10.0, fmt("slowest case %.3fs", slowest));
  return c.finish();
}

bool criterion6() {
  Criterion c(6, "Hardy isometry");
  // (z+i)^-2 is not in H^{1/2} (|t+i|^-1 is not integrable), so p = 1/2 uses (z+i)^-4.
  const std::vector<std::pair<double, double>> cases{{1.0, 2.0}, {2.0, 2.0}, {2.0, 1.0}, {4.0, 0.5}};
  for (const auto& [a, p] : cases) {
    const auto f = [a = a](const Point& z) { return std::pow(z.zn() + kI, -a); };
    const auto hu = hardy_norm_U(f, 1, p, T);
    const auto hb = hardy_norm_B(hardy_transfer_fun(f, 1, p), 1, p, T);
    const double ratio = hb.value / hu.value;
    const double closed =
        std::pow(std::sqrt(kPi) * gamma_fn(0.5 * (a * p - 1.0)) / gamma_fn(0.5 * a * p), 1.0 / p);
    const double oracle = std::abs(hu.value - closed) / closed;
    c.require(ratio >= 0.99 && ratio <= 1.01 && oracle <= 1e-3,
              "p=" + format_number(p) + " (z+i)^-" + format_number(a) + fmt(" ratio %.6f", ratio) +
                  fmt(" vs closed form %.1e", oracle));
  }
  return c.finish();
}

bool criterion7() {
  Criterion c(7, "Hardy to Bergman transfer, p=1/2, gamma=0");
  const auto f = [](const Point& z) { return std::pow(z.zn() + kI, -3.0); };
  const double lhs = bergman_norm_B(hardy_transfer_fun(f, 1, 0.5), 1, 1.0, 0.0, T);
  const double rhs = hardy_constant(1, 0.5) * bergman_norm_U(f, 1, 1.0, 0.0, T);
  const double e = std::abs(lhs - rhs) / rhs;
  c.require(e <= 1e-2, "f=(z+i)^-3" + fmt(" ball %.8f", lhs) + fmt(" half-space %.8f", rhs) + fmt(" rel %.2e", e));
  return c.finish();
}

bool criterion8() {
  Criterion c(8, "duality pairing");
  const Point I = Point::i_point(1);
  const TaggedFun f(HoloFun::log_kernel(I), SpaceTag::bloch_tilde());
  const TaggedFun g(HoloFun::kernel_power(I, -3.0), SpaceTag::s_t(3.0));
  const auto id = pairing_identity(f, g, 0.0, T);
  const double e = std::abs(id.lhs.value - id.rhs) / std::abs(id.lhs.value);
  c.require(e <= 1e-2, fmt("identity lhs %.8f", id.lhs.value.real()) + fmt(" rhs %.8f", id.rhs.real()) + fmt(" rel %.2e", e));
  const double value = std::abs(pairing(f, g, 0.0, T).value);
  const auto b = pairing_bound(f, g, 0.0, T);
  c.require(value <= b.bound(), fmt("|<f,g>| %.6f", value) + fmt(" <= bound %.6f", b.bound()) +
                                    fmt(" (slack %.6f)", b.bound() - value));
  return c.finish();
}

bool criterion9() {
  Criterion c(9, "single-atom measure embedding");
  for (cd zn : {cd(0.0, 1.0), cd(2.0, 0.5), cd(-1.0, 3.0)}) {
    const DiscreteMeasure mu{{{Point(zn), cd(1.0, 0.0)}}};
    const double e = std::abs(measure_embed_norm(mu, 0.0, T) - 4.0 / kPi) / (4.0 / kPi);
    c.require(e <= 1e-3, "atom " + format_point(Point(zn)) + fmt(" rel %.2e", e));
  }
  return c.finish();
}

bool criterion10() {
  Criterion c(10, "property suites");
  SuiteConfig cfg;
  const std::vector<std::string> suites{"geometry", "derivatives", "seminorms"};
  const auto reports = run_suites(suites, cfg);
  std::size_t failed = 0;
  for (const auto& r : reports)
    if (!r.passed) {
      ++failed;
      std::printf("    failed: %s\n", summary_line(r, false).c_str());
    }
  c.require(failed == 0, std::to_string(reports.size() - failed) + "/" + std::to_string(reports.size()) + " checks");
  const ReportMeta meta{{"all"}, cfg, false};
  const auto all1 = to_json(run_suites({"all"}, cfg), meta);
  const auto all2 = to_json(run_suites({"all"}, cfg), meta);
  c.require(all1 == all2, "full report rerun byte-identical (" + std::to_string(all1.size()) + " bytes)");
  return c.finish();
}

}  // namespace

int main() {
  const std::vector<std::function<bool()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                    criterion6, criterion7, criterion8, criterion9, criterion10};
  int failed = 0;
  for (const auto& c : criteria) {
    try {
      if (!c()) ++failed;
    } catch (const std::exception& e) {
      std::printf("criterion FAIL with exception: %s\n", e.what());
      ++failed;
    }
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
