#pragma once

// Named verification suites. Each check produces one VerificationReport;
// a failing check never aborts its suite.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "siegel/holofun.hpp"
#include "siegel/quadrature.hpp"

namespace siegel {

/// How `residual` is derived from expected/actual.
enum class Metric {
  Relative,      // |e - a| / max(1, |e|)
  PureRelative,  // |e - a| / |e|
  Scaled,        // |e - a| / (1 + |e|)
  Cancellation,  // |a| / integral of |integrand|
  Bound,         // max(0, a - e): passes iff a <= e
  Count,         // a, the number of violations
  Absolute,      // |e - a|
};

std::string metric_name(Metric m);

struct VerificationReport {
  std::string check_id;
  std::map<std::string, std::string> params;
  cd expected{0.0, 0.0};
  cd actual{0.0, 0.0};
  bool complex_valued = false;
  double residual = 0.0;
  double tolerance = 0.0;
  Metric metric = Metric::Relative;
  bool passed = false;
  long long runtime_ms = 0;
  std::uint64_t seed = 0;
};

/// Fills residual and passed from expected/actual/metric/tolerance.
/// For Metric::Cancellation pass the integral of |integrand| as `scale`.
void finalize(VerificationReport& r, double scale = 0.0);

struct SuiteConfig {
  /// 0 runs every dimension a suite covers.
  int dim = 0;
  /// Replaces the default lambda grid of the lambda-parametrised suites.
  std::optional<double> lambda;
  /// Engine for n = 1 integrals; n >= 2 always uses Monte Carlo.
  Engine engine = Engine::Tensor;
  long long samples = 1'000'000;
  std::uint64_t seed = 0xC0FFEE;
  /// Tolerance overrides, keyed by tolerance class (see tolerance_keys()).
  std::map<std::string, double> tolerances;
  int workers = 0;
};

/// Tolerance classes and their defaults.
const std::map<std::string, double>& default_tolerances();

const std::vector<std::string>& suite_ids();
bool is_suite(const std::string& id);

/// Runs one suite ("all" expands to every suite). Throws std::invalid_argument for unknown ids.
std::vector<VerificationReport> run_suite(const std::string& id, const SuiteConfig& cfg);
/// Runs the listed suites and returns the reports sorted by check_id.
std::vector<VerificationReport> run_suites(const std::vector<std::string>& ids, const SuiteConfig& cfg);

std::vector<VerificationReport> suite_identities(const SuiteConfig& cfg);
std::vector<VerificationReport> suite_cancellation(const SuiteConfig& cfg);
std::vector<VerificationReport> suite_projection(const SuiteConfig& cfg);
std::vector<VerificationReport> suite_reproducing(const SuiteConfig& cfg, int N_max = 2);
std::vector<VerificationReport> suite_duality(const SuiteConfig& cfg);
std::vector<VerificationReport> suite_embedding(const SuiteConfig& cfg);
std::vector<VerificationReport> suite_hardy(const SuiteConfig& cfg);
std::vector<VerificationReport> suite_seminorms(const SuiteConfig& cfg);
std::vector<VerificationReport> suite_geometry(const SuiteConfig& cfg);
std::vector<VerificationReport> suite_derivatives(const SuiteConfig& cfg);

// ---------------------------------------------------------------------------
// Measurements shared with the constant fitter.

/// Points of U where the modified-kernel L^1 growth is compared with its
/// logarithmic bound: rho -> 0 on and off the axis and |z| -> infinity on the axis (n = 1).
std::vector<Point> kernel_growth_points();
/// int |K~_lambda(z, .)| dV_lambda / (1 + log(|rho(z,i)|^2 / rho(z))).
double kernel_growth_ratio(double lambda, const Point& z, const QuadratureSpec& quad);

/// The three semi-norm estimates compared in the sandwich.
struct SandwichValues {
  double bloch = 0.0;   // sup |grad~ f|
  double normal = 0.0;  // sup rho^N |d_n^N f|
  double full = 0.0;    // sum_{|alpha| = N} sup rho^<alpha> |L^alpha f|
  /// Largest of the pairwise ratios and their inverses.
  double max_ratio() const;
};
SandwichValues sandwich_values(const HoloFun& f, int N, const std::vector<Point>& grid);

/// max over the grid of |f(z)| rho(z)^{n/p} / norm.
double hardy_pointwise_ratio(const HoloFun& f, double p, double norm, const std::vector<Point>& grid);

std::string format_point(const Point& z);
std::string format_number(double x);

}  // namespace siegel
