// fit_constants: measure the quantities bounded only up to a constant and
// print include/siegel/regression_constants.hpp with a 10% margin.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "siegel/catalog.hpp"
#include "siegel/grid.hpp"
#include "siegel/quadrature.hpp"
#include "siegel/verify.hpp"

namespace {

constexpr std::uint64_t kSeed = 0xC0FFEE;
constexpr double kMargin = 1.1;

/// Rounds up to three significant digits.
double round_up(double x) {
  const double scale = std::pow(10.0, std::floor(std::log10(x)) - 2.0);
  return std::ceil(x / scale) * scale;
}

}  // namespace

int main() {
  using namespace siegel;
  const QuadratureSpec q = QuadratureSpec::tensor();

  std::vector<std::pair<double, double>> kernel;
  for (double lambda : {0.0, 1.0}) {
    double worst = 0.0;
    for (const Point& z : kernel_growth_points()) worst = std::max(worst, kernel_growth_ratio(lambda, z, q));
    std::fprintf(stderr, "kernel log bound lambda=%g: max ratio %.6g\n", lambda, worst);
    kernel.emplace_back(lambda, round_up(kMargin * worst));
  }

  std::vector<std::pair<double, double>> hardy;
  const auto grid1 = standard_grid(1, kSeed);
  for (double p : {0.5, 1.0, 2.0}) {
    double worst = 0.0;
    for (const auto& e : hardy_catalog(p)) {
      const double norm = hardy_norm_U([&](const Point& z) { return e.f(z); }, 1, p, q).value;
      worst = std::max(worst, hardy_pointwise_ratio(e.f, p, norm, grid1));
    }
    std::fprintf(stderr, "hardy pointwise p=%g: max ratio %.6g\n", p, worst);
    hardy.emplace_back(p, round_up(kMargin * worst));
  }

  double sandwich[4] = {0.0, 0.0, 0.0, 0.0};
  for (int n : {1, 2}) {
    const auto grid = standard_grid(n, kSeed);
    for (const auto& e : bloch_catalog(n))
      for (int N = 1; N <= 3; ++N) sandwich[N] = std::max(sandwich[N], sandwich_values(e.f, N, grid).max_ratio());
  }
  for (int N = 1; N <= 3; ++N) std::fprintf(stderr, "sandwich N=%d: max ratio %.6g\n", N, sandwich[N]);

  std::printf("#pragma once\n\n");
  std::printf("// Empirical constants for the estimates that hold up to an unspecified constant.\n");
  std::printf("// Generated by fit_constants: measured maximum times %.2f, rounded up to three digits.\n\n", kMargin);
  std::printf("#include <cstdint>\n\nnamespace siegel::regression {\n\n");
  std::printf("inline constexpr std::uint64_t kFitSeed = 0x%llX;\n\n", static_cast<unsigned long long>(kSeed));
  std::printf("struct LambdaConstant {\n  double lambda;\n  double value;\n};\n");
  std::printf("struct HardyConstant {\n  int n;\n  double p;\n  double value;\n};\n\n");
  std::printf("/// int |K~_lambda(z, .)| dV_lambda <= C (1 + log(|rho(z,i)|^2 / rho(z))) on kernel_growth_points().\n");
  std::printf("inline constexpr LambdaConstant kKernelLogBound[] = {");
  for (std::size_t k = 0; k < kernel.size(); ++k)
    std::printf("%s{%.1f, %.3g}", k ? ", " : "", kernel[k].first, kernel[k].second);
  std::printf("};\n");
  std::printf("/// |f(z)| rho(z)^{n/p} <= C ||f||_{H^p(U)} over the Hardy catalogue on the standard grid.\n");
  std::printf("inline constexpr HardyConstant kHardyPointwise[] = {");
  for (std::size_t k = 0; k < hardy.size(); ++k)
    std::printf("%s{1, %.1f, %.3g}", k ? ", " : "", hardy[k].first, hardy[k].second);
  std::printf("};\n");
  std::printf("/// Pairwise ratios of the three semi-norm estimates of order N; indexed by N, entry 0 unused.\n");
  std::printf("inline constexpr double kSandwich[] = {0.0, %.3g, %.3g, %.3g};\n\n", round_up(kMargin * sandwich[1]),
              round_up(kMargin * sandwich[2]), round_up(kMargin * sandwich[3]));
  std::printf("}  // namespace siegel::regression\n");
  return 0;
}
