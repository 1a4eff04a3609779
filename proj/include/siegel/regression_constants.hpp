#pragma once

// Empirical constants for the estimates that hold up to an unspecified constant.
// Generated by fit_constants: measured maximum times 1.10, rounded up to three digits.

#include <cstdint>

namespace siegel::regression {

inline constexpr std::uint64_t kFitSeed = 0xC0FFEE;

struct LambdaConstant {
  double lambda;
  double value;
};
struct HardyConstant {
  int n;
  double p;
  double value;
};

/// int |K~_lambda(z, .)| dV_lambda <= C (1 + log(|rho(z,i)|^2 / rho(z))) on kernel_growth_points().
inline constexpr LambdaConstant kKernelLogBound[] = {{0.0, 1.44}, {1.0, 3.44}};
/// |f(z)| rho(z)^{n/p} <= C ||f||_{H^p(U)} over the Hardy catalogue on the standard grid.
inline constexpr HardyConstant kHardyPointwise[] = {{1, 0.5, 0.00697}, {1, 1.0, 0.0876}, {1, 2.0, 0.311}};
/// Pairwise ratios of the three semi-norm estimates of order N; indexed by N, entry 0 unused.
inline constexpr double kSandwich[] = {0.0, 6.52, 6.12, 6.43};

}  // namespace siegel::regression
