#include "siegel/special.hpp"

#include <array>
#include <cmath>
#include <string>

namespace siegel {

namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey's set).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_sum(double x) {
  // x >= 1 here: sum_k c_k / (x - 1 + k)
  double s = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) s += kLanczos[k] / (x - 1.0 + static_cast<double>(k));
  return s;
}

void require_positive(double x, const char* what) {
  if (!(x > 0.0)) throw DomainError(std::string(what) + ": argument must be positive");
}

}  // namespace

void WeightParams::validate() const {
  if (n < 1) throw DomainError("WeightParams: n must be >= 1");
  if (!(lambda > -1.0)) throw DomainError("WeightParams: lambda must exceed -1");
  if (!(theta > 0.0)) throw DomainError("WeightParams: theta must be positive");
  if (!(gamma_exp > -1.0)) throw DomainError("WeightParams: gamma must exceed -1");
  if (!(p > 0.0)) throw DomainError("WeightParams: p must be positive");
  if (N < 0) throw DomainError("WeightParams: N must be >= 0");
}

double gamma_fn(double x) {
  require_positive(x, "gamma_fn");
  if (x < 1.0) return gamma_fn(x + 1.0) / x;
  const double base = x - 0.5 + kLanczosG;
  if (x > 140.0) return std::exp(log_gamma_fn(x));
  return std::sqrt(2.0 * kPi) * std::pow(base, x - 0.5) * std::exp(-base) * lanczos_sum(x);
}

double log_gamma_fn(double x) {
  require_positive(x, "log_gamma_fn");
  if (x < 1.0) return log_gamma_fn(x + 1.0) - std::log(x);
  const double base = x - 0.5 + kLanczosG;
  return 0.5 * std::log(2.0 * kPi) + (x - 0.5) * std::log(base) - base + std::log(lanczos_sum(x));
}

double beta_fn(double a, double b) {
  return std::exp(log_gamma_fn(a) + log_gamma_fn(b) - log_gamma_fn(a + b));
}

cd cpow_principal(cd base, double s) {
  if (!(base.real() > 0.0)) throw DomainError("cpow_principal: Re base must be positive");
  if (s == 0.0) return {1.0, 0.0};
  return std::exp(s * std::log(base));
}

cd log_principal(cd base) {
  if (!(base.real() > 0.0)) throw DomainError("log_principal: Re base must be positive");
  return std::log(base);
}

double c_lambda(int n, double lambda) {
  if (!(lambda > -1.0)) throw DomainError("c_lambda: lambda must exceed -1");
  return gamma_fn(n + 1.0 + lambda) / (4.0 * std::pow(kPi, n) * gamma_fn(1.0 + lambda));
}

cd b_N(int N, double lambda) {
  if (N < 0) throw DomainError("b_N: N must be >= 0");
  if (!(lambda > -1.0)) throw DomainError("b_N: lambda must exceed -1");
  cd b{1.0, 0.0};
  for (int k = 0; k < N; ++k) b *= cd(0.0, -2.0) / (1.0 + lambda + k);
  return b;
}

double identity_rhs_boundary(int n, double theta, const Point& z) {
  require_positive(theta, "identity_rhs_boundary(theta)");
  require_same_dim(n, z.dim(), "identity_rhs_boundary");
  const double g = gamma_fn(0.5 * (n + theta));
  return 4.0 * std::pow(kPi, n) * gamma_fn(theta) / (g * g) * std::pow(rho(z), -theta);
}

double identity_rhs_volume(int n, double theta, double gamma_exp, const Point& z) {
  require_positive(theta, "identity_rhs_volume(theta)");
  if (!(gamma_exp > -1.0)) throw DomainError("identity_rhs_volume: gamma must exceed -1");
  require_same_dim(n, z.dim(), "identity_rhs_volume");
  const double g = gamma_fn(0.5 * (n + 1.0 + theta + gamma_exp));
  return 4.0 * std::pow(kPi, n) * gamma_fn(1.0 + gamma_exp) * gamma_fn(theta) / (g * g) *
         std::pow(rho(z), -theta);
}

double factorial(int k) {
  double f = 1.0;
  for (int j = 2; j <= k; ++j) f *= j;
  return f;
}

double hardy_constant(int n, double p) {
  require_positive(p, "hardy_constant(p)");
  return std::pow(4.0 * std::pow(kPi, n) / factorial(n - 1), 1.0 / p);
}

}  // namespace siegel
