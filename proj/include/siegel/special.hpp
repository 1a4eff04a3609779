#pragma once

// Gamma, principal complex powers, and the closed-form constants that appear
// in the weighted Bergman and Hardy theory on U.

#include "siegel/geometry.hpp"

namespace siegel {

/// Parameter bundle with the admissible ranges enforced at construction.
struct WeightParams {
  int n = 1;
  double lambda = 0.0;     // > -1
  double theta = 1.0;      // > 0
  double gamma_exp = 0.0;  // > -1
  double p = 1.0;          // > 0
  int N = 0;               // >= 0
  double t_exp = 0.0;

  void validate() const;
};

/// Gamma(x) for x > 0 (Lanczos, g = 7).
double gamma_fn(double x);
double log_gamma_fn(double x);
double beta_fn(double a, double b);

/// exp(s Log base) on the right half-plane Re base > 0.
cd cpow_principal(cd base, double s);
/// Principal Log on the right half-plane.
cd log_principal(cd base);

/// Normalisation of dV_lambda = c_lambda rho^lambda dV.
double c_lambda(int n, double lambda);
/// b_N = (-2i)^N Gamma(1+lambda) / Gamma(1+lambda+N), by recurrence in N.
cd b_N(int N, double lambda);

/// Closed form of  int_{bU} |rho(z,u)|^{-(n+theta)} dbeta(u).
double identity_rhs_boundary(int n, double theta, const Point& z);
/// Closed form of  int_U rho(w)^gamma |rho(z,w)|^{-(n+1+theta+gamma)} dV(w).
double identity_rhs_volume(int n, double theta, double gamma_exp, const Point& z);

/// c_{n,p} = (4 pi^n / (n-1)!)^{1/p}, the isometry constant of the Hardy transfer.
double hardy_constant(int n, double p);

double factorial(int k);

}  // namespace siegel
