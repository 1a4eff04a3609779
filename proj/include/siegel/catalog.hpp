#pragma once

// Named test functions shared by the verification suites and the constant fitter.

#include <string>
#include <vector>

#include "siegel/holofun.hpp"

namespace siegel {

struct CatalogEntry {
  std::string name;
  HoloFun f;
  SpaceTag tag;
};

/// Functions of the normalised Bloch space (f(i) = 0) in dimension n = 1 or 2.
std::vector<CatalogEntry> bloch_catalog(int n);
/// Hardy-space functions for exponent p (n = 1): powers of rho(., w0) with a p > 1.
std::vector<CatalogEntry> hardy_catalog(double p);
/// Mixed catalogue for derivative checks: kernel powers, logarithms, polynomials, products.
std::vector<CatalogEntry> derivative_catalog(int n);

}  // namespace siegel
