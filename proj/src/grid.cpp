#include "siegel/grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

namespace siegel {

namespace {

constexpr std::array<unsigned, 12> kPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

std::vector<double> shifts(std::size_t dims, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> s(dims);
  for (double& x : s) x = u(rng);
  return s;
}

double shifted(double x, double s) {
  const double y = x + s;
  return y >= 1.0 ? y - 1.0 : y;
}

// Unit vector of C^n from 2n-1 coordinates in [0,1): the squared moduli follow a
// flat Dirichlet law (spacings of sorted uniforms), the phases are uniform.
std::vector<cd> sphere_from_unit_cube(int n, std::span<const double> u) {
  std::vector<double> cuts(u.begin(), u.begin() + (n - 1));
  std::sort(cuts.begin(), cuts.end());
  std::vector<cd> out(static_cast<std::size_t>(n));
  double prev = 0.0;
  for (int j = 0; j < n; ++j) {
    const double next = j < n - 1 ? cuts[static_cast<std::size_t>(j)] : 1.0;
    const double mod = std::sqrt(std::max(0.0, next - prev));
    prev = next;
    out[static_cast<std::size_t>(j)] =
        std::polar(mod, 2.0 * kPi * u[static_cast<std::size_t>(n - 1 + j)]);
  }
  return out;
}

}  // namespace

double halton(std::uint64_t index, unsigned base) {
  double f = 1.0;
  double r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

std::vector<BallPoint> sphere_points(int n, int count, std::uint64_t seed) {
  const std::size_t dims = static_cast<std::size_t>(2 * n - 1);
  const auto s = shifts(dims, seed);
  std::vector<BallPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<double> u(dims);
  for (int k = 0; k < count; ++k) {
    for (std::size_t d = 0; d < dims; ++d) u[d] = shifted(halton(static_cast<std::uint64_t>(k) + 1, kPrimes[d]), s[d]);
    out.push_back(BallPoint{sphere_from_unit_cube(n, u)});
  }
  return out;
}

std::vector<BallPoint> ball_points(int n, int count, std::uint64_t seed) {
  const std::size_t dims = static_cast<std::size_t>(2 * n);
  const auto s = shifts(dims, seed);
  std::vector<BallPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<double> u(dims);
  for (int k = 0; k < count; ++k) {
    for (std::size_t d = 0; d < dims; ++d) u[d] = shifted(halton(static_cast<std::uint64_t>(k) + 1, kPrimes[d]), s[d]);
    auto dir = sphere_from_unit_cube(n, std::span<const double>(u).subspan(1));
    const double r = std::pow(u[0], 1.0 / (2.0 * n));
    for (cd& c : dir) c *= r;
    out.push_back(BallPoint{std::move(dir)});
  }
  return out;
}

std::vector<Point> escape_points(int n, int per_family, double max_exponent) {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(4 * per_family));
  const std::size_t m = static_cast<std::size_t>(n - 1);
  std::vector<cd> zero(m);
  std::vector<cd> offset(m);
  if (m > 0) offset[0] = 0.5;
  for (int k = 1; k <= per_family; ++k) {
    const double e = max_exponent * k / per_family;
    const double small = std::exp2(-e);
    const double big = std::exp2(e);
    out.emplace_back(zero, cd(0.0, small));
    out.push_back(from_slice_coords(offset, 1.0, small));
    out.emplace_back(zero, cd(0.0, big));
    if (m > 0) {
      std::vector<cd> far(m);
      far[0] = std::sqrt(big);
      out.push_back(from_slice_coords(far, big, 1.0));
    } else {
      out.emplace_back(zero, cd(big, 1.0));
    }
  }
  return out;
}

std::vector<Point> standard_grid(int n, std::uint64_t seed, int refinement) {
  if (refinement < 1) refinement = 1;
  std::vector<Point> out;
  for (const auto& xi : ball_points(n, 512 * refinement, seed)) out.push_back(cayley(xi));
  const double reach = 16.0 * (1.0 + (refinement - 1) / 3.0);
  for (auto& z : escape_points(n, 16 * refinement, reach)) out.push_back(std::move(z));
  return out;
}

BallPoint random_ball_point(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<cd> xi(static_cast<std::size_t>(n));
  double s = 0.0;
  for (cd& c : xi) {
    c = cd(g(rng), g(rng));
    s += std::norm(c);
  }
  const double r = std::pow(u(rng), 1.0 / (2.0 * n)) / std::sqrt(s);
  for (cd& c : xi) c *= r;
  return BallPoint{std::move(xi)};
}

Point random_interior_point(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<cd> zp(static_cast<std::size_t>(n - 1));
  for (cd& c : zp) c = std::polar(std::sqrt(u(rng)), 2.0 * kPi * u(rng));
  const double t = 4.0 * u(rng) - 2.0;
  const double h = 0.25 + 1.75 * u(rng);
  return from_slice_coords(zp, t, h);
}

Point random_wide_point(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto scale = [&] { return std::exp2(16.0 * u(rng) - 8.0); };
  std::vector<cd> zp(static_cast<std::size_t>(n - 1));
  for (cd& c : zp) c = std::polar(std::sqrt(scale()), 2.0 * kPi * u(rng));
  const double t = (u(rng) < 0.5 ? -1.0 : 1.0) * scale();
  return from_slice_coords(zp, t, scale());
}

}  // namespace siegel
