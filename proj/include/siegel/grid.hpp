#pragma once

// Deterministic sample sets used by the sup estimators and quasi-MC rules.

#include <cstdint>
#include <random>
#include <vector>

#include "siegel/geometry.hpp"

namespace siegel {

/// Radical inverse of `index` in the given prime base.
double halton(std::uint64_t index, unsigned base);

/// Quasi-uniform points of the ball in C^n (Halton, Cranley-Patterson shifted by seed).
std::vector<BallPoint> ball_points(int n, int count, std::uint64_t seed);
/// Quasi-uniform points on the unit sphere of C^n.
std::vector<BallPoint> sphere_points(int n, int count, std::uint64_t seed);

/// Four deterministic families escaping to the ideal boundary of U:
/// rho -> 0 on and off the axis, and |z| -> infinity vertically and sideways.
/// Exponents run over (0, max_exponent] in `per_family` equal steps.
std::vector<Point> escape_points(int n, int per_family, double max_exponent);

/// 512 * refinement Cayley-pushed ball points followed by 64 * refinement escape
/// points (exponent range 16 for refinement 1, 32 for refinement 4).
std::vector<Point> standard_grid(int n, std::uint64_t seed = 0xC0FFEE, int refinement = 1);

/// Uniform point of the open ball.
BallPoint random_ball_point(std::mt19937_64& rng, int n);
/// Interior point with |z_j| <= 1 for j < n, |Re z_n| <= 2 and rho(z) in [1/4, 2].
Point random_interior_point(std::mt19937_64& rng, int n);
/// Point of U spread over many scales: rho(z) and |z| range over [2^-8, 2^8].
Point random_wide_point(std::mt19937_64& rng, int n);

}  // namespace siegel
