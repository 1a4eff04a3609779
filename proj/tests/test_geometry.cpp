#include <doctest.h>

#include <random>

#include "siegel/geometry.hpp"
#include "siegel/grid.hpp"

using namespace siegel;

namespace {

Point p2(cd z1, cd zn) { return Point({z1}, zn); }

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("rho of points") {
    CHECK(rho(Point::i_point(1)) == doctest::Approx(1.0));
    CHECK(rho(Point(cd(3.0, 4.0))) == doctest::Approx(4.0));
    CHECK(rho(p2(1.0, cd(0.0, 5.0))) == doctest::Approx(4.0));
  }

  TEST_CASE("classify") {
    CHECK(Point(cd(0.0, 1.0)).classify() == Region::Interior);
    CHECK(Point(cd(2.0, 0.0)).classify() == Region::Boundary);
    CHECK(Point(cd(2.0, -1.0)).classify() == Region::Exterior);
    CHECK(p2(1.0, cd(0.0, 1.0)).classify() == Region::Boundary);
  }

  TEST_CASE("sesquiholomorphic rho") {
    const cd r = rho(Point::i_point(1), Point(cd(3.0, 0.0)));
    CHECK(r.real() == doctest::Approx(0.5));
    CHECK(r.imag() == doctest::Approx(1.5));

    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
      const Point z = random_interior_point(rng, 2), w = random_interior_point(rng, 2);
      CHECK(std::abs(rho(z, z) - rho(z)) < 1e-13);
      const double dp = std::norm(z.coord(0) - w.coord(0));
      CHECK(2.0 * rho(z, w).real() == doctest::Approx(rho(z) + rho(w) + dp).epsilon(1e-12));
    }
  }

  TEST_CASE("mixed dimensions are rejected") {
    CHECK_THROWS_AS(rho(Point::i_point(1), Point::i_point(2)), DimensionError);
  }

  TEST_CASE("Cayley transform") {
    const Point c0 = cayley(BallPoint{{0.0}});
    CHECK(std::abs(c0.zn() - kI) < 1e-15);
    CHECK(std::abs(cayley_inv(Point::i_point(2)).xi[1]) < 1e-15);
    CHECK(jacobian_phi(BallPoint{{0.0, 0.0}}) == doctest::Approx(4.0));
    CHECK(jacobian_phi_inv(Point::i_point(3)) == doctest::Approx(0.25));
    CHECK_THROWS_AS(cayley(BallPoint{{-1.0}}), DomainError);

    std::mt19937_64 rng(5);
    for (int k = 0; k < 200; ++k) {
      const BallPoint xi = random_ball_point(rng, 2), eta = random_ball_point(rng, 2);
      const cd inner = xi.xi[0] * std::conj(eta.xi[0]) + xi.xi[1] * std::conj(eta.xi[1]);
      const cd expected = (1.0 - inner) / ((1.0 + xi.xi[1]) * (1.0 + std::conj(eta.xi[1])));
      CHECK(std::abs(rho(cayley(xi), cayley(eta)) - expected) <= 1e-10 * std::abs(expected));
      CHECK(jacobian_phi(xi) * jacobian_phi_inv(cayley(xi)) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(rho(cayley(xi)) > 0.0);
    }
  }

  TEST_CASE("Heisenberg group") {
    const HeisenbergElement h{{cd(1.0, -2.0)}, 0.75};
    const auto e = heis_mul(h, heis_inv(h));
    CHECK(std::abs(e.zeta[0]) == 0.0);
    CHECK(e.t == doctest::Approx(0.0));
    const HeisenbergElement h2{{cd(-1.0, 2.0)}, -0.75};
    CHECK(heis_mul(h, h2).t == doctest::Approx(0.0));

    const Point z = p2(cd(0.2, 0.1), cd(0.5, 2.0));
    const Point moved = heis_act(HeisenbergElement{{0.0}, 3.0}, z);
    CHECK(std::abs(moved.zn() - (z.zn() + 3.0)) < 1e-15);
    CHECK(std::abs(moved.coord(0) - z.coord(0)) < 1e-15);

    const Point u = p2(cd(-0.3, 0.4), cd(1.0, 1.0));
    CHECK(std::abs(rho(heis_act(h, z), heis_act(h, u)) - rho(z, u)) < 1e-13);
    CHECK(rho(heis_act(h, z)) == doctest::Approx(rho(z)));
    CHECK(heis_map(h).boundary_jacobian() == doctest::Approx(1.0));
  }

  TEST_CASE("dilations and sigma") {
    const Point d = dilate(2.0, Point::i_point(2));
    CHECK(std::abs(d.zn() - cd(0.0, 4.0)) < 1e-15);
    CHECK(rho(d) == doctest::Approx(4.0));
    CHECK(dilation_map(2, 3.0).boundary_jacobian() == doctest::Approx(81.0));

    std::mt19937_64 rng(9);
    for (int k = 0; k < 100; ++k) {
      const Point z0 = random_interior_point(rng, 2);
      const Point at = sigma(z0)(z0);
      CHECK(std::abs(at.zn() - kI) < 1e-12);
      CHECK(std::abs(at.coord(0)) < 1e-12);
      CHECK(sigma(z0).boundary_jacobian() == doctest::Approx(std::pow(rho(z0), -2.0)));
      const Point u = from_slice_coords(std::vector<cd>{cd(0.3, -0.1)}, 0.7, 0.0);
      const Point lhs = sigma_inv(z0)(u.lifted(0.5));
      const Point rhs = sigma_inv(z0)(u).lifted(rho(z0) * 0.5);
      CHECK(std::abs(lhs.zn() - rhs.zn()) < 1e-12);
    }
  }

  TEST_CASE("Bergman metric") {
    // atanh(1/3), mpmath.
    CHECK(bergman_metric(Point(cd(0.0, 1.0)), Point(cd(0.0, 2.0))) == doctest::Approx(0.34657359027997265).epsilon(1e-14));
    CHECK(bergman_metric(Point::i_point(2), Point::i_point(2)) == 0.0);
    const Point u(cd(1.0, 2.0)), v(cd(-0.5, 0.3));
    CHECK(bergman_metric(u, v) == doctest::Approx(bergman_metric(v, u)));
  }

  TEST_CASE("escape points leave every compact set") {
    const auto pts = escape_points(2, 8, 16.0);
    CHECK(pts.size() == 32);
    const Point I = Point::i_point(2);
    for (std::size_t k = pts.size() - 4; k < pts.size(); ++k)
      CHECK(rho(pts[k]) / std::norm(rho(pts[k], I)) < 1e-3);
  }
}
