#include <doctest.h>

#include <random>

#include "siegel/catalog.hpp"
#include "siegel/grid.hpp"
#include "siegel/holofun.hpp"

using namespace siegel;

namespace {

Point p2(cd z1, cd zn) { return Point({z1}, zn); }

bool near(cd a, cd b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_SUITE("holofun") {
  TEST_CASE("multi-indices") {
    const MultiIndex a({1, 0, 2}), b({0, 3, 1});
    CHECK(a.order() == 3);
    CHECK(a.prime_order() == 1);
    CHECK(a.bracket() == doctest::Approx(2.5));
    CHECK((a + b).bracket() == doctest::Approx(a.bracket() + b.bracket()));
    CHECK(multi_indices_of_order(2, 3).size() == 4);
    CHECK(multi_indices_of_order(3, 2).size() == 6);
    CHECK_THROWS_AS(MultiIndex({1, -1}), DomainError);
  }

  TEST_CASE("evaluation") {
    const Point I = Point::i_point(1);
    CHECK(near(HoloFun::kernel_power(I, -1.0)(I), 1.0, 1e-15));
    CHECK(near(HoloFun::log_kernel(I)(I), 0.0, 1e-15));
    CHECK(near(HoloFun::kernel_power(I, -2.0)(Point(cd(0.0, 3.0))), 0.25, 1e-15));
    CHECK(near(HoloFun::shifted_power(1, -2.0)(Point(cd(1.0, 1.0))), std::pow(cd(1.0, 2.0), -2.0), 1e-14));
    CHECK_THROWS_AS(HoloFun::kernel_power(I, -1.0)(Point(cd(0.0, -3.0))), DomainError);
  }

  TEST_CASE("symbolic L operators") {
    const Point w = p2(cd(0.3, -0.2), cd(0.5, 1.5));
    const Point z = p2(cd(-0.1, 0.4), cd(1.0, 2.0));
    for (double lambda : {0.0, 0.5, 1.0}) {
      const double s = 3.0 + lambda;
      const HoloFun d = HoloFun::kernel_power(w, -s).apply_L(1);
      const HoloFun expected = HoloFun::kernel_power(w, -s - 1.0) * cd(0.0, 0.5 * s);
      CHECK(d.approx_equal(expected, 1e-14));
      CHECK(near(d(z), expected(z), 1e-13));
    }

    const Point I = Point::i_point(2);
    const HoloFun f = HoloFun::log_kernel(I);
    const HoloFun inv = HoloFun::kernel_power(I, -1.0);
    CHECK(near(f.apply_L(1)(z), cd(0.0, -0.5) * inv(z), 1e-14));
    CHECK(near(f.apply_L(0)(z), std::conj(z.coord(0)) * inv(z), 1e-14));
    CHECK_FALSE(f.apply_L(0).holomorphic());

    const HoloFun zn2 = HoloFun::coordinate(1, 0) * HoloFun::coordinate(1, 0);
    CHECK(zn2.apply_L_alpha(MultiIndex({2})).approx_equal(HoloFun::constant(1, 2.0), 1e-15));
    CHECK(HoloFun::constant(2, 5.0).apply_L(0).is_zero());
  }

  TEST_CASE("Leibniz rule") {
    std::mt19937_64 rng(21);
    const auto cat = derivative_catalog(2);
    for (std::size_t a = 0; a < cat.size(); ++a) {
      const HoloFun& f = cat[a].f;
      const HoloFun& g = cat[(a + 2) % cat.size()].f;
      for (int j = 0; j < 2; ++j) {
        const HoloFun lhs = (f * g).apply_L(j);
        const HoloFun rhs = f.apply_L(j) * g + f * g.apply_L(j);
        for (int k = 0; k < 5; ++k) {
          const Point z = random_interior_point(rng, 2);
          CHECK(near(lhs(z), rhs(z), 1e-12));
        }
      }
    }
  }

  TEST_CASE("Cauchy derivative oracle") {
    const auto zn = [](const Point& z) { return z.zn(); };
    CHECK(near(cauchy_derivative(zn, Point(cd(0.2, 1.0)), 0, 1), 1.0, 1e-12));
    const Point I = Point::i_point(1);
    const HoloFun inv = HoloFun::kernel_power(I, -1.0);
    const HoloFun lg = HoloFun::log_kernel(I);
    CHECK(near(cauchy_derivative([&](const Point& z) { return inv(z); }, Point(cd(0.0, 3.0)), 0, 1), cd(0.0, 0.125), 1e-12));
    CHECK(near(cauchy_derivative([&](const Point& z) { return lg(z); }, I, 0, 1), cd(0.0, -0.5), 1e-12));
    CHECK_THROWS_AS(cauchy_derivative(zn, I, 0, 1, 2.0), DomainError);

    std::mt19937_64 rng(4);
    for (const auto& e : derivative_catalog(2)) {
      const PointFunction fp = [&e](const Point& z) { return e.f(z); };
      for (int k = 0; k < 10; ++k) {
        const Point z = random_interior_point(rng, 2);
        for (const auto& alpha : multi_indices_of_order(2, 2))
          CHECK(near(cauchy_L_alpha(fp, z, alpha), e.f.apply_L_alpha(alpha)(z), 1e-9));
      }
    }
  }

  TEST_CASE("invariant gradient") {
    const Point I = Point::i_point(1);
    CHECK(invariant_gradient(HoloFun::constant(1, 3.0), Point(cd(1.0, 2.0))) == 0.0);
    const Point z(cd(0.7, 1.3));
    CHECK(invariant_gradient(HoloFun::coordinate(1, 0), z) == doctest::Approx(2.0 * std::sqrt(2.0) * 1.3));
    CHECK(invariant_gradient(HoloFun::log_kernel(I), I) == doctest::Approx(std::sqrt(2.0)));
  }

  TEST_CASE("semi-norm estimates") {
    const Point I = Point::i_point(1);
    const HoloFun lg = HoloFun::log_kernel(I);
    for (int refinement : {1, 4}) {
      const auto grid = standard_grid(1, 0xC0FFEE, refinement);
      const double b = bloch_seminorm_estimate(lg, grid);
      CHECK(b >= std::sqrt(2.0));
      CHECK(b <= 2.0 * std::sqrt(2.0));
      CHECK(weighted_derivative_sup(lg, MultiIndex({1}), grid) <= 1.0);
      CHECK(bloch_seminorm_estimate(HoloFun::constant(1, 1.0), grid) == 0.0);
    }
    const std::vector<Point> just_i{I};
    CHECK(weighted_derivative_sup(HoloFun::kernel_power(I, -1.0), MultiIndex({1}), just_i) == doctest::Approx(0.5));
    // z_n is not Bloch: the estimate grows with the largest rho on the grid.
    const auto g1 = standard_grid(1, 0xC0FFEE, 1), g4 = standard_grid(1, 0xC0FFEE, 4);
    CHECK(bloch_seminorm_estimate(HoloFun::coordinate(1, 0), g4) > 100.0 * bloch_seminorm_estimate(HoloFun::coordinate(1, 0), g1));
  }

  TEST_CASE("membership certificates") {
    const Point I = Point::i_point(1);
    CHECK(certify(HoloFun::kernel_power(I, -3.0), SpaceTag::s_t(3.0)).passed);
    CHECK(certify(HoloFun::kernel_power(I, -0.5), SpaceTag::korenblum(0.5)).passed);
    CHECK(certify(HoloFun::log_kernel(I), SpaceTag::bloch_tilde()).passed);
    // Not normalised at i.
    CHECK_FALSE(certify(HoloFun::kernel_power(I, -1.0), SpaceTag::bloch_tilde()).passed);
    // Unbounded invariant gradient.
    CHECK_FALSE(certify(HoloFun::coordinate(1, 0) - HoloFun::constant(1, kI), SpaceTag::bloch_tilde()).passed);
    // Decays too slowly for the claimed S_t exponent.
    CHECK_FALSE(certify(HoloFun::kernel_power(I, -1.0), SpaceTag::s_t(2.0)).passed);
    CHECK_THROWS_AS(TaggedFun(HoloFun::coordinate(1, 0), SpaceTag::bloch_tilde()), MembershipError);
    for (int n : {1, 2})
      for (const auto& e : bloch_catalog(n)) CHECK_MESSAGE(certify(e.f, e.tag).passed, e.name);
    for (double p : {0.5, 1.0, 2.0})
      for (const auto& e : hardy_catalog(p)) CHECK_MESSAGE(certify(e.f, e.tag).passed, e.name);
  }
}
