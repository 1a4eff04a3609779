#include <doctest.h>

#include <random>

#include "siegel/special.hpp"

using namespace siegel;

TEST_SUITE("special") {
  TEST_CASE("gamma") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(0.5) == doctest::Approx(1.7724538509055160273).epsilon(1e-13));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-13));
    // mpmath.gamma
    CHECK(gamma_fn(3.7) == doctest::Approx(4.1706517837966032).epsilon(1e-12));
    CHECK(gamma_fn(0.001) == doctest::Approx(999.42377248459546).epsilon(1e-12));
    CHECK(gamma_fn(49.5) == doctest::Approx(8.6676018431352723e61).epsilon(1e-12));
    CHECK_THROWS_AS(gamma_fn(0.0), DomainError);
    CHECK_THROWS_AS(gamma_fn(-1.5), DomainError);

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 20.0);
    for (int k = 0; k < 1000; ++k) {
      const double x = u(rng);
      if (x == 0.0) continue;
      CHECK(gamma_fn(x + 1.0) == doctest::Approx(x * gamma_fn(x)).epsilon(1e-12));
    }
  }

  TEST_CASE("principal powers") {
    CHECK(std::abs(cpow_principal(1.0, 3.7) - 1.0) < 1e-15);
    CHECK(std::abs(cpow_principal(4.0, 0.5) - 2.0) < 1e-15);
    CHECK(std::abs(cpow_principal(cd(2.0, 1.0), 2.0) - cd(3.0, 4.0)) < 1e-14);
    CHECK_THROWS_AS(cpow_principal(cd(-1.0, 0.5), 0.5), DomainError);
    const cd b(0.3, -2.0);
    CHECK(std::abs(cpow_principal(b, 0.7) * cpow_principal(b, -1.9) - cpow_principal(b, -1.2)) < 1e-12);
  }

  TEST_CASE("normalising constants") {
    CHECK(c_lambda(1, 0.0) == doctest::Approx(0.079577471545947668));
    CHECK(c_lambda(2, 0.0) == doctest::Approx(1.0 / (2.0 * kPi * kPi)));
    CHECK(c_lambda(1, 1.0) == doctest::Approx(1.0 / (2.0 * kPi)));
    // mpmath: gamma(3.5) / (4 pi^2 gamma(1.5))
    CHECK(c_lambda(2, 0.5) == doctest::Approx(0.094988609664691661).epsilon(1e-12));
    CHECK_THROWS_AS(c_lambda(1, -1.0), DomainError);
  }

  TEST_CASE("b_N") {
    CHECK(std::abs(b_N(0, 0.0) - 1.0) < 1e-15);
    CHECK(std::abs(b_N(1, 0.0) - cd(0.0, -2.0)) < 1e-15);
    CHECK(std::abs(b_N(2, 0.0) - (-2.0)) < 1e-15);
    for (double lambda : {-0.5, 0.0, 1.0, 2.7}) {
      for (int N = 0; N <= 10; ++N) {
        const cd closed = std::pow(cd(0.0, -2.0), N) * gamma_fn(1.0 + lambda) / gamma_fn(1.0 + lambda + N);
        CHECK(std::abs(b_N(N, lambda) - closed) <= 1e-12 * std::abs(closed));
      }
    }
  }

  TEST_CASE("integral identity right-hand sides") {
    const Point I = Point::i_point(1);
    CHECK(identity_rhs_boundary(1, 1.0, I) == doctest::Approx(4.0 * kPi));
    CHECK(identity_rhs_boundary(1, 1.0, Point(cd(0.0, 2.0))) == doctest::Approx(2.0 * kPi));
    CHECK(identity_rhs_boundary(2, 2.0, Point::i_point(2)) == doctest::Approx(4.0 * kPi * kPi));
    CHECK(identity_rhs_volume(1, 1.0, 0.0, I) == doctest::Approx(16.0));
    CHECK(identity_rhs_volume(1, 1.0, 1.0, I) == doctest::Approx(4.0 * kPi));
    CHECK(identity_rhs_volume(2, 1.0, 0.0, Point::i_point(2)) == doctest::Approx(4.0 * kPi * kPi));
    // mpmath: direct quadrature over U
    CHECK(identity_rhs_volume(2, 1.5, 0.5, Point::i_point(2)) == doctest::Approx(17.545963379714415).epsilon(1e-12));
    CHECK_THROWS_AS(identity_rhs_volume(1, 0.0, 0.0, I), DomainError);
  }

  TEST_CASE("Hardy transfer constant") {
    CHECK(hardy_constant(1, 1.0) == doctest::Approx(4.0 * kPi));
    CHECK(hardy_constant(1, 2.0) == doctest::Approx(2.0 * std::sqrt(kPi)));
    CHECK(hardy_constant(2, 1.0) == doctest::Approx(4.0 * kPi * kPi));
  }

  TEST_CASE("parameter ranges") {
    WeightParams w;
    CHECK_NOTHROW(w.validate());
    w.lambda = -1.0;
    CHECK_THROWS_AS(w.validate(), DomainError);
  }
}
