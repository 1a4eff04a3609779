#include <doctest.h>

#include "siegel/operators.hpp"
#include "siegel/regression_constants.hpp"
#include "siegel/special.hpp"
#include "siegel/verify.hpp"

using namespace siegel;

namespace {

bool near(cd a, cd b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_SUITE("operators") {
  TEST_CASE("kernels") {
    const Point I = Point::i_point(1);
    CHECK(near(kernel({1, 0.0, false}, I, I), 1.0, 1e-15));
    CHECK(near(kernel({1, 0.0, true}, I, Point(cd(2.0, 0.5))), 0.0, 1e-15));
    CHECK(near(kernel({1, 0.0, false}, I, Point(cd(0.0, 3.0))), 0.25, 1e-15));
    CHECK_THROWS_AS(kernel({1, -1.0, false}, I, I), DomainError);
    CHECK_THROWS_AS(kernel({2, 0.0, false}, I, I), DimensionError);
    const Point w(cd(0.5, 1.0)), z(cd(-1.0, 2.0));
    CHECK(near(kernel_fun({1, 1.0, true}, w)(z), kernel({1, 1.0, true}, z, w), 1e-14));
  }

  TEST_CASE("projections reproduce") {
    const auto T = QuadratureSpec::tensor();
    const Point I = Point::i_point(1);
    const Point z(cd(1.0, 3.0));
    const KernelSpec plain{1, 0.0, false};
    const auto kor = [&](const Point& w) { return cpow_principal(rho(w, I), -0.5); };
    CHECK(near(project(plain, kor, z, T).value, kor(z), 1e-2));
    const auto st = [](const Point& w) { return std::pow(w.zn() + kI, -2.5); };
    CHECK(near(project(plain, st, z, T).value, st(z), 1e-2));
    const KernelSpec mod{1, 0.0, true};
    const Point w0(cd(0.5, 1.0));
    CHECK(near(project(mod, [&](const Point& u) { return kernel(mod, u, w0); }, z, T).value, kernel(mod, z, w0), 1e-2));
  }

  TEST_CASE("reproducing formula") {
    const auto T = QuadratureSpec::tensor();
    const Point I = Point::i_point(1);
    const TaggedFun f(HoloFun::log_kernel(I), SpaceTag::bloch_tilde());
    for (int N : {0, 1, 2}) CHECK(std::abs(reproduce(f, N, 0.0, I, T).value) < 1e-12);
    const Point z(cd(0.0, 2.0));
    for (int N : {0, 1, 2})
      for (double lambda : {0.0, 1.0}) CHECK(near(reproduce(f, N, lambda, z, T).value, std::log(1.5), 1e-2));
    const TaggedFun g(HoloFun::kernel_power(I, -3.0), SpaceTag::s_t(3.0));
    CHECK_THROWS_AS(reproduce(g, 1, 0.0, z, T), MembershipError);
    CHECK_THROWS_AS(reproduce(f, -1, 0.0, z, T), DomainError);
  }

  TEST_CASE("pairing") {
    const auto T = QuadratureSpec::tensor();
    const Point I = Point::i_point(1);
    const TaggedFun f(HoloFun::log_kernel(I), SpaceTag::bloch_tilde());
    const TaggedFun g0(HoloFun::kernel_power(I, -3.0), SpaceTag::s_t(3.0));
    const auto id0 = pairing_identity(f, g0, 0.0, T);
    // mpmath: int log rho(w,i) conj(rho(w,i)^-3) dV_0 over the upper half-plane
    CHECK(near(id0.lhs.value, -0.5, 1e-6));
    CHECK(near(id0.rhs, -0.5, 1e-6));
    const TaggedFun g1(HoloFun::kernel_power(I, -4.0), SpaceTag::s_t(4.0));
    const auto id1 = pairing_identity(f, g1, 1.0, T);
    // mpmath, same integrand with rho(w,i)^-4 and dV_1
    CHECK(near(id1.lhs.value, -1.0 / 3.0, 1e-6));
    CHECK(near(id1.rhs, -1.0 / 3.0, 1e-6));

    const auto b = pairing_bound(f, g0, 0.0, T);
    CHECK(std::abs(pairing(f, g0, 0.0, T).value) <= b.bound());
    CHECK(b.g_norm == doctest::Approx(4.0 / kPi).epsilon(1e-8));

    const cd c(0.6, -0.8);
    const TaggedFun cg(g0.fun() * c, SpaceTag::s_t(3.0));
    CHECK(near(pairing(f, cg, 0.0, T).value, std::conj(c) * pairing(f, g0, 0.0, T).value, 1e-13));
    CHECK_THROWS_AS(pairing(g0, g0, 0.0, T), MembershipError);
  }

  TEST_CASE("measure embedding") {
    const auto T = QuadratureSpec::tensor();
    const Point I = Point::i_point(1);
    const DiscreteMeasure unit{{{I, cd(1.0, 0.0)}}};
    CHECK(near(measure_embed(unit, 0.0, I), 1.0, 1e-15));
    CHECK(measure_embed_constant(1, 0.0) == doctest::Approx(4.0 / kPi));
    CHECK(measure_embed_constant(1, 1.0) == doctest::Approx(2.0));
    // mpmath: int rho(z0) |rho(w, z0)|^-(3+lambda) dV_lambda with z0 = 2 + 0.5i
    const DiscreteMeasure off{{{Point(cd(2.0, 0.5)), cd(1.0, 0.0)}}};
    CHECK(measure_embed_norm(off, 0.0, T) == doctest::Approx(1.2732395447351627).epsilon(1e-3));
    CHECK(measure_embed_norm(off, 1.0, T) == doctest::Approx(2.0).epsilon(1e-3));
    DiscreteMeasure two{{{I, cd(1.0, 0.0)}, {Point(cd(1.0, 1.0)), cd(0.0, -2.0)}}};
    CHECK(two.total_variation() == doctest::Approx(3.0));
    const Point w(cd(0.3, 0.2));
    CHECK(near(measure_embed(two, 0.5, w),
               measure_embed({{two.atoms[0]}}, 0.5, w) + measure_embed({{two.atoms[1]}}, 0.5, w), 1e-14));
    CHECK(measure_embed_norm(two, 0.0, T) <= measure_embed_constant(1, 0.0) * two.total_variation());
    CHECK_THROWS_AS(measure_embed({{{Point(cd(0.0, -1.0)), 1.0}}}, 0.0, I), DomainError);
  }

  TEST_CASE("Hardy transfer") {
    const auto T = QuadratureSpec::tensor();
    const auto one = [](const Point&) { return cd(1.0, 0.0); };
    CHECK(near(hardy_transfer(one, 1, 2.0, BallPoint{{0.0}}), 2.0 * std::sqrt(kPi), 1e-14));
    CHECK_THROWS_AS(hardy_transfer(one, 1, 2.0, BallPoint{{-1.0}}), DomainError);
    for (auto [a, p] : {std::pair{1.0, 2.0}, {2.0, 2.0}, {2.0, 1.0}, {4.0, 0.5}}) {
      const auto f = [a = a](const Point& z) { return std::pow(z.zn() + kI, -a); };
      const double ratio = hardy_norm_B(hardy_transfer_fun(f, 1, p), 1, p, T).value / hardy_norm_U(f, 1, p, T).value;
      CHECK(ratio == doctest::Approx(1.0).epsilon(1e-2));
    }
    // (z+i)^-3 at p = 1/2 sits close to the integrability threshold; the
    // radius grid needs more levels before the ratio settles.
    auto fine = T;
    fine.levels = 16;
    const auto f3 = [](const Point& z) { return std::pow(z.zn() + kI, -3.0); };
    const double r3 = hardy_norm_B(hardy_transfer_fun(f3, 1, 0.5), 1, 0.5, fine).value / hardy_norm_U(f3, 1, 0.5, fine).value;
    CHECK(r3 == doctest::Approx(1.0).epsilon(1e-2));

    // mpmath: 16 pi^2 ||(z+i)^-3||_{A^1_0(U)} = 8 pi
    CHECK(bergman_norm_B(hardy_transfer_fun(f3, 1, 0.5), 1, 1.0, 0.0, T) == doctest::Approx(25.132741228718346).epsilon(1e-6));
    CHECK(hardy_constant(1, 0.5) * bergman_norm_U(f3, 1, 1.0, 0.0, T) == doctest::Approx(25.132741228718346).epsilon(1e-6));
  }

  TEST_CASE("kernel derivative constants") {
    CHECK(near(kernel_derivative_constant(3.0, MultiIndex({0, 1})), cd(0.0, 1.5), 1e-15));
    CHECK(near(kernel_derivative_constant(3.0, MultiIndex({1, 0})), -3.0, 1e-15));
    CHECK(near(kernel_derivative_constant(2.5, MultiIndex({0, 0})), 1.0, 1e-15));
    const Point w({cd(0.3, -0.2)}, cd(0.5, 1.5));
    for (int N = 1; N <= 3; ++N)
      for (const auto& alpha : multi_indices_of_order(2, N))
        CHECK(HoloFun::kernel_power(w, -3.5).apply_L_alpha(alpha).approx_equal(kernel_derivative_form(w, 3.5, alpha), 1e-12));
  }

  TEST_CASE("modified kernel L1 growth") {
    const auto T = QuadratureSpec::tensor();
    CHECK(log_growth(Point::i_point(1)) == doctest::Approx(1.0));
    CHECK(modified_kernel_l1(1, 0.0, Point::i_point(1), T).value.real() == doctest::Approx(0.0));
    for (const auto& c : regression::kKernelLogBound)
      for (const Point& z : kernel_growth_points()) CHECK(kernel_growth_ratio(c.lambda, z, T) <= c.value);
  }
}
