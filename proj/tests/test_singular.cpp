#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "abel/fracops.hpp"
#include "abel/oracle.hpp"
#include "abel/singular.hpp"

using namespace abel;

namespace {
const Interval kIv(0.0, 2.0);
}

TEST_CASE("cauchy_pv of a constant") {
  // (1/pi) PV int_a^b dt/(t-x) = (1/pi) ln((b-x)/(x-a))
  PowerFunction f = PowerFunction::constant(kIv, 1.0);
  for (double x : probe_points(kIv)) {
    const double exact = std::log((kIv.b - x) / (x - kIv.a)) / M_PI;
    CHECK(cauchy_pv(f, x) == doctest::Approx(exact).epsilon(1e-11));
  }
}

TEST_CASE("cauchy_pv of t at the midpoint") {
  // a=-1, b=1, f(t)=t, x=0: integrand is 1, value 2/pi
  Interval iv(-1.0, 1.0);
  PowerFunction f = PowerFunction::from_smooth(iv, 0.0, 0.0,
                                               [](double t) { return t; });
  CHECK(cauchy_pv(f, 0.0) == doctest::Approx(2.0 / M_PI).epsilon(1e-11));
}

TEST_CASE("cauchy_pv rejects x at or outside the endpoints") {
  PowerFunction f = PowerFunction::constant(kIv, 1.0);
  CHECK_THROWS_AS((void)cauchy_pv(f, kIv.a), std::domain_error);
  CHECK_THROWS_AS((void)cauchy_pv(f, kIv.b + 1.0), std::domain_error);
}

TEST_CASE("cauchy_pv vs excision oracle on an endpoint-power input") {
  // f = (t-a)^{0.3}(b-t)^{0.3}
  PowerFunction f = PowerFunction::power(kIv, 0.3, 0.3);
  auto one = [](double) { return 1.0; };
  for (double x : {0.6, kIv.mid(), 1.7}) {
    const double ref =
        oracle::reference_pv(one, kIv.a, kIv.b, 0.3, 0.3, x, 1e-9) / M_PI;
    CHECK(cauchy_pv(f, x) == doctest::Approx(ref).epsilon(1e-8));
  }
}

TEST_CASE("weighted_singular reduces to cauchy_pv and handles zero") {
  PowerFunction f = PowerFunction::from_smooth(
      kIv, 0.0, 0.0, [](double t) { return std::cos(t); });
  WeightedKernel none{0.0, 0.0};
  for (double x : {0.5, 1.3})
    CHECK(weighted_singular(f, none, x) ==
          doctest::Approx(cauchy_pv(f, x)).epsilon(1e-12));
  PowerFunction z = PowerFunction::zero(kIv);
  CHECK(weighted_singular(z, WeightedKernel{0.4, 0.3}, 1.0) == 0.0);
}

TEST_CASE("weighted_singular vs excision oracle") {
  // S_{0.4,0.3} on a smooth bump
  auto bump = [](double t) { return std::exp(-(t - 1.0) * (t - 1.0)); };
  PowerFunction f = PowerFunction::from_smooth(kIv, 0.0, 0.0, bump);
  WeightedKernel k{0.4, 0.3};
  for (double x : {0.5, 1.0, 1.5}) {
    // ((x-a)/(t-a))^{0.4}((b-x)/(b-t))^{0.3} f(t): the t-powers fold
    // into the oracle's weight exponents
    const double ref = std::pow(x - kIv.a, k.nu_a) *
                       std::pow(kIv.b - x, k.nu_b) *
                       oracle::reference_pv(bump, kIv.a, kIv.b, -k.nu_a,
                                            -k.nu_b, x, 1e-9) /
                       M_PI;
    CHECK(weighted_singular(f, k, x) == doctest::Approx(ref).epsilon(1e-8));
  }
}

TEST_CASE("weighted_singular rejects non-integrable combinations") {
  PowerFunction f = PowerFunction::constant(kIv, 1.0);
  CHECK_THROWS_AS((void)weighted_singular(f, WeightedKernel{1.2, 0.0}, 1.0),
                  std::domain_error);
}

TEST_CASE("antisymmetry under reflection") {
  // (S(Qf))(x) = -(S f)(a+b-x)
  PowerFunction f = PowerFunction::from_smooth(
      kIv, 0.2, 0.0, [](double t) { return 1.0 + 0.5 * t; });
  PowerFunction qf = reflect(f);
  for (double x : probe_points(kIv))
    CHECK(cauchy_pv(qf, x) ==
          doctest::Approx(-cauchy_pv(f, kIv.a + kIv.b - x)).epsilon(1e-10));
}

TEST_CASE("pv excision convergence and Richardson stability") {
  auto one = [](double) { return 1.0; };
  // PV int_-1^1 dt/(t-0.3) = ln(0.7/1.3)
  const double exact = std::log(0.7 / 1.3);
  const double r1 = oracle::reference_pv(one, -1.0, 1.0, 0.0, 0.0, 0.3, 1e-9);
  const double r2 =
      oracle::reference_pv(one, -1.0, 1.0, 0.0, 0.0, 0.3, 1e-10);
  CHECK(r1 == doctest::Approx(exact).epsilon(1e-9));
  CHECK(std::abs(r1 - r2) <= 1e-9);
}

TEST_CASE("singular_transform wraps S with the expected structure") {
  PowerFunction f = PowerFunction::power(kIv, 0.3, 0.3);
  PowerFunction s = singular_transform(f);
  for (double x : {0.6, 1.0, 1.7})
    CHECK(s(x) == doctest::Approx(cauchy_pv(f, x)).epsilon(1e-5));
  CHECK(singular_transform(PowerFunction::zero(kIv)).is_zero());
}

TEST_CASE("identity 11.17") {
  // aDx^{-mu} g = cos(mu pi) xDb^{-mu} g
  //               - sin(mu pi) xDb^{-mu}( r_b^{-mu} S(r_b^{mu} g) )
  PowerFunction g = PowerFunction::from_smooth(
      kIv, 0.0, 0.0, [](double t) { return 1.0 + t * (2.0 - t); });
  for (double mu : {0.25, 0.5, 0.75}) {
    PowerFunction lhs = left_frac_integral(g, FracOrder(mu));
    PowerFunction t1 = right_frac_integral(g, FracOrder(mu));
    PowerFunction s =
        singular_transform(g.shifted(0.0, mu), 128, /*lazy=*/false);
    PowerFunction t2 =
        right_frac_integral(s.shifted(0.0, -mu), FracOrder(mu));
    const double c = std::cos(mu * M_PI), sn = std::sin(mu * M_PI);
    double worst = 0.0;
    for (double x : probe_points(kIv))
      worst = std::max(worst,
                       std::abs(lhs(x) - (c * t1(x) - sn * t2(x))));
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("commutation identity") {
  CHECK(commutation_check(PowerFunction::zero(kIv), 0.5) == 0.0);
  CHECK(commutation_check(PowerFunction::constant(kIv, 1.0), 0.5) <= 1e-6);
  CHECK(commutation_check(PowerFunction::power(kIv, 0.2, 0.0), 0.3) <= 1e-6);
  CHECK_THROWS_AS((void)commutation_check(PowerFunction::constant(kIv, 1.0),
                                          1.5),
                  std::domain_error);
}

TEST_CASE("boundedness on a graded probe grid") {
  PowerFunction f = PowerFunction::from_smooth(
      kIv, 0.5, 0.5, [](double t) { return 1.0 + 0.1 * t; });
  PowerFunction s = singular_transform(f);
  for (int k = 2; k <= 40; ++k) {
    const double d = kIv.length() * std::pow(10.0, -k / 8.0);
    for (double x : {kIv.a + d, kIv.b - d}) CHECK(std::isfinite(s(x)));
  }
}
