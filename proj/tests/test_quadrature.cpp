#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "abel/chebyshev.hpp"
#include "abel/quadrature.hpp"
#include "abel/special.hpp"

using namespace abel;

TEST_CASE("gauss-legendre integrates polynomials exactly") {
  const GaussRule& r = gauss_legendre(8);
  double acc = 0.0;
  for (int i = 0; i < 8; ++i) acc += r.w[i] * std::pow(r.x[i], 10);
  CHECK(acc == doctest::Approx(2.0 / 11.0).epsilon(1e-14));
}

TEST_CASE("gauss-jacobi moments match beta values") {
  // int_-1^1 (1-x)^a (1+x)^b x^k dx for k = 0..3 via substitution to Beta
  const double a = -0.5, b = 0.3;
  const GaussRule& r = gauss_jacobi(12, a, b);
  for (int k = 0; k <= 3; ++k) {
    double acc = 0.0;
    for (size_t i = 0; i < r.x.size(); ++i)
      acc += r.w[i] * std::pow(r.x[i], k);
    // exact: int_0^1 u^b (1-u)^a (2u-1)^k 2^{a+b+1} du
    double exact = 0.0;
    for (int j = 0; j <= k; ++j) {
      const double binom = std::round(std::tgamma(k + 1.0) /
                                      (std::tgamma(j + 1.0) *
                                       std::tgamma(k - j + 1.0)));
      exact += binom * std::pow(2.0, j) * std::pow(-1.0, k - j) *
               beta_fn(b + j + 1.0, a + 1.0);
    }
    exact *= std::pow(2.0, a + b + 1.0);
    CHECK(acc == doctest::Approx(exact).epsilon(1e-12));
  }
}

TEST_CASE("integrate_weighted: beta integrals") {
  auto one = [](double) { return 1.0; };
  // int_0^1 t^{-1/2} dt = 2
  CHECK(integrate_weighted(one, 0.0, 1.0, -0.5, 0.0) ==
        doctest::Approx(2.0).epsilon(1e-12));
  // int_0^1 (1-t)^{-0.3} t^{0.2} dt = B(1.2, 0.7)
  CHECK(integrate_weighted(one, 0.0, 1.0, 0.2, -0.3) ==
        doctest::Approx(beta_fn(1.2, 0.7)).epsilon(1e-12));
  // shifted interval: int_2^5 (t-2)^{-1/2}(5-t)^{-1/2} dt = pi
  CHECK(integrate_weighted(one, 2.0, 5.0, -0.5, -0.5) ==
        doctest::Approx(M_PI).epsilon(1e-11));
}

TEST_CASE("integrate_weighted: undeclared weak endpoint behavior") {
  // integrand t^{0.25} smooth-part with declared exponent 0
  auto F = [](double t) { return std::pow(t, 0.25); };
  CHECK(integrate_weighted(F, 0.0, 1.0, 0.0, 0.0) ==
        doctest::Approx(0.8).epsilon(1e-12));
  // log endpoint behavior
  auto G = [](double t) { return std::log(t); };
  CHECK(integrate_weighted(G, 0.0, 1.0, 0.0, 0.0) ==
        doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("chebyshev interpolation and derivative") {
  const int n = 48;
  auto xs = Chebyshev::nodes(-1.0, 2.0, n);
  std::vector<double> vals;
  for (double x : xs) vals.push_back(std::sin(2.0 * x));
  Chebyshev c(-1.0, 2.0, vals);
  CHECK(c.eval(0.37) == doctest::Approx(std::sin(0.74)).epsilon(1e-13));
  CHECK(c.deriv(0.37) ==
        doctest::Approx(2.0 * std::cos(0.74)).epsilon(1e-11));
  // at a node
  CHECK(c.deriv(xs[10]) ==
        doctest::Approx(2.0 * std::cos(2.0 * xs[10])).epsilon(1e-11));
}
