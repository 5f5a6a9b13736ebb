#include "abel/special.hpp"

#include <cmath>
#include <stdexcept>

namespace abel {

namespace {

const double kLanczosG = 7.0;
const double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double gamma_core(double x) {
  // x >= 0.5 here
  x -= 1.0;
  double s = kLanczos[0];
  for (int i = 1; i < 9; ++i) s += kLanczos[i] / (x + i);
  double t = x + kLanczosG + 0.5;
  return std::sqrt(2.0 * M_PI) * std::pow(t, x + 0.5) * std::exp(-t) * s;
}

}  // namespace

double gamma_fn(double x) {
  if (std::isnan(x)) return x;
  if (x >= 0.5) return gamma_core(x);
  if (x == std::floor(x))
    throw std::domain_error("gamma_fn: pole at non-positive integer");
  // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
  return M_PI / (std::sin(M_PI * x) * gamma_core(1.0 - x));
}

double beta_fn(double p, double q) {
  return gamma_fn(p) * gamma_fn(q) / gamma_fn(p + q);
}

}  // namespace abel
