#include "abel/chebyshev.hpp"

#include <cmath>
#include <stdexcept>

namespace abel {

std::vector<double> Chebyshev::nodes(double a, double b, int n) {
  std::vector<double> xs(n);
  for (int j = 0; j < n; ++j) {
    const double c = std::cos((2.0 * j + 1.0) * M_PI / (2.0 * n));
    xs[n - 1 - j] = 0.5 * (a + b) + 0.5 * (b - a) * c;  // ascending
  }
  return xs;
}

Chebyshev::Chebyshev(double a, double b, std::vector<double> values)
    : a_(a), b_(b), values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  if (n < 2) throw std::invalid_argument("Chebyshev: need at least 2 nodes");
  nodes_ = nodes(a, b, n);
  weights_.resize(n);
  for (int j = 0; j < n; ++j) {
    const double s = std::sin((2.0 * j + 1.0) * M_PI / (2.0 * n));
    weights_[n - 1 - j] = (j % 2 == 0 ? 1.0 : -1.0) * s;
  }
}

double Chebyshev::eval(double x) const {
  const int n = size();
  double num = 0.0, den = 0.0;
  for (int j = 0; j < n; ++j) {
    const double d = x - nodes_[j];
    if (d == 0.0) return values_[j];
    const double t = weights_[j] / d;
    num += t * values_[j];
    den += t;
  }
  return num / den;
}

double Chebyshev::deriv(double x) const {
  const int n = size();
  // at (or next to) a node, use the differentiation-matrix row
  int near = -1;
  const double tol = 1e-13 * (b_ - a_);
  for (int j = 0; j < n; ++j)
    if (std::abs(x - nodes_[j]) < tol) near = j;
  if (near >= 0) {
    double acc = 0.0, diag = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == near) continue;
      const double dij =
          (weights_[j] / weights_[near]) / (nodes_[near] - nodes_[j]);
      acc += dij * values_[j];
      diag -= dij;
    }
    return acc + diag * values_[near];
  }
  // p = N/D with N = sum w_j f_j/(x-x_j), D = sum w_j/(x-x_j)
  double N = 0.0, D = 0.0, Np = 0.0, Dp = 0.0;
  for (int j = 0; j < n; ++j) {
    const double d = x - nodes_[j];
    const double t = weights_[j] / d;
    N += t * values_[j];
    D += t;
    Np -= t / d * values_[j];
    Dp -= t / d;
  }
  return (Np * D - N * Dp) / (D * D);
}

}  // namespace abel
