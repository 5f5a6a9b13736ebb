#ifndef ABEL_QUADRATURE_HPP
#define ABEL_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace abel {

struct GaussRule {
  std::vector<double> x;  // nodes
  std::vector<double> w;  // weights
};

// Gauss-Legendre rule on (-1, 1). Cached per n.
const GaussRule& gauss_legendre(int n);

// Gauss-Jacobi rule on (-1, 1) for weight (1-x)^alpha (1+x)^beta,
// alpha, beta > -1. Cached per (n, alpha, beta).
const GaussRule& gauss_jacobi(int n, double alpha, double beta);

// Integral of (t-a)^ga (b-t)^gb F(t) over (a, b), ga, gb > -1.
//
// Composite rule: Gauss-Legendre on a central panel and on dyadic panels
// shrinking toward both endpoints, closed off by a Gauss-Jacobi panel that
// carries the declared power weight. The dyadic ladder also absorbs weak
// endpoint behavior of F that is not captured by the declared exponents.
double integrate_weighted(const std::function<double(double)>& F, double a,
                          double b, double ga, double gb);

}  // namespace abel

#endif
