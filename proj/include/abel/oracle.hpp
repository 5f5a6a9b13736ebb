#ifndef ABEL_ORACLE_HPP
#define ABEL_ORACLE_HPP

#include <functional>
#include <utility>
#include <vector>

#include "abel/power_function.hpp"

namespace abel {

struct ProblemSpec;  // abelcore.hpp

namespace oracle {

/* Brute-force reference machinery, independent of the product-rule
   quadrature in abel/quadrature.hpp: adaptive Gauss-Kronrod-style
   bisection after an endpoint-power substitution, and principal values
   by symmetric excision with Richardson extrapolation. Slow; used only
   to validate the fast paths. */

// int_a^b (t-a)^ga (b-t)^gb F(t) dt by adaptive refinement; throws
// std::runtime_error if the error estimate cannot reach tol.
double reference_quadrature(const std::function<double(double)>& F, double a,
                            double b, double ga, double gb,
                            double tol = 1e-10);

// PV int_a^b (t-a)^ga (b-t)^gb F(t) / (t-x) dt via excised integrals
// I(eps), I(eps/2) and the extrapolant 2 I(eps/2) - I(eps).
double reference_pv(const std::function<double(double)>& F, double a, double b,
                    double ga, double gb, double x, double tol = 1e-8);

// Manufactured problem: psi* = (x-a)^qa (b-x)^qb poly(x), and the
// matching right-hand side f = alpha aDx^mu psi* - beta xDb^mu psi*.
// Requires qa, qb >= (1+mu)/2 so psi* lies in the admissible class.
std::pair<PowerFunction, PowerFunction> manufacture_solution(
    const Interval& iv, double alpha, double beta, double mu, double qa,
    double qb, const std::vector<double>& poly_coeffs = {1.0});

struct CollocationResult {
  std::vector<double> nodes;   // graded, interior
  std::vector<double> values;  // psi at the nodes
  double condition = 0.0;      // estimate of the dense system
};

// Product-integration collocation discretization of the forward
// operator, dense direct solve. First-order oracle, n >= 16.
CollocationResult collocation_solve(const ProblemSpec& spec, int n);

}  // namespace oracle
}  // namespace abel

#endif
