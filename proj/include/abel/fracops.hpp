#ifndef ABEL_FRACOPS_HPP
#define ABEL_FRACOPS_HPP

#include "abel/power_function.hpp"

namespace abel {

struct FracOrder {
  double sigma;
  explicit FracOrder(double s) : sigma(s) {}
};

/* Riemann-Liouville operators on (a,b):

     (I_left^s f)(x)  = 1/Gamma(s) int_a^x (x-t)^{s-1} f(t) dt
     (I_right^s f)(x) = 1/Gamma(s) int_x^b (t-x)^{s-1} f(t) dt
     (D_left^s f)(x)  = d/dx (I_left^{1-s} f)(x),  0 < s < 1
     (D_right^s f)(x) = -d/dx (I_right^{1-s} f)(x)

   The integral kernels and the endpoint powers of f are handled by
   Gauss-Jacobi product rules; the derivative is taken analytically on
   the interpolant of the (1-s)-integral's smooth part. */

// aDx^{-sigma} f. sigma = 0 is the identity.
PowerFunction left_frac_integral(const PowerFunction& f, FracOrder order);

// xDb^{-sigma} f (direct mirror quadrature, not via reflection).
PowerFunction right_frac_integral(const PowerFunction& f, FracOrder order);

// aDx^{sigma} f for 0 < sigma < 1.
PowerFunction left_frac_derivative(const PowerFunction& f, FracOrder order);

// xDb^{sigma} f for 0 < sigma < 1.
PowerFunction right_frac_derivative(const PowerFunction& f, FracOrder order);

// (Qf)(x) = f(a+b-x); swaps the endpoint exponents.
PowerFunction reflect(const PowerFunction& f);

}  // namespace abel

#endif
