#ifndef ABEL_SINGULAR_HPP
#define ABEL_SINGULAR_HPP

#include "abel/power_function.hpp"

namespace abel {

// Weight exponents of the kernel ((x-a)/(t-a))^nu_a ((b-x)/(b-t))^nu_b.
struct WeightedKernel {
  double nu_a = 0.0;
  double nu_b = 0.0;
};

/* Principal-value transforms on (a,b).

   (S f)(x) = 1/pi PV int_a^b f(t)/(t-x) dt

   evaluated by singularity subtraction: with f = w h, w the endpoint
   power weight and h the smooth part,

     PV int w h /(t-x) = int w(t) (h(t)-h(x))/(t-x) dt + h(x) W(x),
     W(x) = PV int_a^b w(t)/(t-x) dt.

   The first integral is weakly singular only at the endpoints. W is
   computed from the symmetric pairing around x,

     W = int_0^d (w(x+u)-w(x-u))/u du + (one-sided remainder),

   whose integrand is regular at u = 0; the remainder and the outer half
   of the pairing range carry at most one endpoint power each. */

// PV value of (1/pi) int f(t)/(t-x) dt at interior x.
double cauchy_pv(const PowerFunction& f, double x);

// (S_{nu_a,nu_b} f)(x); reduces to cauchy_pv for nu_a = nu_b = 0.
double weighted_singular(const PowerFunction& f, const WeightedKernel& k,
                         double x);

// S applied to f, wrapped as a PowerFunction (materialized interior
// interpolant, exact near the endpoints). With lazy = true every
// evaluation computes the PV exactly; needed when the result feeds
// identities tighter than the interpolant's accuracy.
PowerFunction singular_transform(const PowerFunction& f, int degree = 128,
                                 bool lazy = false);

// PV int_a^b (t-a)^qa (b-t)^qb / (t-x) dt, qa, qb > -1.
double pv_power_weight(double a, double b, double qa, double qb, double x);

// Max discrepancy of xDb^{-l}(r_b^{-l} S(r_b^l psi)) - r_a^l S(r_a^{-l} xDb^{-l} psi)
// over the standard interior probe set, 0 < l < 1.
double commutation_check(const PowerFunction& psi, double lambda);

// 17 Chebyshev-distributed interior probe points, used by all diagnostics.
std::vector<double> probe_points(const Interval& iv, int n = 17);

}  // namespace abel

#endif
