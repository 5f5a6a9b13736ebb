#ifndef ABEL_REGPROBE_HPP
#define ABEL_REGPROBE_HPP

#include <utility>

#include "abel/abelcore.hpp"
#include "abel/power_function.hpp"

namespace abel {

/* Numerical regularity diagnostics: endpoint-exponent fitting by
   log-log least squares over a geometric distance ladder, the H*
   integrable-singularity signature (both endpoint exponents > -1),
   and the forward-substitution residual of a solution bundle. */

enum class Endpoint { left, right };
enum class Verdict { pass, fail, inconclusive };

struct RegularityReport {
  Endpoint endpoint = Endpoint::left;
  double fitted_exponent = 0.0;
  double predicted_exponent = 0.0;
  double fit_r2 = 0.0;
  std::pair<double, double> window{0.0, 0.0};  // distance range sampled
  Verdict verdict = Verdict::inconclusive;
};

// Fits the slope of log|f| vs log(dist) at distances
// d_k = window_fraction * (b-a) * 10^{-(k-8)/4}, k = 8..20.
// verdict = pass iff |fitted - predicted| <= 0.05 and R^2 >= 0.99;
// a window on which f vanishes identically gives inconclusive.
RegularityReport fit_endpoint_exponent(const PowerFunction& f,
                                       Endpoint endpoint,
                                       double predicted_exponent,
                                       double window_fraction = 0.01);

// H* signature: both fitted endpoint exponents > -1 + 0.02 margin.
std::pair<RegularityReport, RegularityReport> verify_H_star(
    const PowerFunction& f);

// (c_hat, deviation) of the bundle's equation residual: c_hat is the
// mean of LHS - aDx^{-1}f over probe points, deviation the worst
// departure from it.
std::pair<double, double> residual_report(const SolutionBundle& bundle);

}  // namespace abel

#endif
