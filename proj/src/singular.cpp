#include "abel/singular.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "abel/fracops.hpp"
#include "abel/quadrature.hpp"

namespace abel {

namespace {

void require_interior(const Interval& iv, double x) {
  if (!iv.strictly_inside(x))
    throw std::domain_error("singular: x must be strictly inside (a,b)");
}

// PV int w(t) h(t) / (t-x) dt with w(t) = (t-a)^qa (b-t)^qb.
double pv_core(double a, double b, double qa, double qb,
               const std::function<double(double)>& h, double x) {
  const double hx = h(x);
  auto left = [&](double t) {
    return std::pow(b - t, qb) * (h(t) - hx) / (t - x);
  };
  auto right = [&](double t) {
    return std::pow(t - a, qa) * (h(t) - hx) / (t - x);
  };
  double acc = integrate_weighted(left, a, x, qa, 0.0) +
               integrate_weighted(right, x, b, 0.0, qb);
  return acc + hx * pv_power_weight(a, b, qa, qb, x);
}

}  // namespace

double pv_power_weight(double a, double b, double qa, double qb, double x) {
  if (qa <= -1.0 || qb <= -1.0)
    throw std::domain_error("pv_power_weight: non-integrable exponent");
  Interval iv(a, b);
  require_interior(iv, x);
  const double dl = x - a, dr = b - x;
  const double d = std::min(dl, dr);
  auto w_plus = [&](double u) {  // w(x+u)
    return std::pow(dl + u, qa) * std::pow(dr - u, qb);
  };
  auto w_minus = [&](double u) {  // w(x-u)
    return std::pow(dl - u, qa) * std::pow(dr + u, qb);
  };
  // inner half of the pairing range: regular at u -> 0
  auto paired = [&](double u) { return (w_plus(u) - w_minus(u)) / u; };
  double acc = integrate_weighted(paired, 0.0, 0.5 * d, 0.0, 0.0);
  // outer half, term by term; a power weight appears only at u = d
  {
    const bool plus_singular = (d == dr);
    const bool minus_singular = (d == dl);
    auto term_plus = [&](double u) {
      return (plus_singular ? std::pow(dl + u, qa)
                            : w_plus(u)) /
             u;
    };
    auto term_minus = [&](double u) {
      return (minus_singular ? std::pow(dr + u, qb)
                             : w_minus(u)) /
             u;
    };
    acc += integrate_weighted(term_plus, 0.5 * d, d, 0.0,
                              plus_singular ? qb : 0.0);
    acc -= integrate_weighted(term_minus, 0.5 * d, d, 0.0,
                              minus_singular ? qa : 0.0);
  }
  // one-sided remainder
  if (dl < dr) {
    auto F = [&](double t) { return std::pow(t - a, qa) / (t - x); };
    acc += integrate_weighted(F, x + d, b, 0.0, qb);
  } else if (dr < dl) {
    auto F = [&](double t) { return -std::pow(b - t, qb) / (x - t); };
    acc += integrate_weighted(F, a, x - d, qa, 0.0);
  }
  return acc;
}

double cauchy_pv(const PowerFunction& f, double x) {
  require_interior(f.interval(), x);
  if (f.is_zero()) return 0.0;
  const Interval& iv = f.interval();
  auto h = [&f](double t) { return f.smooth(t); };
  return pv_core(iv.a, iv.b, f.exponent_a(), f.exponent_b(), h, x) / M_PI;
}

double weighted_singular(const PowerFunction& f, const WeightedKernel& k,
                         double x) {
  require_interior(f.interval(), x);
  if (f.is_zero()) return 0.0;
  const Interval& iv = f.interval();
  const double qa = f.exponent_a() - k.nu_a;
  const double qb = f.exponent_b() - k.nu_b;
  if (qa <= -1.0 || qb <= -1.0)
    throw std::domain_error(
        "weighted_singular: combined endpoint exponent <= -1");
  auto h = [&f](double t) { return f.smooth(t); };
  const double core = pv_core(iv.a, iv.b, qa, qb, h, x);
  return std::pow(x - iv.a, k.nu_a) * std::pow(iv.b - x, k.nu_b) * core /
         M_PI;
}

PowerFunction singular_transform(const PowerFunction& f, int degree,
                                 bool lazy) {
  if (f.is_zero()) return f;
  const Interval iv = f.interval();
  const double out_pa = std::min(f.exponent_a(), 0.0);
  const double out_pb = std::min(f.exponent_b(), 0.0);
  auto value = [f](double x) { return cauchy_pv(f, x); };
  PowerFunction s = PowerFunction::from_values(iv, out_pa, out_pb, value,
                                               degree, /*lazy=*/true);
  return lazy ? s : s.materialized(degree);
}

std::vector<double> probe_points(const Interval& iv, int n) {
  return Chebyshev::nodes(iv.a, iv.b, n);
}

double commutation_check(const PowerFunction& psi, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw std::domain_error("commutation_check: lambda must be in (0,1)");
  if (psi.is_zero()) return 0.0;
  const Interval iv = psi.interval();
  // LHS: xDb^{-l}( r_b^{-l} S(r_b^l psi) )
  PowerFunction s_rb =
      singular_transform(psi.shifted(0.0, lambda), 128, /*lazy=*/true);
  PowerFunction lhs_arg = s_rb.shifted(0.0, -lambda);
  PowerFunction lhs = right_frac_integral(lhs_arg, FracOrder(lambda));
  // RHS: r_a^l S( r_a^{-l} xDb^{-l} psi )
  PowerFunction rb_int = right_frac_integral(psi, FracOrder(lambda));
  PowerFunction rhs_arg = rb_int.shifted(-lambda, 0.0);
  double worst = 0.0;
  for (double x : probe_points(iv)) {
    const double l = lhs(x);
    const double r =
        std::pow(x - iv.a, lambda) * cauchy_pv(rhs_arg, x);
    worst = std::max(worst, std::abs(l - r));
  }
  return worst;
}

}  // namespace abel
