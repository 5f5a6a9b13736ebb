#include "abel/regprobe.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "abel/fracops.hpp"
#include "abel/singular.hpp"

namespace abel {

RegularityReport fit_endpoint_exponent(const PowerFunction& f,
                                       Endpoint endpoint,
                                       double predicted_exponent,
                                       double window_fraction) {
  if (!(window_fraction > 0.0 && window_fraction <= 0.2))
    throw std::invalid_argument(
        "fit_endpoint_exponent: window_fraction outside (0, 0.2]");
  const Interval iv = f.interval();
  const double L = iv.length();
  RegularityReport rep;
  rep.endpoint = endpoint;
  rep.predicted_exponent = predicted_exponent;

  std::vector<double> lx, ly;
  double scale = 0.0;
  std::vector<double> dist, val;
  for (int k = 8; k <= 20; ++k) {
    const double d =
        window_fraction * L * std::pow(10.0, -(k - 8) / 4.0);
    const double x = (endpoint == Endpoint::left) ? iv.a + d : iv.b - d;
    const double v = f(x);
    dist.push_back(d);
    val.push_back(v);
    scale = std::max(scale, std::abs(v));
  }
  rep.window = {dist.back(), dist.front()};
  if (scale == 0.0) return rep;  // identically zero: inconclusive
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (std::abs(val[i]) < 1e-14 * scale) continue;  // below noise floor
    lx.push_back(std::log(dist[i]));
    ly.push_back(std::log(std::abs(val[i])));
  }
  if (lx.size() < 4) return rep;

  // least squares slope and R^2 of ly vs lx
  const double n = static_cast<double>(lx.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double dx = lx[i] - mx, dy = ly[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  rep.fitted_exponent = sxy / sxx;
  rep.fit_r2 = (syy == 0.0) ? 1.0 : (sxy * sxy) / (sxx * syy);
  const bool ok = std::abs(rep.fitted_exponent - predicted_exponent) <= 0.05 &&
                  rep.fit_r2 >= 0.99;
  rep.verdict = ok ? Verdict::pass : Verdict::fail;
  return rep;
}

std::pair<RegularityReport, RegularityReport> verify_H_star(
    const PowerFunction& f) {
  RegularityReport left =
      fit_endpoint_exponent(f, Endpoint::left, f.exponent_a());
  RegularityReport right =
      fit_endpoint_exponent(f, Endpoint::right, f.exponent_b());
  auto restate = [](RegularityReport& r) {
    if (r.verdict == Verdict::inconclusive) return;
    // membership signature only: integrability margin, not slope match
    r.predicted_exponent = -1.0;
    r.verdict =
        r.fitted_exponent > -1.0 + 0.02 ? Verdict::pass : Verdict::fail;
  };
  restate(left);
  restate(right);
  return {left, right};
}

std::pair<double, double> residual_report(const SolutionBundle& bundle) {
  if (bundle.spec.f.is_zero() && bundle.psi.is_zero()) return {0.0, 0.0};
  PowerFunction lhs = apply_forward(bundle.psi, bundle.spec);
  PowerFunction rhs0 = left_frac_integral(bundle.spec.f, FracOrder(1.0));
  std::vector<double> r;
  for (double x : probe_points(bundle.spec.interval))
    r.push_back(lhs(x) - rhs0(x));
  double c_hat = 0.0;
  for (double v : r) c_hat += v;
  c_hat /= static_cast<double>(r.size());
  double dev = 0.0;
  for (double v : r) dev = std::max(dev, std::abs(v - c_hat));
  return {c_hat, dev};
}

}  // namespace abel
