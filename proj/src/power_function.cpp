#include "abel/power_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace abel {

Interval::Interval(double a_, double b_) : a(a_), b(b_) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("Interval: need finite a < b");
}

PowerFunction::PowerFunction() : iv_(0.0, 1.0), zero_(true) {}

PowerFunction PowerFunction::zero(const Interval& iv) {
  PowerFunction f;
  f.iv_ = iv;
  f.zero_ = true;
  return f;
}

PowerFunction PowerFunction::constant(const Interval& iv, double c) {
  if (c == 0.0) return zero(iv);
  PowerFunction f;
  f.iv_ = iv;
  f.zero_ = false;
  f.exact_ = [c](double) { return c; };
  f.prefer_exact_ = true;
  return f;
}

PowerFunction PowerFunction::power(const Interval& iv, double pa, double pb,
                                   double coef) {
  if (coef == 0.0) return zero(iv);
  if (pa <= -1.0 || pb <= -1.0)
    throw std::domain_error("PowerFunction: endpoint exponent <= -1");
  PowerFunction f;
  f.iv_ = iv;
  f.zero_ = false;
  f.pa_ = pa;
  f.pb_ = pb;
  f.exact_ = [coef](double) { return coef; };
  f.prefer_exact_ = true;
  return f;
}

PowerFunction PowerFunction::from_smooth(const Interval& iv, double pa,
                                         double pb,
                                         std::function<double(double)> v,
                                         int degree, bool lazy) {
  if (pa <= -1.0 || pb <= -1.0)
    throw std::domain_error("PowerFunction: endpoint exponent <= -1");
  PowerFunction f;
  f.iv_ = iv;
  f.zero_ = false;
  f.pa_ = pa;
  f.pb_ = pb;
  f.exact_ = std::move(v);
  f.prefer_exact_ = true;
  if (!lazy) return f.materialized(degree);
  return f;
}

PowerFunction PowerFunction::from_values(const Interval& iv, double pa,
                                         double pb,
                                         std::function<double(double)> value,
                                         int degree, bool lazy) {
  const double a = iv.a, b = iv.b;
  auto v = [a, b, pa, pb, value = std::move(value)](double x) {
    return value(x) / (std::pow(x - a, pa) * std::pow(b - x, pb));
  };
  return from_smooth(iv, pa, pb, std::move(v), degree, lazy);
}

PowerFunction PowerFunction::from_samples(const Interval& iv, double pa,
                                          double pb,
                                          std::vector<double> values) {
  if (pa <= -1.0 || pb <= -1.0)
    throw std::domain_error("PowerFunction: endpoint exponent <= -1");
  PowerFunction f;
  f.iv_ = iv;
  f.zero_ = false;
  f.pa_ = pa;
  f.pb_ = pb;
  f.interp_ = Chebyshev(iv.a, iv.b, std::move(values));
  f.has_interp_ = true;
  return f;
}

void PowerFunction::check_inside(double x) const {
  if (!iv_.strictly_inside(x))
    throw std::domain_error("PowerFunction: evaluation outside (a,b)");
}

double PowerFunction::smooth(double x) const {
  check_inside(x);
  if (zero_) return 0.0;
  const double zone = kEdgeZone * iv_.length();
  const double dl = x - iv_.a, dr = iv_.b - x;
  if (has_edges_ && std::min(dl, dr) < zone) {
    const double d = std::min(dl, dr);
    const double w =
        std::max(kEdgeWMin, std::pow(d / zone, 1.0 / kEdgeGrade));
    return dl < dr ? edge_lo_.eval(w) : edge_hi_.eval(w);
  }
  if (exact_ && (prefer_exact_ || !has_interp_)) return exact_(x);
  if (exact_ && std::min(dl, dr) < zone) return exact_(x);
  return interp_.eval(x);
}

double PowerFunction::smooth_deriv(double x) const {
  check_inside(x);
  if (zero_) return 0.0;
  const double zone = kEdgeZone * iv_.length();
  const double dl = x - iv_.a, dr = iv_.b - x;
  const double dist = std::min(dl, dr);
  if (has_edges_ && dist < zone) {
    // chain rule through w = (dist/zone)^{1/q}
    const double w = std::pow(dist / zone, 1.0 / kEdgeGrade);
    if (w < kEdgeWMin) return 0.0;  // constant continuation
    const double dwdd = w / (kEdgeGrade * dist);
    return dl < dr ? edge_lo_.deriv(w) * dwdd : -edge_hi_.deriv(w) * dwdd;
  }
  if (exact_ && (dist < zone || (prefer_exact_ && !has_interp_))) {
    // step shrinks with the endpoint distance so that local power
    // behavior of the smooth part is resolved; 4th-order stencil
    const double h = 0.0625 * dist;
    return (exact_(x - 2.0 * h) - 8.0 * exact_(x - h) +
            8.0 * exact_(x + h) - exact_(x + 2.0 * h)) /
           (12.0 * h);
  }
  return interp_.deriv(x);
}

double PowerFunction::operator()(double x) const {
  check_inside(x);
  if (zero_) return 0.0;
  double p = 1.0;
  if (pa_ != 0.0) p *= std::pow(x - iv_.a, pa_);
  if (pb_ != 0.0) p *= std::pow(iv_.b - x, pb_);
  return p * smooth(x);
}

PowerFunction PowerFunction::materialized(int degree) const {
  if (zero_) return *this;
  PowerFunction f(*this);
  std::vector<double> vals;
  const auto xs = Chebyshev::nodes(iv_.a, iv_.b, degree);
  vals.reserve(xs.size());
  for (double x : xs) vals.push_back(smooth(x));
  f.interp_ = Chebyshev(iv_.a, iv_.b, std::move(vals));
  f.has_interp_ = true;
  // graded edge interpolants: dist = zone * w^q resolves endpoint
  // Hoelder structure that plain Chebyshev-in-x cannot
  const double zone = kEdgeZone * iv_.length();
  const auto ws = Chebyshev::nodes(kEdgeWMin, 1.0, kEdgeDegree);
  std::vector<double> lo_vals, hi_vals;
  lo_vals.reserve(ws.size());
  hi_vals.reserve(ws.size());
  for (double w : ws) {
    const double d = zone * std::pow(w, kEdgeGrade);
    lo_vals.push_back(smooth(iv_.a + d));
    hi_vals.push_back(smooth(iv_.b - d));
  }
  f.edge_lo_ = Chebyshev(kEdgeWMin, 1.0, std::move(lo_vals));
  f.edge_hi_ = Chebyshev(kEdgeWMin, 1.0, std::move(hi_vals));
  f.has_edges_ = true;
  f.prefer_exact_ = false;
  return f;
}

PowerFunction PowerFunction::scaled(double c) const {
  if (zero_ || c == 0.0) return zero(iv_);
  PowerFunction f(*this);
  if (f.exact_) f.exact_ = [c, g = exact_](double x) { return c * g(x); };
  auto rescale = [c](const Chebyshev& ch, double lo, double hi) {
    std::vector<double> vals = ch.node_values();
    for (double& v : vals) v *= c;
    return Chebyshev(lo, hi, std::move(vals));
  };
  if (f.has_interp_) f.interp_ = rescale(interp_, iv_.a, iv_.b);
  if (f.has_edges_) {
    f.edge_lo_ = rescale(edge_lo_, kEdgeWMin, 1.0);
    f.edge_hi_ = rescale(edge_hi_, kEdgeWMin, 1.0);
  }
  return f;
}

PowerFunction PowerFunction::shifted(double da, double db) const {
  if (zero_) return *this;
  PowerFunction f(*this);
  f.pa_ += da;
  f.pb_ += db;
  if (f.pa_ <= -1.0 || f.pb_ <= -1.0)
    throw std::domain_error("PowerFunction: endpoint exponent <= -1");
  return f;
}

PowerFunction add(const PowerFunction& f, const PowerFunction& g) {
  const Interval iv = f.interval();
  if (iv.a != g.interval().a || iv.b != g.interval().b)
    throw std::invalid_argument("add: interval mismatch");
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  const double pa = std::min(f.exponent_a(), g.exponent_a());
  const double pb = std::min(f.exponent_b(), g.exponent_b());
  auto value = [f, g](double x) { return f(x) + g(x); };
  return PowerFunction::from_values(iv, pa, pb, std::move(value),
                                    PowerFunction::kDefaultDegree,
                                    /*lazy=*/true);
}

}  // namespace abel
