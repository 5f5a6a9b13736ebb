#ifndef ABEL_POWER_FUNCTION_HPP
#define ABEL_POWER_FUNCTION_HPP

#include <functional>
#include <vector>

#include "abel/chebyshev.hpp"

namespace abel {

struct Interval {
  double a;
  double b;
  Interval(double a_, double b_);
  double length() const { return b - a; }
  double mid() const { return 0.5 * (a + b); }
  bool strictly_inside(double x) const { return a < x && x < b; }
};

// A function on (a,b) of the form
//
//   f(x) = (x-a)^pa (b-x)^pb v(x)
//
// with v the "smooth part". v is held as Chebyshev samples, as an exact
// evaluator, or both. Operator outputs keep the exact evaluator so that
// endpoint asymptotics survive composition; materialized() switches to
// interpolants everywhere: one Chebyshev interpolant per half-interval
// in the graded variable w = (dist/zone)^{1/8}, dist the distance to the
// nearer endpoint, which turns the Hoelder powers (x-a)^{k/8} that defeat
// polynomial interpolation in x into plain monomials in w. This keeps
// deeply nested quadratures cheap and accurate: without it every
// near-endpoint node would recurse into the exact evaluator of the
// stage below.
class PowerFunction {
 public:
  static constexpr int kDefaultDegree = 64;
  static constexpr double kEdgeZone = 0.5;  // fraction of |b-a|
  static constexpr int kEdgeDegree = 128;
  static constexpr double kEdgeGrade = 8.0;  // dist = zone * w^kEdgeGrade
  // smallest resolved w; below it (dist < ~1e-12 of the interval) the
  // smooth part is continued as a constant -- the exact evaluators
  // cannot produce meaningful values on sub-ulp subintervals anyway
  static constexpr double kEdgeWMin = 0.05;

  PowerFunction();  // zero on (0,1)

  static PowerFunction zero(const Interval& iv);
  static PowerFunction constant(const Interval& iv, double c);
  // coef * (x-a)^pa (b-x)^pb
  static PowerFunction power(const Interval& iv, double pa, double pb,
                             double coef = 1.0);
  // smooth part given as a callable; lazy = keep evaluator only, no samples
  static PowerFunction from_smooth(const Interval& iv, double pa, double pb,
                                   std::function<double(double)> v,
                                   int degree = kDefaultDegree,
                                   bool lazy = false);
  // full values given as a callable; smooth part is value / power factors
  static PowerFunction from_values(const Interval& iv, double pa, double pb,
                                   std::function<double(double)> value,
                                   int degree = kDefaultDegree,
                                   bool lazy = false);
  static PowerFunction from_samples(const Interval& iv, double pa, double pb,
                                    std::vector<double> values);

  const Interval& interval() const { return iv_; }
  double exponent_a() const { return pa_; }
  double exponent_b() const { return pb_; }
  bool is_zero() const { return zero_; }
  bool has_exact() const { return static_cast<bool>(exact_); }

  // smooth part and full value at interior x
  double smooth(double x) const;
  double smooth_deriv(double x) const;
  double operator()(double x) const;

  // fully interpolant-backed copy (interior + graded edge interpolants)
  PowerFunction materialized(int degree = kDefaultDegree) const;

  PowerFunction scaled(double c) const;
  // multiply by (x-a)^da (b-x)^db
  PowerFunction shifted(double da, double db) const;

 private:
  Interval iv_;
  double pa_ = 0.0, pb_ = 0.0;
  Chebyshev interp_;
  bool has_interp_ = false;
  Chebyshev edge_lo_;  // smooth part vs w near a
  Chebyshev edge_hi_;  // smooth part vs w near b
  bool has_edges_ = false;
  std::function<double(double)> exact_;
  bool prefer_exact_ = false;
  bool zero_ = false;

  void check_inside(double x) const;
};

// pointwise sum; declared exponents are the pairwise minima
PowerFunction add(const PowerFunction& f, const PowerFunction& g);

}  // namespace abel

#endif
