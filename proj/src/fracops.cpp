#include "abel/fracops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "abel/quadrature.hpp"
#include "abel/special.hpp"

namespace abel {

namespace {

void require_integral_order(double s) {
  if (s < 0.0)
    throw std::invalid_argument(
        "frac integral: sigma < 0 (use the derivative operator)");
}

void require_derivative_order(double s) {
  if (!(s > 0.0 && s < 1.0))
    throw std::invalid_argument("frac derivative: sigma must be in (0,1)");
}

}  // namespace

PowerFunction left_frac_integral(const PowerFunction& f, FracOrder order) {
  const double s = order.sigma;
  require_integral_order(s);
  if (s == 0.0 || f.is_zero()) return f;
  const Interval iv = f.interval();
  const double a = iv.a, b = iv.b;
  const double pa = f.exponent_a(), pb = f.exponent_b();
  const double out_pa = pa + s;
  const double out_pb = std::min(pb + s, 0.0);
  const double inv_gamma = 1.0 / gamma_fn(s);
  auto value = [f, a, b, pa, pb, s, inv_gamma](double x) {
    auto F = [&](double t) {
      return (pb == 0.0 ? 1.0 : std::pow(b - t, pb)) * f.smooth(t);
    };
    return inv_gamma * integrate_weighted(F, a, x, pa, s - 1.0);
  };
  return PowerFunction::from_values(iv, out_pa, out_pb, value,
                                    PowerFunction::kDefaultDegree,
                                    /*lazy=*/true);
}

PowerFunction right_frac_integral(const PowerFunction& f, FracOrder order) {
  const double s = order.sigma;
  require_integral_order(s);
  if (s == 0.0 || f.is_zero()) return f;
  const Interval iv = f.interval();
  const double a = iv.a, b = iv.b;
  const double pa = f.exponent_a(), pb = f.exponent_b();
  const double out_pa = std::min(pa + s, 0.0);
  const double out_pb = pb + s;
  const double inv_gamma = 1.0 / gamma_fn(s);
  auto value = [f, a, b, pa, pb, s, inv_gamma](double x) {
    auto F = [&](double t) {
      return (pa == 0.0 ? 1.0 : std::pow(t - a, pa)) * f.smooth(t);
    };
    return inv_gamma * integrate_weighted(F, x, b, s - 1.0, pb);
  };
  return PowerFunction::from_values(iv, out_pa, out_pb, value,
                                    PowerFunction::kDefaultDegree,
                                    /*lazy=*/true);
}

PowerFunction left_frac_derivative(const PowerFunction& f, FracOrder order) {
  const double s = order.sigma;
  require_derivative_order(s);
  if (f.is_zero()) return f;
  const Interval iv = f.interval();
  const double a = iv.a, b = iv.b;
  const double pa = f.exponent_a(), pb = f.exponent_b();
  const double out_pa = pa - s;
  const double out_pb = std::min(pb - s, 0.0);
  if (out_pa <= -1.0)
    throw std::domain_error("left_frac_derivative: result not integrable");
  if (pa > 0.0) {
    // integrated-by-parts form (the boundary term vanishes, f(a) = 0):
    //   aDx^s f = [ int_a^x (x-t)^{-s} f'(t) dt ] / Gamma(1-s)
    // so the differentiation lands on f's smooth part inside a weakly
    // singular integral; this stays accurate arbitrarily close to the
    // endpoints, where differentiating the (1-s)-integral pointwise
    // amplifies interpolation noise like 1/dist.
    const double inv_gamma = 1.0 / gamma_fn(1.0 - s);
    auto value = [f, a, b, pa, pb, s, inv_gamma](double x) {
      // f'(t) = (t-a)^{pa-1} (b-t)^{pb-1} core(t)
      auto G = [&](double t) {
        const double v = f.smooth(t), vp = f.smooth_deriv(t);
        const double core =
            pa * (b - t) * v - pb * (t - a) * v + (t - a) * (b - t) * vp;
        return std::pow(b - t, pb - 1.0) * core;
      };
      return inv_gamma * integrate_weighted(G, a, x, pa - 1.0, -s);
    };
    return PowerFunction::from_values(iv, out_pa, out_pb, value,
                                      PowerFunction::kDefaultDegree,
                                      /*lazy=*/true);
  }
  // exponent-raising identity for pa <= 0 (including negative):
  //   aDx^s f = [ aDx^s ((t-a) f) - s aIx^{1-s} f ] / (x-a)
  // so the derivative that actually gets computed sees a function that
  // vanishes at a and takes the exact integrated-by-parts branch above,
  // with no boundary-value estimation and no pointwise differentiation
  // of an interpolant
  PowerFunction du = left_frac_derivative(f.shifted(1.0, 0.0), order);
  PowerFunction if1 = left_frac_integral(f, FracOrder(1.0 - s));
  auto value = [du, if1, a, s](double x) {
    return (du(x) - s * if1(x)) / (x - a);
  };
  return PowerFunction::from_values(iv, out_pa, out_pb, value,
                                    PowerFunction::kDefaultDegree,
                                    /*lazy=*/true);
}

PowerFunction right_frac_derivative(const PowerFunction& f, FracOrder order) {
  const double s = order.sigma;
  require_derivative_order(s);
  if (f.is_zero()) return f;
  const Interval iv = f.interval();
  const double a = iv.a, b = iv.b;
  const double pa = f.exponent_a(), pb = f.exponent_b();
  const double out_pa = std::min(pa - s, 0.0);
  const double out_pb = pb - s;
  if (out_pb <= -1.0)
    throw std::domain_error("right_frac_derivative: result not integrable");
  if (pb > 0.0) {
    // mirror of the integrated-by-parts form (f(b) = 0):
    //   xDb^s f = [ -int_x^b (t-x)^{-s} f'(t) dt ] / Gamma(1-s)
    const double inv_gamma = 1.0 / gamma_fn(1.0 - s);
    auto value = [f, a, b, pa, pb, s, inv_gamma](double x) {
      auto G = [&](double t) {
        const double v = f.smooth(t), vp = f.smooth_deriv(t);
        const double core =
            pa * (b - t) * v - pb * (t - a) * v + (t - a) * (b - t) * vp;
        return std::pow(t - a, pa - 1.0) * core;
      };
      return -inv_gamma * integrate_weighted(G, x, b, -s, pb - 1.0);
    };
    return PowerFunction::from_values(iv, out_pa, out_pb, value,
                                      PowerFunction::kDefaultDegree,
                                      /*lazy=*/true);
  }
  // mirror exponent-raising identity for pb <= 0:
  //   xDb^s f = [ xDb^s ((b-t) f) - s xIb^{1-s} f ] / (b-x)
  PowerFunction du = right_frac_derivative(f.shifted(0.0, 1.0), order);
  PowerFunction if1 = right_frac_integral(f, FracOrder(1.0 - s));
  auto value = [du, if1, b, s](double x) {
    return (du(x) - s * if1(x)) / (b - x);
  };
  return PowerFunction::from_values(iv, out_pa, out_pb, value,
                                    PowerFunction::kDefaultDegree,
                                    /*lazy=*/true);
}

PowerFunction reflect(const PowerFunction& f) {
  if (f.is_zero()) return f;
  const Interval iv = f.interval();
  const double sum = iv.a + iv.b;
  auto v = [f, sum, lo = iv.a, hi = iv.b](double x) {
    // the mirror of a near-endpoint x can round onto the opposite endpoint
    double y = sum - x;
    if (y <= lo) y = std::nextafter(lo, hi);
    if (y >= hi) y = std::nextafter(hi, lo);
    return f.smooth(y);
  };
  return PowerFunction::from_smooth(iv, f.exponent_b(), f.exponent_a(),
                                    std::move(v),
                                    PowerFunction::kDefaultDegree,
                                    /*lazy=*/true);
}

}  // namespace abel
