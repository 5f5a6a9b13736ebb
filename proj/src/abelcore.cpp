#include "abel/abelcore.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "abel/fracops.hpp"
#include "abel/quadrature.hpp"
#include "abel/singular.hpp"
#include "abel/special.hpp"

namespace abel {

namespace {

constexpr double kMuMargin = 1e-3;

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace

ProblemSpec::ProblemSpec(const Interval& iv, double alpha_, double beta_,
                         double mu_, PowerFunction f_, double c_)
    : interval(iv), alpha(alpha_), beta(beta_), mu(mu_), f(std::move(f_)),
      c(c_) {
  if (!(alpha > 0.0 && alpha < 1.0) || !(beta > 0.0 && beta < 1.0))
    throw std::invalid_argument("ProblemSpec: alpha, beta must be in (0,1)");
  if (std::abs(alpha + beta - 1.0) > 1e-12)
    throw std::invalid_argument("ProblemSpec: alpha + beta != 1");
  if (!(mu >= kMuMargin && mu <= 1.0 - kMuMargin))
    throw std::invalid_argument("ProblemSpec: mu outside [1e-3, 1-1e-3]");
  const Interval& fv = f.interval();
  if (fv.a != iv.a || fv.b != iv.b)
    throw std::invalid_argument("ProblemSpec: f not defined on interval");
}

AngleData compute_angle(double alpha, double beta, double mu) {
  if (!(alpha > 0.0 && alpha < 1.0) || !(beta > 0.0 && beta < 1.0) ||
      std::abs(alpha + beta - 1.0) > 1e-12)
    throw std::invalid_argument("compute_angle: bad alpha/beta");
  if (!(mu >= kMuMargin && mu <= 1.0 - kMuMargin))
    throw std::invalid_argument("compute_angle: mu outside [1e-3, 1-1e-3]");
  AngleData ad;
  ad.A = alpha - beta * std::cos(mu * M_PI);
  ad.B = beta * std::sin(mu * M_PI);
  // (A-iB)/(A+iB) = e^{-2i atan2(B,A)}; normalize into [0, 2pi)
  ad.theta = 2.0 * M_PI - 2.0 * std::atan2(ad.B, ad.A);
  ad.theta_norm = ad.theta / (2.0 * M_PI);
  if (!(ad.theta > 2.0 * M_PI * mu && ad.theta < 2.0 * M_PI))
    throw std::logic_error("compute_angle: theta outside (2 pi mu, 2 pi)");
  return ad;
}

PowerFunction apply_forward(const PowerFunction& u, const ProblemSpec& spec) {
  const FracOrder order(1.0 - spec.mu);
  PowerFunction left = left_frac_integral(u, order).scaled(spec.alpha);
  PowerFunction right = right_frac_integral(u, order).scaled(spec.beta);
  return add(left, right);
}

PowerFunction apply_forward_kernel(const PowerFunction& u,
                                   const ProblemSpec& spec) {
  return apply_forward(u, spec).scaled(gamma_fn(1.0 - spec.mu));
}

PowerFunction solve_dominant(const PowerFunction& F, double c1, double c2,
                             const RepresentationChoice& choice) {
  if (c1 == 0.0 && c2 == 0.0)
    throw std::invalid_argument("solve_dominant: c1 = c2 = 0");
  if (F.is_zero()) return F;
  const double den = c1 * c1 + c2 * c2;
  if (c2 == 0.0) return F.scaled(1.0 / c1);
  const Interval iv = F.interval();
  // inversion weights come from the angle of (c1, c2) and the space
  // selector carried by choice.index: exp_a = 1 - n_a - theta/2pi,
  // exp_b = theta/2pi - n_b (the choice's own exponents belong to the
  // J representation, which is shifted by mu)
  double th = 2.0 * M_PI - 2.0 * std::atan2(c2, c1);
  if (th >= 2.0 * M_PI) th -= 2.0 * M_PI;
  if (th < 0.0) th += 2.0 * M_PI;
  const double tn = th / (2.0 * M_PI);
  const double ea = (choice.index <= 2) ? 1.0 - tn : -tn;
  const double eb = (choice.index % 2 == 1) ? tn : tn - 1.0;
  const WeightedKernel k{ea, eb};
  auto value = [F, c1, c2, den, k](double x) {
    return c1 * F(x) / den - (c2 / den) * weighted_singular(F, k, x);
  };
  const double out_pa = std::min(F.exponent_a(), ea);
  const double out_pb = std::min(F.exponent_b(), eb);
  return PowerFunction::from_values(iv, out_pa, out_pb, value,
                                    PowerFunction::kDefaultDegree,
                                    /*lazy=*/true);
}

RepresentationChoice make_representation(int index, const AngleData& angle,
                                         double mu) {
  if (index < 1 || index > 4)
    throw std::invalid_argument("make_representation: index must be 1..4");
  const double tn = angle.theta_norm;
  RepresentationChoice rc;
  rc.index = index;
  rc.exp_a = (index <= 2) ? 1.0 - tn : -tn;
  rc.exp_b = (index % 2 == 1) ? tn - mu : tn - mu - 1.0;
  return rc;
}

RepresentationChoice select_representation(double sigma,
                                           const AngleData& angle, double mu) {
  if (!(sigma > 0.0 && sigma < 1.0))
    throw std::domain_error("select_representation: sigma outside (0,1)");
  const double tn = angle.theta_norm;
  const bool high_a = sigma + tn >= 1.0;   // picks exp_a = 1 - tn
  const bool high_b = sigma + mu >= tn;    // picks exp_b = tn - mu
  int index;
  if (high_a)
    index = high_b ? 1 : 2;
  else
    index = high_b ? 3 : 4;
  return make_representation(index, angle, mu);
}

PowerFunction solve_J(const ProblemSpec& spec,
                      const RepresentationChoice& choice) {
  const AngleData ad = compute_angle(spec.alpha, spec.beta, spec.mu);
  const PowerFunction& f = spec.f;
  if (f.is_zero()) return f;
  // J = A f/(A^2+B^2) - (B/pi(A^2+B^2)) PV int w(x,t) f(t)/(t-x) dt
  // with w carrying the choice's J-representation exponents (the
  // dominant-equation weights shifted by -mu on the right factor)
  const double A = ad.A, B = ad.B, den = A * A + B * B;
  const WeightedKernel k{choice.exp_a, choice.exp_b};
  // The fourth weight pair lives in the class unbounded at both
  // endpoints, whose general solution carries an arbitrary multiple of
  // (x-a)^{exp_a}(b-x)^{exp_b}. Pinning that constant to
  // -B/(pi(A^2+B^2)) * int (t-a)^{-exp_a}(b-t)^{-exp_b-1} f dt makes the
  // formula coincide identically with the third representation; the bare
  // formula differs from it by exactly that homogeneous multiple.
  double homog = 0.0;
  if (choice.index == 4) {
    const Interval iv = spec.interval;
    const double ga = f.exponent_a() - choice.exp_a;
    const double gb = f.exponent_b() - choice.exp_b - 1.0;
    auto v = [&f](double t) { return f.smooth(t); };
    homog = -(B / (M_PI * den)) * integrate_weighted(v, iv.a, iv.b, ga, gb);
  }
  auto value = [f, A, B, den, k, homog, choice](double x) {
    double out = A * f(x) / den - (B / den) * weighted_singular(f, k, x);
    if (homog != 0.0) {
      const Interval& iv = f.interval();
      out += homog * std::pow(x - iv.a, choice.exp_a) *
             std::pow(iv.b - x, choice.exp_b);
    }
    return out;
  };
  const double out_pa = std::min(f.exponent_a(), choice.exp_a);
  const double out_pb = std::min(f.exponent_b(), choice.exp_b);
  return PowerFunction::from_values(spec.interval, out_pa, out_pb, value,
                                    PowerFunction::kDefaultDegree,
                                    /*lazy=*/true);
}

PowerFunction reconstruct_psi(const PowerFunction& J, double mu) {
  return left_frac_integral(J, FracOrder(mu));
}

PowerFunction extract_K(const PowerFunction& J, double sigma) {
  PowerFunction K = left_frac_derivative(J, FracOrder(sigma));
  if (K.exponent_a() <= -1.0 || K.exponent_b() <= -1.0)
    throw std::domain_error("extract_K: K_sigma leaves H* (exponent <= -1)");
  return K;
}

SolutionBundle solve(const ProblemSpec& spec, double sigma) {
  SolutionBundle bundle{spec, sigma, {}, {}, {}, {}, {}, 0.0, 0.0};
  bundle.angle = compute_angle(spec.alpha, spec.beta, spec.mu);
  bundle.choice = select_representation(sigma, bundle.angle, spec.mu);
  if (spec.f.is_zero()) {
    PowerFunction z = PowerFunction::zero(spec.interval);
    bundle.J = z;
    bundle.K_sigma = z;
    bundle.psi = z;
    return bundle;
  }
  bundle.J = solve_J(spec, bundle.choice).materialized(128);
  bundle.K_sigma = extract_K(bundle.J, sigma).materialized(96);
  bundle.psi = reconstruct_psi(bundle.J, spec.mu).materialized(96);
  // forward-substitution residual against aDx^{-1} f + c_hat
  PowerFunction lhs = apply_forward(bundle.psi, spec);
  PowerFunction rhs0 = left_frac_integral(spec.f, FracOrder(1.0));
  std::vector<double> r;
  for (double x : probe_points(spec.interval)) r.push_back(lhs(x) - rhs0(x));
  bundle.c_hat = mean(r);
  double worst = 0.0;
  for (double v : r) worst = std::max(worst, std::abs(v - bundle.c_hat));
  bundle.residual = worst;
  return bundle;
}

}  // namespace abel
