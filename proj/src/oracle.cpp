#include "abel/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "abel/abelcore.hpp"
#include "abel/fracops.hpp"
#include "abel/quadrature.hpp"
#include "abel/special.hpp"

namespace abel {
namespace oracle {

namespace {

// adaptive bisection with an embedded GL7 / GL15 error estimate
double adaptive(const std::function<double(double)>& G, double lo, double hi,
                double tol, int depth) {
  const GaussRule& r7 = gauss_legendre(7);
  const GaussRule& r15 = gauss_legendre(15);
  const double h = 0.5 * (hi - lo), m = 0.5 * (hi + lo);
  double i7 = 0.0, i15 = 0.0;
  for (int i = 0; i < 7; ++i) i7 += r7.w[i] * G(m + h * r7.x[i]);
  for (int i = 0; i < 15; ++i) i15 += r15.w[i] * G(m + h * r15.x[i]);
  i7 *= h;
  i15 *= h;
  if (std::abs(i15 - i7) <= tol || depth >= 42) return i15;
  return adaptive(G, lo, m, 0.5 * tol, depth + 1) +
         adaptive(G, m, hi, 0.5 * tol, depth + 1);
}

// int_a^m (t-a)^ga R(t) dt with the substitution s = (t-a)^{1+ga},
// which removes the endpoint power entirely
double half_integral(const std::function<double(double)>& R, double a,
                     double m, double ga, bool left_end, double b_full,
                     double tol) {
  const double p = 1.0 + ga;
  const double S = std::pow(std::abs(m - a), p);
  auto G = [&](double s) {
    const double d = std::pow(s, 1.0 / p);
    const double t = left_end ? a + d : a - d;
    return R(t);
  };
  (void)b_full;
  return adaptive(G, 0.0, S, tol, 0) / p;
}

}  // namespace

double reference_quadrature(const std::function<double(double)>& F, double a,
                            double b, double ga, double gb, double tol) {
  if (ga <= -1.0 || gb <= -1.0)
    throw std::domain_error("reference_quadrature: non-integrable exponent");
  const double m = 0.5 * (a + b);
  auto left_R = [&](double t) { return std::pow(b - t, gb) * F(t); };
  auto right_R = [&](double t) { return std::pow(t - a, ga) * F(t); };
  const double half_tol = 0.5 * tol;
  const double il = half_integral(left_R, a, m, ga, true, b, half_tol);
  const double ir = half_integral(right_R, b, m, gb, false, a, half_tol);
  return il + ir;
}

double reference_pv(const std::function<double(double)>& F, double a, double b,
                    double ga, double gb, double x, double tol) {
  if (!(a < x && x < b))
    throw std::domain_error("reference_pv: x must be inside (a,b)");
  const double d = std::min(x - a, b - x);
  auto excised = [&](double eps) {
    auto Gl = [&](double t) {
      return std::pow(b - t, gb) * F(t) / (t - x);
    };
    auto Gr = [&](double t) {
      return std::pow(t - a, ga) * F(t) / (t - x);
    };
    const double inner = 0.02 * tol;
    return reference_quadrature(Gl, a, x - eps, ga, 0.0, inner) +
           reference_quadrature(Gr, x + eps, b, 0.0, gb, inner);
  };
  double eps = 0.25 * d;
  double i_prev = excised(eps);
  double r_prev = 0.0;
  bool have_prev = false;
  for (int k = 0; k < 24; ++k) {
    eps *= 0.5;
    const double i_cur = excised(eps);
    const double r_cur = 2.0 * i_cur - i_prev;  // kills the O(eps) term
    if (have_prev && std::abs(r_cur - r_prev) <= tol) return r_cur;
    i_prev = i_cur;
    r_prev = r_cur;
    have_prev = true;
  }
  throw std::runtime_error("reference_pv: excision did not converge");
}

std::pair<PowerFunction, PowerFunction> manufacture_solution(
    const Interval& iv, double alpha, double beta, double mu, double qa,
    double qb, const std::vector<double>& poly_coeffs) {
  const double floor_q = 0.5 * (1.0 + mu);
  if (qa < floor_q || qb < floor_q)
    throw std::invalid_argument(
        "manufacture_solution: endpoint exponents below (1+mu)/2");
  bool all_zero = true;
  for (double c : poly_coeffs) all_zero = all_zero && c == 0.0;
  if (poly_coeffs.empty() || all_zero) {
    PowerFunction z = PowerFunction::zero(iv);
    return {z, z};
  }
  auto poly = [poly_coeffs](double x) {
    double acc = 0.0;
    for (auto it = poly_coeffs.rbegin(); it != poly_coeffs.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  };
  PowerFunction psi_star = PowerFunction::from_smooth(iv, qa, qb, poly);
  PowerFunction f =
      add(left_frac_derivative(psi_star, FracOrder(mu)).scaled(alpha),
          right_frac_derivative(psi_star, FracOrder(mu)).scaled(-beta))
          .materialized(128);
  return {psi_star, f};
}

CollocationResult collocation_solve(const ProblemSpec& spec, int n) {
  if (n < 16) throw std::invalid_argument("collocation_solve: n < 16");
  const double a = spec.interval.a, b = spec.interval.b, L = b - a;
  const double mu = spec.mu;
  // graded mesh, exponent 2 toward both endpoints
  std::vector<double> t(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double xi = static_cast<double>(i) / n;
    const double s = xi < 0.5 ? 2.0 * xi * xi
                              : 1.0 - 2.0 * (1.0 - xi) * (1.0 - xi);
    t[i] = a + L * s;
  }
  const int m = n - 1;  // interior unknowns; psi pinned to 0 at a, b
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, m);
  Eigen::VectorXd rhs(m);
  const double inv_gamma = 1.0 / gamma_fn(1.0 - mu);
  const double e1 = 1.0 - mu, e2 = 2.0 - mu;
  // product-integration weights of the piecewise-linear density
  for (int j = 1; j <= m; ++j) {
    const double x = t[j];
    for (int k = 0; k < n; ++k) {
      const double tk = t[k], tk1 = t[k + 1], h = tk1 - tk;
      double m0, m1;
      if (tk1 <= x) {  // left kernel (x - t)^{-mu}
        const double u1 = x - tk1, u2 = x - tk;
        m0 = (std::pow(u2, e1) - std::pow(u1, e1)) / e1;
        m1 = x * m0 - (std::pow(u2, e2) - std::pow(u1, e2)) / e2;
      } else {  // right kernel (t - x)^{-mu}
        const double v1 = tk - x, v2 = tk1 - x;
        m0 = (std::pow(v2, e1) - std::pow(v1, e1)) / e1;
        m1 = x * m0 + (std::pow(v2, e2) - std::pow(v1, e2)) / e2;
      }
      const double coef = (tk1 <= x ? spec.alpha : spec.beta) * inv_gamma;
      const double w_lo = coef * (tk1 * m0 - m1) / h;
      const double w_hi = coef * (m1 - tk * m0) / h;
      if (k >= 1) A(j - 1, k - 1) += w_lo;
      if (k + 1 <= m) A(j - 1, k) += w_hi;
    }
  }
  // rhs: cumulative integral of f over the mesh, plus the constant
  std::vector<double> cum(n + 1, 0.0);
  const double pa = spec.f.exponent_a(), pb = spec.f.exponent_b();
  auto smooth = [&](double y) { return spec.f.smooth(y); };
  for (int k = 0; k < n; ++k) {
    auto R = [&](double y) {
      double w = 1.0;
      if (pa != 0.0) w *= std::pow(y - a, pa);
      if (pb != 0.0) w *= std::pow(b - y, pb);
      return w * smooth(y);
    };
    double seg;
    if (k == 0)
      seg = reference_quadrature([&](double y) { return smooth(y) *
                (pb != 0.0 ? std::pow(b - y, pb) : 1.0); },
            t[0], t[1], pa, 0.0, 1e-11);
    else if (k == n - 1)
      seg = reference_quadrature([&](double y) { return smooth(y) *
                (pa != 0.0 ? std::pow(y - a, pa) : 1.0); },
            t[k], t[k + 1], 0.0, pb, 1e-11);
    else
      seg = reference_quadrature(R, t[k], t[k + 1], 0.0, 0.0, 1e-11);
    cum[k + 1] = cum[k] + seg;
  }
  for (int j = 1; j <= m; ++j) rhs(j - 1) = cum[j] + spec.c;

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
  Eigen::VectorXd sol = lu.solve(rhs);
  CollocationResult res;
  res.nodes.assign(t.begin() + 1, t.end() - 1);
  res.values.assign(sol.data(), sol.data() + m);
  const double inv_norm = lu.inverse().cwiseAbs().rowwise().sum().maxCoeff();
  const double a_norm = A.cwiseAbs().rowwise().sum().maxCoeff();
  res.condition = a_norm * inv_norm;
  if (!std::isfinite(res.condition) || res.condition > 1e14)
    throw std::runtime_error("collocation_solve: ill-posed discretization");
  return res;
}

}  // namespace oracle
}  // namespace abel
