#include "abel/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "abel/special.hpp"

namespace abel {

namespace {

std::uint64_t bits(double x) {
  std::uint64_t u;
  std::memcpy(&u, &x, sizeof u);
  return u;
}

// Golub-Welsch: nodes are eigenvalues of the symmetric tridiagonal matrix
// built from the three-term recurrence of the orthogonal polynomials,
// weights come from the first components of the eigenvectors.
GaussRule golub_welsch(int n, double alpha, double beta) {
  if (n < 1) throw std::invalid_argument("gauss rule: n < 1");
  if (alpha <= -1.0 || beta <= -1.0)
    throw std::domain_error("gauss_jacobi: exponents must be > -1");
  Eigen::VectorXd d(n), e(n > 1 ? n - 1 : 1);
  const double s = alpha + beta;
  for (int k = 0; k < n; ++k) {
    if (k == 0)
      d(k) = (beta - alpha) / (s + 2.0);
    else
      d(k) = (beta * beta - alpha * alpha) /
             ((2.0 * k + s) * (2.0 * k + s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    double bk;
    if (k == 1)
      bk = 4.0 * (1.0 + alpha) * (1.0 + beta) /
           ((2.0 + s) * (2.0 + s) * (3.0 + s));
    else
      bk = 4.0 * k * (k + alpha) * (k + beta) * (k + s) /
           ((2.0 * k + s) * (2.0 * k + s) * (2.0 * k + s + 1.0) *
            (2.0 * k + s - 1.0));
    e(k - 1) = std::sqrt(bk);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(d, e.head(std::max(n - 1, 0)));
  const double mu0 =
      std::pow(2.0, s + 1.0) * beta_fn(alpha + 1.0, beta + 1.0);
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    r.x[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    r.w[i] = mu0 * v0 * v0;
  }
  return r;
}

std::map<std::tuple<int, std::uint64_t, std::uint64_t>, GaussRule> g_cache;
std::mutex g_mutex;

const GaussRule& cached_rule(int n, double alpha, double beta) {
  std::lock_guard<std::mutex> lock(g_mutex);
  auto key = std::make_tuple(n, bits(alpha), bits(beta));
  auto it = g_cache.find(key);
  if (it == g_cache.end())
    it = g_cache.emplace(key, golub_welsch(n, alpha, beta)).first;
  return it->second;
}

// Gauss-Legendre panel integral of G over (lo, hi).
double gl_panel(const std::function<double(double)>& G, double lo, double hi,
                int n) {
  const GaussRule& r = gauss_legendre(n);
  const double h = 0.5 * (hi - lo), m = 0.5 * (hi + lo);
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += r.w[i] * G(m + h * r.x[i]);
  return acc * h;
}

}  // namespace

const GaussRule& gauss_legendre(int n) { return cached_rule(n, 0.0, 0.0); }

const GaussRule& gauss_jacobi(int n, double alpha, double beta) {
  return cached_rule(n, alpha, beta);
}

double integrate_weighted(const std::function<double(double)>& F, double a,
                          double b, double ga, double gb) {
  if (ga <= -1.0 || gb <= -1.0)
    throw std::domain_error("integrate_weighted: non-integrable exponent");
  const double L = b - a;
  // sub-resolution interval: no representable interior point, and the
  // integral is O(L^{ga+gb+1}) anyway
  const double mid = 0.5 * (a + b);
  if (!(a < mid && mid < b)) return 0.0;
  auto clamp_inside = [a, b](double t) {
    if (t <= a) return std::nextafter(a, b);
    if (t >= b) return std::nextafter(b, a);
    return t;
  };
  // work on (0,1): t = a + L u, integrand L^{ga+gb+1} u^ga (1-u)^gb F(a+Lu).
  // Each side integrates in its own distance-from-endpoint variable so the
  // singular power never suffers cancellation near the far end.
  auto G0 = [&](double u) {
    return std::pow(u, ga) * std::pow(1.0 - u, gb) * F(clamp_inside(a + L * u));
  };
  auto G1 = [&](double v) {
    return std::pow(v, gb) * std::pow(1.0 - v, ga) * F(clamp_inside(b - L * v));
  };
  const int n_central = 24, n_panel = 24, n_edge = 24;
  const int k_min = 8, k_max = 48;
  double acc = gl_panel(G0, 0.25, 0.75, n_central);
  for (int side = 0; side < 2; ++side) {
    // dyadic ladder toward the endpoint, in that endpoint's own variable
    double scale = std::abs(acc);
    double covered = 0.25;  // ladder has reached down to this boundary
    for (int k = 2; k < k_max; ++k) {
      const double lo = std::ldexp(1.0, -k - 1), hi = std::ldexp(1.0, -k);
      const double p = side == 0 ? gl_panel(G0, lo, hi, n_panel)
                                 : gl_panel(G1, lo, hi, n_panel);
      acc += p;
      covered = lo;
      scale = std::max(scale, std::abs(acc));
      if (k >= k_min && std::abs(p) <= 1e-16 * scale) break;
    }
    // closing panel (0, covered) with the declared weight on its own end;
    // the opposite-end factor is smooth here and folded into the integrand
    const double w = covered;
    const double g_own = side == 0 ? ga : gb;
    const GaussRule& r = gauss_jacobi(n_edge, 0.0, g_own);
    // map (-1,1) -> (0,w): u = w (1+x)/2, weight (1+x)^g_own -> (2u/w)^g_own
    const double h = 0.5 * w;
    double edge = 0.0;
    for (int i = 0; i < n_edge; ++i) {
      const double u = h * (1.0 + r.x[i]);
      // distance-based node placement; for very deep ladders a+L*u or
      // b-L*u can round onto the endpoint, so clamp strictly inside
      const double t = clamp_inside(side == 0 ? a + L * u : b - L * u);
      // u is the distance from the owned endpoint; the opposite-end
      // factor is (1-u)^g in either case
      const double rest =
          std::pow(1.0 - u, side == 0 ? gb : ga) * F(t);
      edge += r.w[i] * rest;
    }
    acc += edge * std::pow(h, g_own + 1.0);
  }
  return acc * std::pow(L, ga + gb + 1.0);
}

}  // namespace abel
