#include "jharm/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "jharm/errors.hpp"

namespace jharm {

namespace {

std::vector<std::pair<double, double>> compute_gl(int n) {
  std::vector<std::pair<double, double>> nw(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton iteration on P_n from the Chebyshev-based initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    nw[i] = {-x, w};
    nw[n - 1 - i] = {x, w};
  }
  return nw;
}

double gl_panel(const std::function<double(double)>& f, double a, double b,
                const std::vector<std::pair<double, double>>& nw) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (const auto& [x, w] : nw) s += w * f(mid + half * x);
  return s * half;
}

struct AdaptState {
  const std::function<double(double)>& f;
  const std::vector<std::pair<double, double>>& nw;
  double tol_total;
  double inv_width;
  int max_depth;
  double value = 0.0;
  double err = 0.0;
  bool depth_exceeded = false;
};

void adapt(AdaptState& st, double a, double b, double coarse, int depth) {
  const double m = 0.5 * (a + b);
  const double left = gl_panel(st.f, a, m, st.nw);
  const double right = gl_panel(st.f, m, b, st.nw);
  const double fine = left + right;
  const double err = std::fabs(fine - coarse);
  // error budget proportional to the panel's share of the interval
  const double budget = st.tol_total * (b - a) * st.inv_width;
  if (err <= budget || depth >= st.max_depth || m <= a || m >= b) {
    st.value += fine;
    st.err += err;
    if (err > budget) st.depth_exceeded = true;
    return;
  }
  adapt(st, a, m, left, depth + 1);
  adapt(st, m, b, right, depth + 1);
}

}  // namespace

const std::vector<std::pair<double, double>>& gauss_legendre(int n) {
  if (n < 2 || n > 128) throw DomainError("gauss_legendre: order out of range");
  static std::mutex mu;
  static std::map<int, std::vector<std::pair<double, double>>> cache;
  const std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gl(n)).first;
  return it->second;
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadratureSpec& spec) {
  if (!(b >= a)) throw DomainError("integrate: b must be >= a");
  QuadResult r;
  if (a == b) return r;
  const auto& nw = gauss_legendre(spec.panel_order);
  const double whole = gl_panel(f, a, b, nw);
  // abs_tol acts through the scale floor: tol_total >= abs_tol always.
  const double scale =
      std::max(std::fabs(whole), spec.abs_tol / std::max(spec.rel_tol, 1e-300));
  AdaptState st{f, nw, spec.rel_tol * scale, 1.0 / (b - a), spec.max_depth};
  adapt(st, a, b, whole, 0);
  r.value = st.value;
  r.err_est = st.err;
  r.depth_exceeded = st.depth_exceeded;
  return r;
}

QuadResult integrate_halfline(const std::function<double(double)>& f,
                              const QuadratureSpec& spec) {
  if (spec.fixed_cutoff) {
    if (!(*spec.fixed_cutoff > 0.0))
      throw DomainError("integrate_halfline: fixed_cutoff must be > 0");
    QuadResult r = integrate(f, 0.0, *spec.fixed_cutoff, spec);
    r.cutoff_used = *spec.fixed_cutoff;
    return r;
  }
  double T = spec.halfline_start;
  if (spec.decay_rate_hint > 0.0) T = std::max(T, 30.0 / spec.decay_rate_hint);
  QuadResult acc = integrate(f, 0.0, T, spec);
  int quiet = 0;
  for (int d = 0; d < spec.max_doublings; ++d) {
    const QuadResult piece = integrate(f, T, 2.0 * T, spec);
    acc.value += piece.value;
    acc.err_est += piece.err_est;
    acc.depth_exceeded = acc.depth_exceeded || piece.depth_exceeded;
    T *= 2.0;
    if (std::fabs(piece.value) <=
        std::max(spec.rel_tol * std::fabs(acc.value), spec.abs_tol)) {
      if (++quiet >= 2) {
        acc.cutoff_used = T;
        return acc;
      }
    } else {
      quiet = 0;
    }
  }
  throw NoDecayDetected(
      "integrate_halfline: tail still contributing after max doublings");
}

}  // namespace jharm
