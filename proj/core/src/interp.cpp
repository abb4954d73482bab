#include "jharm/interp.hpp"

#include <algorithm>
#include <cmath>

#include "jharm/errors.hpp"

namespace jharm {

namespace {

void check_grid(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw DomainError("spline: size mismatch");
  if (x.size() < 2) throw DomainError("spline: need at least 2 nodes");
  for (std::size_t i = 1; i < x.size(); ++i)
    if (!(x[i] > x[i - 1])) throw DomainError("spline: nodes must be strictly ascending");
}

// Hermite cubic on the interval containing t; 0 outside the range.
double hermite_eval(const std::vector<double>& x, const std::vector<double>& y,
                    const std::vector<double>& m, double t) {
  if (x.empty()) throw DomainError("spline: evaluating empty spline");
  if (t < x.front() || t > x.back()) return 0.0;
  auto it = std::upper_bound(x.begin(), x.end(), t);
  std::size_t i = (it == x.begin()) ? 0 : static_cast<std::size_t>(it - x.begin()) - 1;
  if (i >= x.size() - 1) i = x.size() - 2;
  const double h = x[i + 1] - x[i];
  const double s = (y[i + 1] - y[i]) / h;
  const double xi = t - x[i];
  const double b = (3.0 * s - 2.0 * m[i] - m[i + 1]) / h;
  const double a = (m[i] + m[i + 1] - 2.0 * s) / (h * h);
  return y[i] + xi * (m[i] + xi * (b + xi * a));
}

double sgn(double v) { return (v > 0.0) - (v < 0.0); }

// Steffen's one-sided boundary slope with its limiter.
double steffen_end_slope(double h0, double h1, double s0, double s1) {
  const double p = s0 * (1.0 + h0 / (h0 + h1)) - s1 * (h0 / (h0 + h1));
  if (p * s0 <= 0.0) return 0.0;
  if (std::fabs(p) > 2.0 * std::fabs(s0)) return 2.0 * s0;
  return p;
}

}  // namespace

SteffenSpline::SteffenSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  check_grid(x_, y_);
  const std::size_t n = x_.size();
  m_.assign(n, 0.0);
  if (n == 2) {
    const double s = (y_[1] - y_[0]) / (x_[1] - x_[0]);
    m_[0] = m_[1] = s;
    return;
  }
  std::vector<double> h(n - 1), s(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x_[i + 1] - x_[i];
    s[i] = (y_[i + 1] - y_[i]) / h[i];
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double p = (s[i - 1] * h[i] + s[i] * h[i - 1]) / (h[i - 1] + h[i]);
    m_[i] = (sgn(s[i - 1]) + sgn(s[i])) *
            std::min(std::min(std::fabs(s[i - 1]), std::fabs(s[i])),
                     0.5 * std::fabs(p));
  }
  m_[0] = steffen_end_slope(h[0], h[1], s[0], s[1]);
  m_[n - 1] = steffen_end_slope(h[n - 2], h[n - 3], s[n - 2], s[n - 3]);
}

double SteffenSpline::operator()(double t) const {
  return hermite_eval(x_, y_, m_, t);
}

ClampedCubicSpline::ClampedCubicSpline(std::vector<double> x,
                                       std::vector<double> y, double d0,
                                       double dn)
    : x_(std::move(x)), y_(std::move(y)) {
  check_grid(x_, y_);
  const std::size_t n = x_.size();
  m_.assign(n, 0.0);
  if (n == 2) {
    m_[0] = d0;
    m_[1] = dn;
    return;
  }
  // Tridiagonal system for node derivatives (Thomas algorithm); the clamped
  // ends make the first and last rows trivial.
  std::vector<double> diag(n), rhs(n), upper(n);
  diag[0] = 1.0;
  upper[0] = 0.0;
  rhs[0] = d0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double hm = x_[i] - x_[i - 1];
    const double hp = x_[i + 1] - x_[i];
    const double sm = (y_[i] - y_[i - 1]) / hm;
    const double sp = (y_[i + 1] - y_[i]) / hp;
    const double lower = 1.0 / hm;
    diag[i] = 2.0 * (1.0 / hm + 1.0 / hp);
    upper[i] = 1.0 / hp;
    rhs[i] = 3.0 * (sm / hm + sp / hp);
    const double w = lower / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  diag[n - 1] = 1.0;
  rhs[n - 1] = dn;
  m_[n - 1] = rhs[n - 1] / diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;)
    m_[i] = (rhs[i] - upper[i] * m_[i + 1]) / diag[i];
}

double ClampedCubicSpline::operator()(double t) const {
  return hermite_eval(x_, y_, m_, t);
}

}  // namespace jharm
