#pragma once

#include <vector>

namespace jharm {

// Monotonicity-preserving C^1 cubic interpolation (Steffen's limited slopes).
// The evaluation rule for every public sampled function: no overshoot between
// nodes, exact at nodes, 0 outside the node range.
class SteffenSpline {
 public:
  SteffenSpline() = default;
  SteffenSpline(std::vector<double> x, std::vector<double> y);

  double operator()(double t) const;

  bool empty() const { return x_.empty(); }
  double x_front() const { return x_.front(); }
  double x_back() const { return x_.back(); }
  const std::vector<double>& nodes() const { return x_; }
  const std::vector<double>& values() const { return y_; }

 private:
  std::vector<double> x_, y_, m_;  // nodes, values, limited node slopes
};

// Clamped C^2 cubic spline with prescribed end derivatives. Internal helper
// for densely tabulated smooth profiles, where Steffen's slope limiting would
// flatten extrema to O(h^2). Evaluates to 0 outside the node range.
class ClampedCubicSpline {
 public:
  ClampedCubicSpline() = default;
  ClampedCubicSpline(std::vector<double> x, std::vector<double> y, double d0,
                     double dn);

  double operator()(double t) const;

  bool empty() const { return x_.empty(); }
  double x_back() const { return x_.back(); }

 private:
  std::vector<double> x_, y_, m_;  // nodes, values, node derivatives
};

}  // namespace jharm
