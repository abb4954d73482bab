#pragma once

#include <array>
#include <vector>

namespace jharm {

struct FitResult {
  double exponent = 0.0;   // slope of log y against log x
  double log_coeff = 0.0;  // intercept (log of the prefactor)
  double r2 = 0.0;
};

// Least-squares line through (log x, log y). Throws DegenerateFit for fewer
// than 3 points, non-positive data, or r^2 < 0.5.
FitResult fit_growth_exponent(const std::vector<std::array<double, 2>>& samples);

struct PowerLogFit {
  double exponent = 0.0;      // a in y ~ C x^a (log x)^b
  double log_exponent = 0.0;  // b
  double log_coeff = 0.0;     // log C
  double r2 = 0.0;
};

// Two-regressor least squares of log y against (log x, log log x). Requires
// x > 1 throughout and at least 4 points; throws DegenerateFit when the
// regressors are (numerically) collinear or r^2 < 0.5.
PowerLogFit fit_power_log(const std::vector<std::array<double, 2>>& samples);

}  // namespace jharm
