#include "jharm/powerfit.hpp"

#include <cmath>

#include "jharm/errors.hpp"

namespace jharm {

FitResult fit_growth_exponent(
    const std::vector<std::array<double, 2>>& samples) {
  const std::size_t n = samples.size();
  if (n < 3) throw DegenerateFit("fit_growth_exponent: need at least 3 points");
  double su = 0.0, sw = 0.0;
  std::vector<double> u(n), w(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(samples[i][0] > 0.0) || !(samples[i][1] > 0.0))
      throw DegenerateFit("fit_growth_exponent: data must be positive");
    u[i] = std::log(samples[i][0]);
    w[i] = std::log(samples[i][1]);
    su += u[i];
    sw += w[i];
  }
  const double mu = su / n, mw = sw / n;
  double suu = 0.0, suw = 0.0, sww = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    suu += (u[i] - mu) * (u[i] - mu);
    suw += (u[i] - mu) * (w[i] - mw);
    sww += (w[i] - mw) * (w[i] - mw);
  }
  if (!(suu > 0.0))
    throw DegenerateFit("fit_growth_exponent: x values coincide");
  FitResult r;
  r.exponent = suw / suu;
  r.log_coeff = mw - r.exponent * mu;
  if (sww <= 1e-30) {
    r.r2 = 1.0;  // exactly flat data, perfectly fit by the constant
    return r;
  }
  const double ss_res = sww - suw * suw / suu;
  r.r2 = 1.0 - ss_res / sww;
  if (r.r2 < 0.5)
    throw DegenerateFit("fit_growth_exponent: r^2 below 0.5, not a power law");
  return r;
}

PowerLogFit fit_power_log(const std::vector<std::array<double, 2>>& samples) {
  const std::size_t n = samples.size();
  if (n < 4) throw DegenerateFit("fit_power_log: need at least 4 points");
  std::vector<double> u(n), v(n), w(n);
  double su = 0.0, sv = 0.0, sw = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(samples[i][0] > 1.0) || !(samples[i][1] > 0.0))
      throw DegenerateFit("fit_power_log: need x > 1 and y > 0");
    u[i] = std::log(samples[i][0]);
    v[i] = std::log(u[i]);
    w[i] = std::log(samples[i][1]);
    su += u[i];
    sv += v[i];
    sw += w[i];
  }
  const double mu = su / n, mv = sv / n, mw = sw / n;
  double suu = 0.0, suv = 0.0, svv = 0.0, suw = 0.0, svw = 0.0, sww = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double du = u[i] - mu, dv = v[i] - mv, dw = w[i] - mw;
    suu += du * du;
    suv += du * dv;
    svv += dv * dv;
    suw += du * dw;
    svw += dv * dw;
    sww += dw * dw;
  }
  const double det = suu * svv - suv * suv;
  if (!(det > 1e-12 * std::max(suu * svv, 1e-300)))
    throw DegenerateFit("fit_power_log: regressors are collinear");
  PowerLogFit r;
  r.exponent = (svv * suw - suv * svw) / det;
  r.log_exponent = (suu * svw - suv * suw) / det;
  r.log_coeff = mw - r.exponent * mu - r.log_exponent * mv;
  if (sww <= 1e-30) {
    r.r2 = 1.0;
    return r;
  }
  const double ss_res = sww - r.exponent * suw - r.log_exponent * svw;
  r.r2 = 1.0 - ss_res / sww;
  if (r.r2 < 0.5) throw DegenerateFit("fit_power_log: r^2 below 0.5");
  return r;
}

}  // namespace jharm
