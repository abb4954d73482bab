#include "jharm/cfunction.hpp"

#include <cmath>
#include <numbers>

#include "jharm/complex_gamma.hpp"
#include "jharm/errors.hpp"

namespace jharm {

namespace {

using cd = std::complex<double>;

constexpr double kLn2 = 0.69314718055994531;

}  // namespace

std::complex<double> c_function(const JacobiParams& p, double lambda) {
  if (lambda == 0.0) throw PoleError("c_function: pole at lambda = 0");
  const double rho = p.rho();
  const cd il(0.0, lambda);
  const cd half_arg = 0.5 * (rho + il);
  const cd log_c = (rho - il) * kLn2 + gamma_ln(cd(p.alpha + 1.0, 0.0)) +
                   gamma_ln(il) - gamma_ln(half_arg) -
                   gamma_ln(half_arg - p.beta);
  return std::exp(log_c);
}

double density_plain(const JacobiParams& p, double lambda) {
  lambda = std::fabs(lambda);
  if (lambda == 0.0) return 0.0;
  const double rho = p.rho();
  // Write Gamma(i lambda) = Gamma(1 + i lambda) / (i lambda) so the formula
  // has no pole and the lambda^2 vanishing at the origin is explicit:
  //   |c|^-2 = lambda^2 exp(-2 Re[log c + log(i lambda)]).
  const cd il(0.0, lambda);
  const cd half_arg = 0.5 * (rho + il);
  const double re_log = rho * kLn2 + std::lgamma(p.alpha + 1.0) +
                        gamma_ln(1.0 + il).real() - gamma_ln(half_arg).real() -
                        gamma_ln(half_arg - p.beta).real();
  const double m = -2.0 * re_log + 2.0 * std::log(lambda);
  if (m > 709.0) throw OverflowError("density_plain: overflow");
  return std::exp(m);
}

double plancherel_density(const JacobiParams& p, double lambda) {
  return density_plain(p, lambda) / (2.0 * std::numbers::pi);
}

}  // namespace jharm
