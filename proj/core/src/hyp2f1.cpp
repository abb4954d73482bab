#include "jharm/hyp2f1.hpp"

#include <cmath>
#include <string>

#include "jharm/errors.hpp"

namespace jharm {

namespace {

using cd = std::complex<double>;

bool c_is_pole(cd c) {
  if (std::abs(c.imag()) > 1e-12) return false;
  const double r = std::round(c.real());
  return r <= 0.0 && std::abs(c.real() - r) <= 1e-12;
}

cd series(cd a, cd b, cd c, cd z, const Hyp2f1Options& opt) {
  cd term = 1.0, sum = 1.0;
  int quiet = 0;
  for (int k = 0; k < opt.max_terms; ++k) {
    const double kd = static_cast<double>(k);
    term *= (a + kd) * (b + kd) / ((c + kd) * (kd + 1.0)) * z;
    sum += term;
    // three consecutive small terms, so an oscillating run cannot fake
    // convergence at a sign change
    if (std::abs(term) <= opt.rel_tol * std::abs(sum)) {
      if (++quiet >= 3) return sum;
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("hyp2f1: series did not converge within " +
                         std::to_string(opt.max_terms) + " terms");
}

}  // namespace

cd hyp2f1(cd a, cd b, cd c, cd z, const Hyp2f1Options& opt) {
  if (c_is_pole(c)) throw PoleError("hyp2f1: c at a non-positive integer");
  if (z == cd(0.0)) return 1.0;
  if (z.imag() == 0.0 && z.real() < -0.5) {
    // Pfaff: 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1)), argument in (1/3, 1).
    const cd w = z / (z - 1.0);
    const cd pref = std::exp(-a * std::log(1.0 - z));
    return pref * series(a, c - b, c, w, opt);
  }
  if (std::abs(z) >= 1.0)
    throw DomainError("hyp2f1: |z| >= 1 outside the negative real axis");
  return series(a, b, c, z, opt);
}

}  // namespace jharm
