#include "jharm/complex_gamma.hpp"

#include <cmath>
#include <numbers>

#include "jharm/errors.hpp"

namespace jharm {

namespace {

using cd = std::complex<double>;

constexpr double kPoleTol = 1e-12;

// B_{2k} / (2k (2k-1)), k = 1..12.
constexpr double kStirling[12] = {
    8.3333333333333333e-02,  -2.7777777777777778e-03, 7.9365079365079365e-04,
    -5.9523809523809524e-04, 8.4175084175084175e-04,  -1.9175269175269175e-03,
    6.4102564102564103e-03,  -2.9550653594771242e-02, 1.7964437236883057e-01,
    -1.3924322169059011e+00, 1.3402864044168392e+01,  -1.5684828462600202e+02,
};

// Asymptotic series; caller guarantees |z| >= 10 and Re z > 0.
cd stirling(cd z) {
  cd s = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi);
  const cd zinv2 = 1.0 / (z * z);
  cd zp = 1.0 / z;
  for (double c : kStirling) {
    s += c * zp;
    zp *= zinv2;
  }
  return s;
}

bool near_pole(cd z) {
  if (std::abs(z.imag()) > kPoleTol) return false;
  const double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= kPoleTol;
}

// log sin(pi z) for Im z >= 0, written so e^{i pi z} never overflows.
// sin(pi z) = e^{-i pi z} (e^{2 i pi z} - 1) * (i/2).
cd log_sin_pi(cd z) {
  const cd ipz = cd(0.0, std::numbers::pi) * z;
  return -ipz + std::log(1.0 - std::exp(2.0 * ipz)) +
         std::log(cd(0.0, 0.5));
}

cd gamma_ln_upper(cd z) {
  if (z.real() < 0.5) {
    // Reflection; 1 - z lands in Re >= 1/2 with Im <= 0, handled by conjugation.
    const cd g1mz = std::conj(gamma_ln_upper(std::conj(1.0 - z)));
    return std::log(std::numbers::pi) - log_sin_pi(z) - g1mz;
  }
  cd shift = 0.0;
  while (std::abs(z) < 10.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling(z) - shift;
}

}  // namespace

std::complex<double> gamma_ln(std::complex<double> z) {
  if (near_pole(z))
    throw PoleError("gamma_ln: argument within 1e-12 of a pole");
  if (z.imag() < 0.0) return std::conj(gamma_ln_upper(std::conj(z)));
  return gamma_ln_upper(z);
}

}  // namespace jharm
