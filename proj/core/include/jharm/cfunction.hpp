#pragma once

#include <complex>

#include "jharm/params.hpp"

namespace jharm {

// Harish-Chandra c-function
//   c(lambda) = 2^(rho - i lambda) Gamma(a+1) Gamma(i lambda)
//               / ( Gamma((rho + i lambda)/2) Gamma((rho + i lambda)/2 - b) ).
// Throws PoleError at lambda = 0 where Gamma(i lambda) blows up.
std::complex<double> c_function(const JacobiParams& p, double lambda);

// |c(lambda)|^-2, the density of the plain spectral measure. Extends
// continuously by 0 to lambda = 0 (the value is ~ const * lambda^2 there).
double density_plain(const JacobiParams& p, double lambda);

// (2 pi)^-1 |c(lambda)|^-2, the density of the Plancherel measure dkappa.
double plancherel_density(const JacobiParams& p, double lambda);

}  // namespace jharm
