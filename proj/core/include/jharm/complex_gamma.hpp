#pragma once

#include <complex>

namespace jharm {

// Principal-branch log-Gamma on the cut plane. Strategy: conjugate-reflect to
// the upper half plane, Euler-reflect to Re z >= 1/2, recurrence-shift until
// |z| >= 10, then the Stirling series with 12 Bernoulli terms.
//
// Accuracy: better than 1e-13 relative over |Re z| <= 50, |Im z| <= 50 away
// from the poles. Throws PoleError within 1e-12 of 0, -1, -2, ...
std::complex<double> gamma_ln(std::complex<double> z);

}  // namespace jharm
