#pragma once

#include <complex>

namespace jharm {

struct Hyp2f1Options {
  double rel_tol = 1e-13;
  int max_terms = 10000;
};

// Gauss hypergeometric series 2F1(a, b; c; z).
//
// Direct summation for |z| < 1. For real z < -1/2 the Pfaff transform
// z -> z/(z-1) is applied first, which keeps the effective argument in [0, 1)
// and makes every half line argument reachable. Anything else (|z| >= 1 off
// the negative axis) is outside the contract and throws DomainError.
//
// Throws PoleError when c is within 1e-12 of a non-positive integer and
// ConvergenceError when the tolerance is unreachable within max_terms.
std::complex<double> hyp2f1(std::complex<double> a, std::complex<double> b,
                            std::complex<double> c, std::complex<double> z,
                            const Hyp2f1Options& opt = {});

}  // namespace jharm
