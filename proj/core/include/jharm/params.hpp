#pragma once

#include <string>

#include "jharm/errors.hpp"

namespace jharm {

// Parameter pair for the Jacobi weight (2 sinh t)^(2a+1) (2 cosh t)^(2b+1).
// Standing assumption throughout: alpha >= beta > -1/2.
struct JacobiParams {
  double alpha;
  double beta;

  JacobiParams(double a, double b) : alpha(a), beta(b) {
    if (!(a >= b) || !(b > -0.5))
      throw DomainError("JacobiParams: need alpha >= beta > -1/2, got alpha=" +
                        std::to_string(a) + " beta=" + std::to_string(b));
  }

  double rho() const { return alpha + beta + 1.0; }
};

// Radial Damek-Ricci data: m = dim of the first layer (even), l = dim of the
// center. Homogeneous dimension Q = m/2 + l, manifold dimension d = m + l + 1.
struct DRParams {
  int m;
  int l;

  DRParams(int m_, int l_) : m(m_), l(l_) {
    if (m < 2 || (m % 2) != 0 || l < 1)
      throw DomainError("DRParams: need even m >= 2 and l >= 1, got m=" +
                        std::to_string(m_) + " l=" + std::to_string(l_));
  }

  double Q() const { return 0.5 * m + l; }
  int dim() const { return m + l + 1; }
  double rho_S() const { return 0.5 * Q(); }
};

// The (alpha, beta) pair whose Jacobi analysis carries the radial part of the
// Damek-Ricci Laplacian under r = t/2, lambda -> 2 lambda. Note rho = Q.
inline JacobiParams dr_to_jacobi(const DRParams& p) {
  return JacobiParams(0.5 * (p.m + p.l - 1), 0.5 * (p.l - 1));
}

}  // namespace jharm
