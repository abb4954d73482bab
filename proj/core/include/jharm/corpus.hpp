#pragma once

#include <string>
#include <vector>

#include "jharm/functions.hpp"
#include "jharm/transform.hpp"

namespace jharm {

struct CorpusItem {
  std::string name;
  RadialFunction f;
};

// Heat profile f_s(t) = int_0^inf exp(-s (lambda^2 + rho^2)) phi_lambda(t)
// dkappa(lambda), tabulated once on a fine internal grid (composite
// Gauss-Legendre in lambda, panel order from quad) and wrapped as a smooth
// closed-form function with support cut at the grid end.
RadialFunction heat_profile(const JacobiParams& p, double s,
                            const QuadratureSpec& quad = {});

// The five reference profiles for empirical checks: two Gaussians, two heat
// profiles, one compactly supported bump.
std::vector<CorpusItem> standard_corpus(const TransformPlan& plan);

}  // namespace jharm
