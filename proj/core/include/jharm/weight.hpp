#pragma once

#include "jharm/params.hpp"

namespace jharm {

// Radial density A(t) = (2 sinh t)^(2a+1) (2 cosh t)^(2b+1) of the measure
// dmu = A(t) dt on (0, inf).
double weight_A(const JacobiParams& p, double t);

// log A(t). Returns -inf at t = 0. Safe against overflow for large t, where
// log A(t) ~ 2 rho t.
double log_weight_A(const JacobiParams& p, double t);

}  // namespace jharm
