#include "jharm/weight.hpp"

#include <cmath>
#include <limits>

#include "jharm/errors.hpp"

namespace jharm {

double log_weight_A(const JacobiParams& p, double t) {
  if (!(t >= 0.0)) throw DomainError("log_weight_A: t must be >= 0");
  if (t == 0.0) return -std::numeric_limits<double>::infinity();
  // log(2 sinh t) = t + log1p(-exp(-2t)), log(2 cosh t) = t + log1p(exp(-2t)).
  // Both forms stay finite for t up to ~700 where the direct products overflow.
  const double e2 = std::exp(-2.0 * t);
  const double lsh = t + std::log1p(-e2);
  const double lch = t + std::log1p(e2);
  return (2.0 * p.alpha + 1.0) * lsh + (2.0 * p.beta + 1.0) * lch;
}

double weight_A(const JacobiParams& p, double t) {
  if (!(t >= 0.0)) throw DomainError("weight_A: t must be >= 0");
  if (t == 0.0) return 0.0;  // 2 alpha + 1 > 0 always holds here
  const double m = log_weight_A(p, t);
  if (m > 709.0) throw OverflowError("weight_A: overflow, use log_weight_A");
  return std::exp(m);
}

}  // namespace jharm
