#include "jharm/damek_ricci.hpp"

#include <cmath>
#include <numbers>

#include "jharm/cfunction.hpp"
#include "jharm/errors.hpp"
#include "jharm/phi.hpp"

namespace jharm {

double dr_spherical_phi(const DRParams& p, double lambda, double t) {
  return jacobi_phi(dr_to_jacobi(p), 2.0 * lambda, 0.5 * t);
}

double dr_density(const DRParams& p, double lambda) {
  return 2.0 * plancherel_density(dr_to_jacobi(p), 2.0 * lambda);
}

double dr_radial_drift(const DRParams& p, double t) {
  if (!(t > 0.0)) throw DomainError("dr_radial_drift: t must be > 0");
  const double half = 0.5 * t;
  return 0.5 * (p.m + p.l) / std::tanh(half) + 0.5 * p.l * std::tanh(half);
}

std::array<double, 4> dr_density_asymptotics(const DRParams& p) {
  const double e_inf = static_cast<double>(p.m + p.l);  // = 2 alpha + 1
  const double l0 = 1e-4, linf = 1e4;
  const double c0 = dr_density(p, l0) / (l0 * l0);
  const double cinf = dr_density(p, linf) / std::pow(linf, e_inf);
  return {c0, 2.0, cinf, e_inf};
}

double sphere_area(int k) {
  if (k < 1) throw DomainError("sphere_area: k must be >= 1");
  return 2.0 * std::pow(std::numbers::pi, 0.5 * k) / std::tgamma(0.5 * k);
}

double dr_poisson_profile(const DRParams& p, double a, double r, double z) {
  if (!(a > 0.0)) throw DomainError("dr_poisson_profile: a must be > 0");
  const double u = a + 0.25 * r * r;
  return std::pow(u * u + z * z, -p.Q());
}

double dr_poisson_mass(const DRParams& p, double a,
                       const QuadratureSpec& quad) {
  if (!(a > 0.0)) throw DomainError("dr_poisson_mass: a must be > 0");
  // Polar coordinates in both factors of N, then s/(1-s) compactification of
  // each radius: the integrands vanish like (1-s)^(dim-2) at s = 1, so plain
  // adaptive panels on [0, 1] resolve the power-law tails.
  const auto compact = [](double s) { return s / (1.0 - s); };
  const auto jac = [](double s) {
    const double d = 1.0 - s;
    return 1.0 / (d * d);
  };
  const double zdim = static_cast<double>(p.l);
  const double rdim = static_cast<double>(p.m);
  const auto outer = [&](double sr) -> double {
    if (sr >= 1.0) return 0.0;
    const double r = compact(sr);
    const auto inner = [&](double sz) -> double {
      if (sz >= 1.0) return 0.0;
      const double z = compact(sz);
      return dr_poisson_profile(p, a, r, z) * std::pow(z, zdim - 1.0) *
             jac(sz);
    };
    return integrate(inner, 0.0, 1.0, quad).value * std::pow(r, rdim - 1.0) *
           jac(sr);
  };
  const double dbl = integrate(outer, 0.0, 1.0, quad).value;
  return sphere_area(p.m) * sphere_area(p.l) * dbl;
}

}  // namespace jharm
