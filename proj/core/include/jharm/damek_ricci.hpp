#pragma once

#include <array>

#include "jharm/params.hpp"
#include "jharm/quadrature.hpp"

namespace jharm {

// Spherical function of the Damek-Ricci space S(m, l) via the Jacobi
// reduction phi_lambda(t) = phi^J_{2 lambda}(t / 2).
double dr_spherical_phi(const DRParams& p, double lambda, double t);

// Spectral density of the DR Plancherel measure: Jacobi density at 2 lambda
// times the substitution Jacobian 2.
double dr_density(const DRParams& p, double lambda);

// Drift coefficient of the radial Laplace-Beltrami operator,
//   rad = d^2/dt^2 + drift(t) d/dt,
// drift(t) = (m+l)/2 coth(t/2) + (l/2) tanh(t/2). The spherical functions
// are its eigenfunctions with eigenvalue -(lambda^2 + Q^2/4).
double dr_radial_drift(const DRParams& p, double t);

// {c0, 2, cinf, m + l}: numeric leading coefficients and exact exponents of
// the density's lambda^2 behavior at 0 and lambda^(m+l) growth at infinity.
std::array<double, 4> dr_density_asymptotics(const DRParams& p);

// Area of the unit sphere S^{k-1} in R^k.
double sphere_area(int k);

// Poisson-kernel profile on N = R^m x R^l at parameter a > 0, as a function
// of the two radii (r = |X|, z = |Z|):
//   ((a + r^2/4)^2 + z^2)^(-Q).
// The kernel scales exactly: profile_a(r, z) = a^(-2Q) profile_1(r/sqrt(a), z/a).
double dr_poisson_profile(const DRParams& p, double a, double r, double z);

// Integral of the profile over N (nested polar quadrature, compactified so
// the power-law tails become finite-interval integrands). The normalized
// kernel is profile / mass; substituting X -> sqrt(a) X, Z -> a Z in the
// scaling identity gives mass(a) = a^(-Q) mass(1).
double dr_poisson_mass(const DRParams& p, double a,
                       const QuadratureSpec& quad = {});

}  // namespace jharm
