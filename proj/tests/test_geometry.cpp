#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "jharm/cfunction.hpp"
#include "jharm/damek_ricci.hpp"
#include "jharm/errors.hpp"
#include "jharm/geometry.hpp"
#include "jharm/params.hpp"
#include "jharm/phi.hpp"

using namespace jharm;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("reduction parameter map") {
  const JacobiParams j21 = dr_to_jacobi(DRParams(2, 1));
  CHECK(j21.alpha == doctest::Approx(1.0));
  CHECK(j21.beta == doctest::Approx(0.0));
  const JacobiParams j41 = dr_to_jacobi(DRParams(4, 1));
  CHECK(j41.alpha == doctest::Approx(2.0));
  CHECK(j41.beta == doctest::Approx(0.0));
  const JacobiParams j23 = dr_to_jacobi(DRParams(2, 3));
  CHECK(j23.alpha == doctest::Approx(2.0));
  CHECK(j23.beta == doctest::Approx(1.0));
  // the homogeneous exponent survives the reduction: Q = rho
  for (const auto [m, l] : {std::pair{2, 1}, {4, 1}, {2, 3}, {6, 5}}) {
    const DRParams d(m, l);
    CHECK(d.Q() == doctest::Approx(dr_to_jacobi(d).rho()).epsilon(1e-15));
  }
}

TEST_CASE("spherical function comes from the jacobi side") {
  const DRParams d(2, 1);
  const JacobiParams j = dr_to_jacobi(d);
  for (const double la : {0.3, 1.0, 4.0})
    for (const double t : {0.2, 1.0, 2.6})
      CHECK(dr_spherical_phi(d, la, t) ==
            doctest::Approx(jacobi_phi(j, 2.0 * la, 0.5 * t)).epsilon(1e-14));
  CHECK(dr_spherical_phi(d, 2.0, 0.0) == 1.0);
}

TEST_CASE("spectral density closed form on the rank one benchmark") {
  // at (m,l) = (2,1) the plain density is pi lambda^3 / (2 tanh(pi lambda))
  // and the plancherel flavor divides by 2 pi
  const DRParams d(2, 1);
  for (const double la : {0.3, 1.0, 5.0}) {
    const double plain = kPi * la * la * la / (2.0 * std::tanh(kPi * la));
    CHECK(dr_density(d, la) ==
          doctest::Approx(plain / (2.0 * kPi)).epsilon(1e-10));
  }
}

TEST_CASE("density asymptotics") {
  // lambda^2 at the origin with coefficient 1/(4 pi), lambda^(m+l) at
  // infinity with coefficient 1/4, both for (2,1)
  const auto a21 = dr_density_asymptotics(DRParams(2, 1));
  CHECK(a21[0] == doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-2));
  CHECK(a21[1] == 2.0);
  CHECK(a21[2] == doctest::Approx(0.25).epsilon(1e-2));
  CHECK(a21[3] == 3.0);

  const auto a41 = dr_density_asymptotics(DRParams(4, 1));
  CHECK(a41[0] > 0.0);
  CHECK(a41[1] == 2.0);
  CHECK(a41[2] > 0.0);
  CHECK(a41[3] == 5.0);
}

TEST_CASE("radial drift") {
  const DRParams d(2, 1);
  const double t = 1.4;
  const double want = 1.5 / std::tanh(0.7) + 0.5 * std::tanh(0.7);
  CHECK(dr_radial_drift(d, t) == doctest::Approx(want).epsilon(1e-14));
  CHECK_THROWS_AS(dr_radial_drift(d, 0.0), DomainError);
  CHECK_THROWS_AS(dr_radial_drift(d, -1.0), DomainError);
}

TEST_CASE("unit sphere areas") {
  CHECK(sphere_area(1) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sphere_area(2) == doctest::Approx(2.0 * kPi).epsilon(1e-14));
  CHECK(sphere_area(3) == doctest::Approx(4.0 * kPi).epsilon(1e-14));
  CHECK(sphere_area(4) == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-14));
  CHECK_THROWS_AS(sphere_area(0), DomainError);
}

TEST_CASE("poisson profile formula and scaling") {
  const DRParams d(2, 1);
  const double a = 2.0, r = 1.5, z = 0.7;
  const double base = (a + r * r / 4.0) * (a + r * r / 4.0) + z * z;
  CHECK(dr_poisson_profile(d, a, r, z) ==
        doctest::Approx(std::pow(base, -d.Q())).epsilon(1e-14));
  // profile_a(r, z) = a^(-2Q) profile_1(r / sqrt(a), z / a)
  const double lhs = dr_poisson_profile(d, a, r, z);
  const double rhs = std::pow(a, -2.0 * d.Q()) *
                     dr_poisson_profile(d, 1.0, r / std::sqrt(a), z / a);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("poisson kernel mass") {
  // (2,1): the z integral gives pi / (4 A^3) with A = 1 + r^2/4, and the
  // remaining radial integral evaluates to pi^2. (4,1): the same nesting
  // runs through a beta function B(2,3) and lands on pi^3 / 2.
  CHECK(dr_poisson_mass(DRParams(2, 1), 1.0) ==
        doctest::Approx(kPi * kPi).epsilon(1e-6));
  CHECK(dr_poisson_mass(DRParams(4, 1), 1.0) ==
        doctest::Approx(kPi * kPi * kPi / 2.0).epsilon(1e-6));
  // mass scales as a^(-Q); a = 0.37 probes it away from the unit parameter
  const double m037 = dr_poisson_mass(DRParams(2, 1), 0.37);
  CHECK(m037 * std::pow(0.37, 2.0) ==
        doctest::Approx(kPi * kPi).epsilon(1e-6));
  CHECK_THROWS_AS(dr_poisson_mass(DRParams(2, 1), 0.0), DomainError);
}

TEST_CASE("spectral geometry wiring in jacobi mode") {
  const SpectralGeometry g = SpectralGeometry::jacobi(JacobiParams(1.0, 0.0));
  CHECK_FALSE(g.is_dr());
  CHECK(g.Q() == doctest::Approx(2.0));
  CHECK_THROWS_AS(g.dimension(), DomainError);
  CHECK(g.label().find("jacobi(alpha=") != std::string::npos);
  const JacobiParams p(1.0, 0.0);
  for (const double la : {0.4, 2.0}) {
    CHECK(g.density(la) ==
          doctest::Approx(plancherel_density(p, la)).epsilon(1e-14));
    CHECK(g.density_plain(la) ==
          doctest::Approx(density_plain(p, la)).epsilon(1e-14));
    CHECK(g.phi(la, 1.1) ==
          doctest::Approx(jacobi_phi(p, la, 1.1)).epsilon(1e-14));
  }
}

TEST_CASE("spectral geometry wiring in damek ricci mode") {
  const DRParams d(2, 1);
  const SpectralGeometry g = SpectralGeometry::damek_ricci(d);
  CHECK(g.is_dr());
  CHECK(g.Q() == doctest::Approx(2.0));
  CHECK(g.dimension() == 4);
  CHECK(g.label().find("damek_ricci(m=2, l=1)") != std::string::npos);
  for (const double la : {0.4, 2.0}) {
    CHECK(g.density(la) == doctest::Approx(dr_density(d, la)).epsilon(1e-14));
    CHECK(g.phi(la, 1.1) ==
          doctest::Approx(dr_spherical_phi(d, la, 1.1)).epsilon(1e-14));
  }
  // profile evaluation matches the scalar route
  const std::vector<double> ts = {0.2, 0.9, 2.1};
  const auto prof = g.phi_profile_at(1.5, ts);
  REQUIRE(prof.size() == ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i)
    CHECK(prof[i] == doctest::Approx(g.phi(1.5, ts[i])).epsilon(1e-11));
}
