#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jharm/params.hpp"

namespace jharm {

// The homogeneous setting a spectral-side check runs in: the Jacobi half-line
// itself, or a Damek-Ricci space through its Jacobi reduction
// phi_lambda(t) = phi^J_{2 lambda}(t/2), with densities carrying the
// substitution Jacobian 2.
class SpectralGeometry {
 public:
  static SpectralGeometry jacobi(const JacobiParams& p);
  static SpectralGeometry damek_ricci(const DRParams& p);

  const JacobiParams& jacobi_params() const { return jp_; }
  const std::optional<DRParams>& dr_params() const { return dr_; }
  bool is_dr() const { return dr_.has_value(); }

  // Homogeneous exponent: Q for Damek-Ricci, rho in plain Jacobi mode (the
  // two coincide under the reduction). The Laplacian spectrum starts at
  // Q^2/4; the envelope bracket is <lambda>^2 = lambda^2 + Q^2/2.
  double Q() const;

  // Manifold dimension for Lebesgue-measure comparisons; Damek-Ricci only.
  int dimension() const;

  double phi(double lambda, double t) const;
  std::vector<double> phi_profile_at(double lambda,
                                     const std::vector<double>& ts) const;
  double density(double lambda) const;        // dkappa / dlambda
  double density_plain(double lambda) const;  // without the 1/(2 pi)

  std::string label() const;

 private:
  explicit SpectralGeometry(const JacobiParams& p) : jp_(p) {}

  JacobiParams jp_;
  std::optional<DRParams> dr_{};
};

}  // namespace jharm
