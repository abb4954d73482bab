#include "jharm/geometry.hpp"

#include <sstream>

#include "jharm/cfunction.hpp"
#include "jharm/errors.hpp"
#include "jharm/phi.hpp"

namespace jharm {

SpectralGeometry SpectralGeometry::jacobi(const JacobiParams& p) {
  return SpectralGeometry(p);
}

SpectralGeometry SpectralGeometry::damek_ricci(const DRParams& p) {
  SpectralGeometry g(dr_to_jacobi(p));
  g.dr_ = p;
  return g;
}

double SpectralGeometry::Q() const { return dr_ ? dr_->Q() : jp_.rho(); }

int SpectralGeometry::dimension() const {
  if (!dr_)
    throw DomainError("SpectralGeometry: dimension needs the DR geometry");
  return dr_->dim();
}

double SpectralGeometry::phi(double lambda, double t) const {
  if (dr_) return jacobi_phi(jp_, 2.0 * lambda, 0.5 * t);
  return jacobi_phi(jp_, lambda, t);
}

std::vector<double> SpectralGeometry::phi_profile_at(
    double lambda, const std::vector<double>& ts) const {
  if (!dr_) return phi_profile(jp_, lambda, ts);
  std::vector<double> half(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) half[i] = 0.5 * ts[i];
  return phi_profile(jp_, 2.0 * lambda, half);
}

double SpectralGeometry::density(double lambda) const {
  if (dr_) return 2.0 * plancherel_density(jp_, 2.0 * lambda);
  return plancherel_density(jp_, lambda);
}

double SpectralGeometry::density_plain(double lambda) const {
  if (dr_) return 2.0 * jharm::density_plain(jp_, 2.0 * lambda);
  return jharm::density_plain(jp_, lambda);
}

std::string SpectralGeometry::label() const {
  std::ostringstream os;
  if (dr_)
    os << "damek_ricci(m=" << dr_->m << ", l=" << dr_->l << ")";
  else
    os << "jacobi(alpha=" << jp_.alpha << ", beta=" << jp_.beta << ")";
  return os.str();
}

}  // namespace jharm
