#include "jharm/transform.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "jharm/cfunction.hpp"
#include "jharm/errors.hpp"
#include "jharm/parallel.hpp"
#include "jharm/phi.hpp"
#include "jharm/weight.hpp"

namespace jharm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Quadrature spec for an integral whose domain is set by f: fixed cutoff at
// the support end when there is one, otherwise doubling helped by the decay
// hint (net of the exp(2 rho t) growth of the weight).
QuadratureSpec radial_quad(const RadialFunction& f, const TransformPlan& plan,
                           double power) {
  QuadratureSpec q = plan.quad;
  if (f.support_end()) {
    q.fixed_cutoff = *f.support_end();
  } else {
    q.fixed_cutoff.reset();
    q.decay_rate_hint =
        std::max(power * f.decay_rate() - 2.0 * plan.params.rho(), 0.0);
  }
  return q;
}

}  // namespace

TransformPlan::TransformPlan(const JacobiParams& p)
    : params(p),
      lambda_grid(default_lambda_grid()),
      t_grid(default_t_grid()) {}

TransformPlan::TransformPlan(const JacobiParams& p,
                             std::vector<double> lambda_g,
                             std::vector<double> t_g)
    : params(p), lambda_grid(std::move(lambda_g)), t_grid(std::move(t_g)) {
  for (const auto* g : {&lambda_grid, &t_grid}) {
    if (g->size() < 2) throw DomainError("TransformPlan: grid too small");
    if (!(g->front() >= 0.0)) throw DomainError("TransformPlan: grid must start >= 0");
    for (std::size_t i = 1; i < g->size(); ++i)
      if (!((*g)[i] > (*g)[i - 1]))
        throw DomainError("TransformPlan: grid must be strictly ascending");
  }
}

std::vector<double> default_lambda_grid(double lambda_max, std::size_t n) {
  if (!(lambda_max > 1.0) || n < 16)
    throw DomainError("default_lambda_grid: need lambda_max > 1, n >= 16");
  const std::size_t n_geom = n / 4;
  const std::size_t n_lin = n - 1 - n_geom;
  std::vector<double> g;
  g.reserve(n);
  g.push_back(0.0);
  for (std::size_t k = 0; k < n_geom; ++k)
    g.push_back(1e-3 * std::pow(1e3, static_cast<double>(k) /
                                         static_cast<double>(n_geom - 1)));
  for (std::size_t j = 1; j <= n_lin; ++j)
    g.push_back(1.0 + (lambda_max - 1.0) * static_cast<double>(j) /
                          static_cast<double>(n_lin));
  return g;
}

std::vector<double> default_t_grid(double t_max, std::size_t n) {
  if (!(t_max > 0.0) || n < 2)
    throw DomainError("default_t_grid: need t_max > 0, n >= 2");
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = t_max * static_cast<double>(i) / static_cast<double>(n - 1);
  return g;
}

double forward_at(const RadialFunction& f, double lambda,
                  const TransformPlan& plan) {
  PhiEvaluator phi(plan.params, lambda);
  const auto integrand = [&](double t) -> double {
    if (t <= 0.0) return 0.0;
    const double fv = f(t);
    if (fv == 0.0) return 0.0;
    const double m = std::log(std::fabs(fv)) + log_weight_A(plan.params, t);
    if (m < -700.0) return 0.0;
    if (m > 705.0) throw OverflowError("forward_at: integrand overflow");
    return (fv > 0.0 ? 1.0 : -1.0) * std::exp(m) * phi(t);
  };
  return integrate_halfline(integrand, radial_quad(f, plan, 1.0)).value;
}

SpectralFunction forward(const RadialFunction& f, const TransformPlan& plan) {
  const auto& lg = plan.lambda_grid;
  std::vector<std::complex<double>> vals(lg.size());
  parallel_for(lg.size(), [&](std::size_t i) {
    vals[i] = std::complex<double>(forward_at(f, lg[i], plan), 0.0);
  });
  return SpectralFunction::from_samples(lg, std::move(vals));
}

namespace {

// Shared per-lambda phi profiles over a fixed t grid. First writer wins;
// phi_profile is deterministic so late writers would store identical bits.
class PhiProfileCache {
 public:
  PhiProfileCache(const JacobiParams& p, const std::vector<double>& ts)
      : p_(p), ts_(ts) {}

  const std::vector<double>& at(double lambda) {
    {
      const std::lock_guard<std::mutex> lock(mu_);
      const auto it = memo_.find(lambda);
      if (it != memo_.end()) return *it->second;
    }
    auto vals = std::make_shared<const std::vector<double>>(
        phi_profile(p_, lambda, ts_));
    const std::lock_guard<std::mutex> lock(mu_);
    return *memo_.emplace(lambda, std::move(vals)).first->second;
  }

 private:
  JacobiParams p_;
  const std::vector<double>& ts_;
  std::mutex mu_;
  std::map<double, std::shared_ptr<const std::vector<double>>> memo_;
};

}  // namespace

RadialFunction inverse(const SpectralFunction& F, const TransformPlan& plan) {
  const auto& tg = plan.t_grid;
  PhiProfileCache cache(plan.params, tg);
  QuadratureSpec q = plan.quad;
  if (F.support_end()) {
    q.fixed_cutoff = *F.support_end();
  } else {
    q.decay_rate_hint = F.decay_rate();
  }
  const bool do_im = !F.is_real();
  std::vector<double> out_re(tg.size()), out_im(do_im ? tg.size() : 0);
  parallel_for(tg.size(), [&](std::size_t i) {
    const auto component = [&](bool imag_part) {
      const auto integrand = [&](double l) -> double {
        const std::complex<double> Fv = F(l);
        const double part = imag_part ? Fv.imag() : Fv.real();
        if (part == 0.0) return 0.0;
        const double dens = plancherel_density(plan.params, l);
        if (dens == 0.0) return 0.0;
        return part * dens * cache.at(l)[i];
      };
      return integrate_halfline(integrand, q).value;
    };
    out_re[i] = component(false);
    if (do_im) out_im[i] = component(true);
  });
  if (do_im) {
    double mr = 0.0, mi = 0.0;
    for (std::size_t i = 0; i < tg.size(); ++i) {
      mr = std::max(mr, std::fabs(out_re[i]));
      mi = std::max(mi, std::fabs(out_im[i]));
    }
    if (mi > 1e-8 * std::max(mr, 1e-300))
      throw NumericError(
          "inverse: imaginary output survives; F is not the transform of a "
          "real radial function");
  }
  return RadialFunction::from_samples(tg, std::move(out_re));
}

double norm_mu(const RadialFunction& f, double p, const TransformPlan& plan) {
  if (p == kInf) {
    double s = 0.0;
    for (const double t : plan.t_grid) s = std::max(s, std::fabs(f(t)));
    return s;
  }
  if (!(p >= 1.0)) throw DomainError("norm_mu: p must be >= 1 or inf");
  const auto integrand = [&](double t) -> double {
    if (t <= 0.0) return 0.0;
    const double fv = f(t);
    if (fv == 0.0) return 0.0;
    const double m = p * std::log(std::fabs(fv)) + log_weight_A(plan.params, t);
    if (m < -745.0) return 0.0;
    if (m > 705.0) throw OverflowError("norm_mu: integrand overflow");
    return std::exp(m);
  };
  const double v = integrate_halfline(integrand, radial_quad(f, plan, p)).value;
  return std::pow(v, 1.0 / p);
}

double norm_kappa(const SpectralFunction& F, double q,
                  const TransformPlan& plan) {
  if (q == kInf) {
    double s = 0.0;
    for (const double l : plan.lambda_grid) s = std::max(s, F.abs(l));
    return s;
  }
  if (!(q >= 1.0)) throw DomainError("norm_kappa: q must be >= 1 or inf");
  QuadratureSpec spec = plan.quad;
  if (F.support_end()) {
    spec.fixed_cutoff = *F.support_end();
  } else {
    spec.decay_rate_hint = q * F.decay_rate();
  }
  const auto integrand = [&](double l) -> double {
    const double av = F.abs(l);
    if (av == 0.0) return 0.0;
    const double dens = plancherel_density(plan.params, l);
    if (dens == 0.0) return 0.0;
    const double m = q * std::log(av) + std::log(dens);
    if (m < -745.0) return 0.0;
    if (m > 705.0) throw OverflowError("norm_kappa: integrand overflow");
    return std::exp(m);
  };
  const double v = integrate_halfline(integrand, spec).value;
  return std::pow(v, 1.0 / q);
}

double plancherel_defect(const RadialFunction& f, const TransformPlan& plan) {
  const double n = norm_mu(f, 2.0, plan);
  const double n2 = n * n;
  if (n2 == 0.0) throw DivisionByZero("plancherel_defect: f vanishes");
  SpectralSampler sampler(f, plan);
  const auto integrand = [&](double l) -> double {
    const double dens = plancherel_density(plan.params, l);
    if (dens == 0.0) return 0.0;
    const double fh = sampler.at(l);
    return fh * fh * dens;
  };
  const double s2 = integrate_halfline(integrand, plan.quad).value;
  return std::fabs(n2 - s2) / n2;
}

SpectralFunction translate_spherical(const SpectralFunction& F, double t,
                                     const JacobiParams& params) {
  if (!(t >= 0.0)) throw DomainError("translate_spherical: t must be >= 0");
  if (F.is_sampled()) {
    const auto& lg = F.grid();
    const auto& sv = F.samples();
    std::vector<std::complex<double>> vals(lg.size());
    parallel_for(lg.size(), [&](std::size_t i) {
      vals[i] = sv[i] * jacobi_phi(params, lg[i], t);
    });
    return SpectralFunction::from_samples(lg, std::move(vals));
  }
  return SpectralFunction::closed_form(
      [F, t, params](double l) { return F(l) * jacobi_phi(params, l, t); },
      F.decay_rate());
}

SpectralSampler::SpectralSampler(const RadialFunction& f,
                                 const TransformPlan& plan)
    : f_(f), plan_(plan) {}

double SpectralSampler::at(double lambda) {
  lambda = std::fabs(lambda);
  {
    const std::lock_guard<std::mutex> lock(mu_);
    const auto it = memo_.find(lambda);
    if (it != memo_.end()) return it->second;
  }
  const double v = forward_at(f_, lambda, plan_);
  const std::lock_guard<std::mutex> lock(mu_);
  return memo_.emplace(lambda, v).first->second;
}

}  // namespace jharm
