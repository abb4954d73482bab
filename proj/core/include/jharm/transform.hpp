#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "jharm/functions.hpp"
#include "jharm/params.hpp"
#include "jharm/quadrature.hpp"

namespace jharm {

// Grid and quadrature configuration shared by transform-level operations.
struct TransformPlan {
  JacobiParams params;
  QuadratureSpec quad{};
  std::vector<double> lambda_grid;  // ascending, from 0
  std::vector<double> t_grid;       // ascending, from 0

  explicit TransformPlan(const JacobiParams& p);
  TransformPlan(const JacobiParams& p, std::vector<double> lambda_g,
                std::vector<double> t_g);
};

// Geometric knee below lambda = 1 (resolves the |c|^-2 ~ lambda^2 origin),
// then linear out to lambda_max.
std::vector<double> default_lambda_grid(double lambda_max = 60.0,
                                        std::size_t n = 512);
std::vector<double> default_t_grid(double t_max = 12.0, std::size_t n = 577);

// f-hat(lambda) = int_0^inf f(t) phi_lambda(t) A(t) dt at one lambda.
double forward_at(const RadialFunction& f, double lambda,
                  const TransformPlan& plan);

// Sampled transform on plan.lambda_grid, parallel over lambda.
SpectralFunction forward(const RadialFunction& f, const TransformPlan& plan);

// f(t) = int_0^inf F(lambda) phi_lambda(t) dkappa(lambda) on plan.t_grid,
// parallel over t. Phi profiles are computed once per quadrature node and
// shared across all t. Throws NumericError if F has an imaginary part that
// survives the integration (not a transform of a real radial function).
RadialFunction inverse(const SpectralFunction& F, const TransformPlan& plan);

// L^p norm against dmu = A(t) dt. p = inf: sup of |f| over plan.t_grid.
double norm_mu(const RadialFunction& f, double p, const TransformPlan& plan);

// L^q norm against dkappa. q = inf: sup of |F| over plan.lambda_grid.
double norm_kappa(const SpectralFunction& F, double q,
                  const TransformPlan& plan);

// | ||f||_2^2 - ||f-hat||_2^2 | / ||f||_2^2, the hat side integrated directly
// through adaptive quadrature over exact forward_at values (no grids).
double plancherel_defect(const RadialFunction& f, const TransformPlan& plan);

// Spherical translation acts on the spectral side as multiplication by
// phi_lambda(t).
SpectralFunction translate_spherical(const SpectralFunction& F, double t,
                                     const JacobiParams& params);

// Memoized direct f-hat evaluation: inequality checks integrate over it so
// each (f, lambda) quadrature runs once. Thread-safe; deterministic (the
// value at a lambda never depends on evaluation order).
class SpectralSampler {
 public:
  SpectralSampler(const RadialFunction& f, const TransformPlan& plan);

  double at(double lambda);

  const TransformPlan& plan() const { return plan_; }

 private:
  RadialFunction f_;
  TransformPlan plan_;
  std::mutex mu_;
  std::map<double, double> memo_;
};

}  // namespace jharm
