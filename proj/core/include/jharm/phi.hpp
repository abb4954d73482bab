#pragma once

#include <array>
#include <memory>
#include <utility>
#include <vector>

#include "jharm/params.hpp"

namespace jharm {

// phi_lambda(t) = 2F1((rho - i lambda)/2, (rho + i lambda)/2; a + 1; -sinh^2 t),
// the normalized eigenfunction of the Jacobi operator with phi(0) = 1,
// phi'(0) = 0 and eigenvalue -(lambda^2 + rho^2). Real for real lambda.
//
// Evaluation strategy: hypergeometric series where it is cancellation-safe
// (lambda * tanh t small), otherwise a series-seeded Taylor march of the
// defining ODE. Absolute accuracy ~1e-12 over t <= 5, lambda <= 50 and degrades
// gracefully (oscillation-limited steps) beyond.
double jacobi_phi(const JacobiParams& p, double lambda, double t);

// Trajectory of the defining ODE
//   phi'' + ((2a+1) coth t + (2b+1) tanh t) phi' + (lambda^2 + rho^2) phi = 0
// on the uniform grid t_j = j * t_max / n_steps, j = 0..n_steps, started from
// the regular solution (even Taylor polynomial through t0, then marched with
// internal adaptive substeps). Returns (t_j, phi(t_j)) pairs. Serves as the
// independent cross-check route for jacobi_phi.
std::vector<std::pair<double, double>> jacobi_phi_ode(const JacobiParams& p,
                                                      double lambda,
                                                      double t_max, int n_steps,
                                                      double t0 = 1e-3);

// phi at one lambda on an ascending list of t values, computed with a single
// march (series below the switch point, shared ODE march above). Much cheaper
// than per-point jacobi_phi when the list is long.
std::vector<double> phi_profile(const JacobiParams& p, double lambda,
                                const std::vector<double>& ts);

namespace detail {

// lambda * sinh t for small t, lambda * tanh t otherwise: the exponent of the
// worst-case term growth of the series routes (direct / Pfaff). The series is
// cancellation-safe while this stays <= kSeriesGuardMax.
double series_guard(double lambda, double t);
inline constexpr double kSeriesGuardMax = 12.0;

// Direct evaluation by hypergeometric series (conjugate-pair fast path for
// -sinh^2 t >= -1/2, Pfaff transformation beyond). Accurate only inside the
// guard zone; jacobi_phi enforces that.
double phi_series(const JacobiParams& p, double lambda, double t);

// d/dt of the above, same validity zone. Used to seed ODE marches.
double phi_series_deriv(const JacobiParams& p, double lambda, double t);

// Largest t from which march-backed evaluators seed the ODE with series data:
// capped both by the cancellation guard and by series cost.
double series_switch_t(double lambda);

// One-step Taylor integrator for the phi ODE. At each step the local Taylor
// coefficients of the solution are generated from recurrences for coth/tanh
// (cost O(order^2)), so every step carries its own dense-output polynomial.
class PhiOdeStepper {
 public:
  static constexpr int kOrder = 20;

  struct Segment {
    double t0 = 0.0;
    double h = 0.0;
    std::array<double, kOrder + 1> c{};  // phi(t0 + x) = sum c[j] x^j, x in [0,h]

    double eval(double x) const;
    double eval_deriv(double x) const;
  };

  // State (t, phi, phi') must come from a trusted source (series or startup
  // polynomial). Requires t > 0.
  PhiOdeStepper(const JacobiParams& p, double lambda, double t, double phi,
                double dphi);

  // Take one step of at most h_cap; the chosen step also respects the local
  // Taylor radius and the oscillation scale. Returns the covered segment.
  const Segment& step(double h_cap);

  // March to exactly t_target (> current t).
  void advance_to(double t_target);

  double t() const { return t_; }
  double phi() const { return phi_; }
  double dphi() const { return dphi_; }

 private:
  void build_segment_coeffs();

  double a2p1_, b2p1_, E_;
  double t_, phi_, dphi_;
  Segment seg_;
};

}  // namespace detail

// Dense evaluator for phi at one fixed lambda: series below the switch point,
// lazily extended stored ODE segments (with their dense-output polynomials)
// above. Cheap repeated evaluation at arbitrary t, e.g. inside adaptive
// quadrature. Not thread-safe; use one instance per thread.
class PhiEvaluator {
 public:
  PhiEvaluator(const JacobiParams& p, double lambda);
  ~PhiEvaluator();
  PhiEvaluator(PhiEvaluator&&) noexcept;
  PhiEvaluator& operator=(PhiEvaluator&&) noexcept;

  double operator()(double t);

  double lambda() const { return lambda_; }

 private:
  JacobiParams p_;
  double lambda_;
  double t_switch_;
  std::unique_ptr<detail::PhiOdeStepper> stepper_;
  std::vector<detail::PhiOdeStepper::Segment> segments_;
  std::vector<double> seg_starts_;  // segment t0 values, for binary search
  double built_to_;
};

}  // namespace jharm
