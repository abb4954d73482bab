#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace jharm {

struct QuadratureSpec {
  int panel_order = 16;       // Gauss-Legendre nodes per panel
  double rel_tol = 1e-9;
  double abs_tol = 1e-13;
  int max_depth = 28;         // bisection depth per panel
  double halfline_start = 1.0;  // first cutoff tried on [0, inf)
  int max_doublings = 12;     // cutoff doublings before NoDecayDetected
  std::optional<double> fixed_cutoff{};  // integrate [0, cutoff] and stop
  double decay_rate_hint = 0.0;  // e-folding rate; raises the initial cutoff
};

struct QuadResult {
  double value = 0.0;
  double err_est = 0.0;       // accumulated two-level error indicators
  bool depth_exceeded = false;
  double cutoff_used = 0.0;   // half-line integrals only
};

// Nodes and weights of n-point Gauss-Legendre quadrature on [-1, 1],
// cached per order. Thread-safe.
const std::vector<std::pair<double, double>>& gauss_legendre(int n);

// Adaptive bisection with two-level (whole panel vs. two halves) error
// control. Deterministic: fixed recursion order, no randomness.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadratureSpec& spec = {});

// Integral over [0, inf): integrate [0, T] and keep doubling T until two
// consecutive increments are negligible. Throws NoDecayDetected when the tail
// refuses to decay within spec.max_doublings. A fixed_cutoff in the spec
// bypasses the doubling.
QuadResult integrate_halfline(const std::function<double(double)>& f,
                              const QuadratureSpec& spec = {});

}  // namespace jharm
