#pragma once

#include <functional>
#include <string>
#include <vector>

#include "jharm/corpus.hpp"
#include "jharm/functions.hpp"
#include "jharm/geometry.hpp"
#include "jharm/params.hpp"
#include "jharm/quadrature.hpp"
#include "jharm/report.hpp"
#include "jharm/transform.hpp"

namespace jharm {

// p' = p/(p-1); inf at p = 1, 1 at p = inf.
double conj_exponent(double p);

struct ExponentPair {
  double p, q;
  ExponentPair(double p_, double q_);  // requires 1 < p <= 2 <= q < inf
};

// Bounded spectral symbol h(lambda) on [0, inf).
struct SymbolFunction {
  std::function<double(double)> h;
  std::string name;
};

// Nonnegative weight psi(lambda) for the weighted inequalities.
struct WeightFunction {
  std::function<double(double)> psi;
  std::string name;
};

// K(Lambda): plain-measure (|c|^-2 d lambda) mass of [0, Lambda].
double cumulative_density(const SpectralGeometry& g, double Lambda,
                          const QuadratureSpec& quad = {});

// M_psi = sup_{s>0} s * |{psi > s}| in plain measure. The scan covers
// thresholds within six decades of the peak and level sets out to
// lambda ~ 2e6; a set reaching past that, or a sup still climbing below
// the threshold window, counts as divergent. Throws InfiniteConstant in
// either case (weight not decaying fast enough against the density).
double paley_constant(const WeightFunction& psi, const SpectralGeometry& g,
                      const QuadratureSpec& quad = {});

// ( int (|f-hat| psi^gamma)^b dkappa )^(1/b); gamma = 0 skips the weight
// factor entirely, so the endpoint collapse onto the unweighted norm is
// exact. Exposed for the checks and their tests.
double weighted_spectral_norm(SpectralSampler& fhat, const WeightFunction* psi,
                              double gamma, double b);

// Weighted transform estimate with weight exponent gamma = 1/p - 1/p':
// LHS = (int (|f-hat| psi^gamma)^p dkappa)^(1/p) against M^gamma ||f||_p.
// Throws InfiniteConstant when M_psi diverges.
DiagnosticReport check_paley(const RadialFunction& f, const WeightFunction& psi,
                             double p, const TransformPlan& plan,
                             double c_global = 10.0);

// ||f-hat||_{p'} <= ||f||_p for 1 <= p <= 2 with constant exactly 1.
DiagnosticReport check_hausdorff_young(const RadialFunction& f, double p,
                                       const TransformPlan& plan);

// The interpolated family: for b in [p, p'], gamma = 1/b - 1/p',
// (int (|f-hat| psi^gamma)^b dkappa)^(1/b) <= C M^gamma ||f||_p.
// b = p' collapses onto check_hausdorff_young (identical integrand bits),
// b = p onto check_paley.
DiagnosticReport check_hyp(const RadialFunction& f, const WeightFunction& psi,
                           double p, double b, const TransformPlan& plan,
                           double c_global = 10.0);

// sup_{s>0} s |{|h| > s}|^(1/p - 1/q) in plain measure; p = q degenerates to
// sup |h|. Same scan window as paley_constant. Throws InfiniteBound when a
// scanned superlevel has infinite measure (e.g. a constant symbol with
// p < q) or the sup keeps growing below the window.
double multiplier_bound(const SymbolFunction& h, const ExponentPair& pq,
                        const SpectralGeometry& g,
                        const QuadratureSpec& quad = {});

SpectralFunction apply_multiplier(const SymbolFunction& h,
                                  const SpectralFunction& F);
RadialFunction apply_multiplier(const SymbolFunction& h,
                                const RadialFunction& f,
                                const TransformPlan& plan);

// max over the corpus of ||T_h f||_q / ||f||_p against the theoretical
// bound; inconclusive when the bound is infinite.
DiagnosticReport empirical_multiplier_ratio(const SymbolFunction& h,
                                            const ExponentPair& pq,
                                            const std::vector<CorpusItem>& corpus,
                                            const TransformPlan& plan,
                                            double c_global = 10.0);

struct SpectralBoundResult {
  double closed_form;    // two-regime sup formula over the spectrum
  double exact_numeric;  // multiplier_bound of h(lambda) = G(lambda^2 + u0)
};

// L^p -> L^q bound for G(L), L the radial Laplacian with spectrum
// [u0, inf), u0 = rho^2 (Jacobi) or Q^2/4 (DR). G must be nonincreasing on
// the spectrum (NotMonotone otherwise). closed_form takes
// sup_u G(u) x^{e(x) (1/p-1/q)} with x = u - u0, e = 3/2 for x <= 1 and
// alpha + 1 beyond; exact_numeric reuses the level-set machinery.
SpectralBoundResult spectral_bound(const std::function<double(double)>& G_of_u,
                                   const ExponentPair& pq,
                                   const SpectralGeometry& g,
                                   const QuadratureSpec& quad = {});

// omega(t) = ( int |1 - phi_lambda(t)|^2 |F|^2 dkappa )^(1/2), the spectral
// modulus of smoothness of the function with transform F.
double lipschitz_modulus(const SpectralFunction& F, double t,
                         const SpectralGeometry& g,
                         const QuadratureSpec& quad = {});

// tail(r) = int_{lambda >= r} |F|^2 dkappa
double spectral_tail(const SpectralFunction& F, double r,
                     const SpectralGeometry& g,
                     const QuadratureSpec& quad = {});

// Same tail against d lambda (no spectral density).
double lebesgue_tail(const SpectralFunction& F, double r,
                     const QuadratureSpec& quad = {});

// Lipschitz class <-> quadratic tail decay: omega(t)^2 should grow like
// t^(2 alpha) while tail(r) falls like r^(-2 alpha). Inconclusive when the
// tail decays steeper than every class the modulus can see (alpha > 1).
DiagnosticReport check_lipschitz_equivalence(const SpectralFunction& F,
                                             double alpha,
                                             const SpectralGeometry& g,
                                             const std::vector<double>& t_grid,
                                             const std::vector<double>& r_grid,
                                             const QuadratureSpec& quad = {});

enum class TailMeasure { spectral, lebesgue };

// Dini-Lipschitz tails r^(-2 alpha) (log r)^(-2 beta): recovers both
// exponents with a two-regressor fit plus a log-corrected single fit. The
// lebesgue measure shifts the power exponent by (dim - 1)/2 (DR geometry).
DiagnosticReport check_dini(const SpectralFunction& F, double alpha,
                            double beta_log, const SpectralGeometry& g,
                            const std::vector<double>& r_grid,
                            TailMeasure measure,
                            const QuadratureSpec& quad = {});

// A symbol within the <lambda>^(-gamma) envelope (<lambda>^2 =
// lambda^2 + Q^2/2) deepens a Lipschitz tail class by gamma; throws
// EnvelopeViolation when the symbol escapes the envelope. Escape detection
// probes lambda <= 4096: exceeding 1e6 there, or an envelope still climbing
// across the top decade of the probe range, both count as escapes.
DiagnosticReport check_lipschitz_multiplier_gain(
    const SymbolFunction& h, double gamma, const SpectralFunction& F,
    double alpha, const SpectralGeometry& g, const std::vector<double>& r_grid,
    const QuadratureSpec& quad = {});

// |phi| <= 1, |1 - phi| <= (t^2/2)(4 lambda^2 + Q^2/4), and a positive
// uniform floor of |1 - phi| over lambda t >= 1, on the given grids.
DiagnosticReport phi_estimate_suite(const DRParams& p,
                                    const std::vector<double>& lambda_grid,
                                    const std::vector<double>& t_grid);

// h(lambda) = (lambda^2 + Q^2/4)^(-gamma/2)
SymbolFunction preset_power_symbol(const SpectralGeometry& g, double gamma);

// Closed-form spectrum whose kappa-tail is exactly r^(-2a) for r >= 1.
SpectralFunction synthetic_tail_spectrum(const SpectralGeometry& g, double a);

// Closed-form spectrum with kappa-tail exactly r^(-2a) (log r)^(-2b) for
// r >= e^2.
SpectralFunction synthetic_dini_spectrum(const SpectralGeometry& g, double a,
                                         double b);

}  // namespace jharm
