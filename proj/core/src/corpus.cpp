#include "jharm/corpus.hpp"

#include <cmath>
#include <memory>

#include "jharm/cfunction.hpp"
#include "jharm/errors.hpp"
#include "jharm/interp.hpp"
#include "jharm/parallel.hpp"
#include "jharm/phi.hpp"

namespace jharm {

RadialFunction heat_profile(const JacobiParams& p, double s,
                            const QuadratureSpec& quad) {
  if (!(s > 0.0)) throw DomainError("heat_profile: s must be > 0");
  constexpr double kTMax = 18.0;
  constexpr int kPerUnit = 128;
  constexpr int kNT = static_cast<int>(kTMax) * kPerUnit + 1;
  std::vector<double> tg(kNT);
  for (int i = 0; i < kNT; ++i) tg[i] = static_cast<double>(i) / kPerUnit;

  // exp(-s lambda^2) < 1e-38 beyond the cutoff; half-unit panels keep the
  // phi oscillation (period 2 pi / t) resolvable at the largest t.
  const double cut_raw = std::sqrt(87.0 / s);
  const int n_panels = std::max(2, static_cast<int>(std::ceil(cut_raw / 0.5)));
  const auto& nw = gauss_legendre(quad.panel_order);
  struct Node {
    double lambda, w;
  };
  std::vector<Node> nodes;
  nodes.reserve(static_cast<std::size_t>(n_panels) * nw.size());
  for (int k = 0; k < n_panels; ++k) {
    const double a = 0.5 * k, b = 0.5 * (k + 1);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (const auto& [x, w] : nw) nodes.push_back({mid + half * x, w * half});
  }

  const double rho2 = p.rho() * p.rho();
  std::vector<std::vector<double>> rows(nodes.size());
  parallel_for(nodes.size(), [&](std::size_t j) {
    const double l = nodes[j].lambda;
    const double coeff =
        nodes[j].w * std::exp(-s * (l * l + rho2)) * plancherel_density(p, l);
    rows[j] = phi_profile(p, l, tg);
    for (double& v : rows[j]) v *= coeff;
  });
  std::vector<double> vals(kNT, 0.0);
  for (const auto& row : rows)
    for (int i = 0; i < kNT; ++i) vals[i] += row[i];

  // Even at t=0 (derivative 0); the far end sits deep in the exponential
  // tail, so a zero clamp is harmless there.
  auto spline = std::make_shared<const ClampedCubicSpline>(std::move(tg),
                                                           std::move(vals), 0.0,
                                                           0.0);
  return RadialFunction::closed_form(
      [spline](double t) { return (*spline)(t); }, 0.0, kTMax);
}

std::vector<CorpusItem> standard_corpus(const TransformPlan& plan) {
  std::vector<CorpusItem> c;
  c.push_back({"gauss_narrow", RadialFunction::closed_form([](double t) {
                 return std::exp(-2.0 * t * t);
               })});
  c.push_back({"gauss_wide", RadialFunction::closed_form([](double t) {
                 return std::exp(-0.5 * t * t);
               })});
  c.push_back({"heat_quarter", heat_profile(plan.params, 0.25, plan.quad)});
  c.push_back({"heat_one", heat_profile(plan.params, 1.0, plan.quad)});
  c.push_back({"bump", RadialFunction::closed_form(
                           [](double t) {
                             const double x = t / 3.0;
                             if (x >= 1.0) return 0.0;
                             return std::exp(1.0 - 1.0 / (1.0 - x * x));
                           },
                           0.0, 3.0)});
  return c;
}

}  // namespace jharm
