#include <benchmark/benchmark.h>

#include <cmath>

#include "jharm/cfunction.hpp"
#include "jharm/functions.hpp"
#include "jharm/phi.hpp"
#include "jharm/quadrature.hpp"
#include "jharm/transform.hpp"
#include "jharm/weight.hpp"

using namespace jharm;

namespace {

const JacobiParams kP{1.0, 0.0};

// series zone: lambda * tanh t well inside the cancellation guard
void BM_phi_series_zone(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(jacobi_phi(kP, 2.0, 0.3));
}
BENCHMARK(BM_phi_series_zone);

// march zone: the same call seeds a series start and integrates the ODE
void BM_phi_march_zone(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(jacobi_phi(kP, 20.0, 2.0));
}
BENCHMARK(BM_phi_march_zone);

// dense evaluator amortizes the march across many t at one lambda
void BM_phi_evaluator_sweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    PhiEvaluator ev(kP, 20.0);
    double acc = 0.0;
    for (int i = 1; i <= n; ++i) acc += ev(4.0 * i / n);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_phi_evaluator_sweep)->Arg(64)->Arg(512);

void BM_adaptive_integrate(benchmark::State& state) {
  const QuadratureSpec quad{};
  const auto f = [](double t) { return std::exp(-t * t) * weight_A(kP, t); };
  for (auto _ : state)
    benchmark::DoNotOptimize(integrate(f, 0.0, 8.0, quad).value);
}
BENCHMARK(BM_adaptive_integrate);

void BM_plancherel_density(benchmark::State& state) {
  double l = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(plancherel_density(kP, l));
    l = (l < 40.0) ? l * 1.7 : 0.1;
  }
}
BENCHMARK(BM_plancherel_density);

void BM_forward_single_lambda(benchmark::State& state) {
  const TransformPlan plan(kP);
  const auto f = RadialFunction::closed_form(
      [](double t) { return std::exp(-0.5 * t * t); }, 1.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(forward_at(f, 3.0, plan));
}
BENCHMARK(BM_forward_single_lambda);

}  // namespace

BENCHMARK_MAIN();
