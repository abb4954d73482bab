#pragma once

#include <string>
#include <vector>

#include "jharm/corpus.hpp"
#include "jharm/geometry.hpp"
#include "jharm/params.hpp"
#include "jharm/quadrature.hpp"
#include "jharm/report.hpp"
#include "jharm/transform.hpp"

namespace jharm {

// One flat bag of knobs for every named check suite; JSON round-trippable so
// the command line can load, override, and print it.
struct RunConfig {
  std::string geometry = "jacobi";  // "jacobi" or "damek_ricci"
  JacobiParams jparams{1.0, 0.0};
  int m = 2, l = 1;  // damek_ricci mode

  double lambda_max = 60.0;
  int n_lambda = 512;
  double t_max = 12.0;
  int n_t = 577;
  QuadratureSpec quad{};

  std::vector<std::string> corpus{};  // empty = full standard corpus
  double c_global = 10.0;             // hidden-constant allowance
  int threads = 0;                    // 0 = library default

  std::vector<double> hy_ps{1.2, 1.5, 2.0};
  double paley_p = 1.5;
  std::vector<double> hyp_bs{};  // empty = {p, (p + p')/2, p'}
  double plancherel_tol = 1e-5;
  double mult_gamma = 2.0;
  double mult_p = 1.5, mult_q = 3.0;
  double band_lo = 0.2, band_hi = 5.0;  // dual-route agreement band
  std::vector<double> lip_alphas{0.3, 0.5, 0.9};
  double gain_gamma = 0.3, gain_alpha = 0.4;
  double dini_alpha = 0.5, dini_beta = 1.0;
};

RunConfig default_config();

// Trimmed corpus and grids for the all-suites report; same checks, lighter
// workload.
RunConfig light_config();

// Strict JSON parse: unknown keys, wrong types, and out-of-domain values all
// raise ConfigError.
RunConfig parse_config(const std::string& json_text);
std::string config_to_json_text(const RunConfig& cfg);

// Geometry, plan, and corpus a config resolves to. The plan always carries
// the Jacobi reduction parameters; damek_ricci mode maps (m, l) down.
SpectralGeometry config_geometry(const RunConfig& cfg);
TransformPlan config_plan(const RunConfig& cfg);
std::vector<CorpusItem> config_corpus(const RunConfig& cfg,
                                      const TransformPlan& plan);

// The named suites, in report-all order.
const std::vector<std::string>& suite_names();

// Runs one suite; ConfigError on an unknown name.
std::vector<DiagnosticReport> run_suite(const std::string& name,
                                        const RunConfig& cfg);

// 0 all pass, 1 any fail, 4 no fail but some inconclusive.
int verdict_exit_code(const std::vector<DiagnosticReport>& reports);

}  // namespace jharm
