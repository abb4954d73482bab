#include "jharm/suites.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"

#include "jharm/damek_ricci.hpp"
#include "jharm/errors.hpp"
#include "jharm/inequalities.hpp"
#include "jharm/powerfit.hpp"

namespace jharm {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::vector<double> log_spaced(double a, double b, int n) {
  std::vector<double> out(n);
  for (int k = 0; k < n; ++k)
    out[k] = a * std::pow(b / a, k / static_cast<double>(n - 1));
  return out;
}

JacobiParams reduction_params(const RunConfig& c) {
  if (c.geometry == "damek_ricci") return dr_to_jacobi(DRParams(c.m, c.l));
  return c.jparams;
}

void check_keys(const json& j, const char* where,
                std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* a : allowed)
      if (it.key() == a) {
        known = true;
        break;
      }
    if (!known)
      throw ConfigError("config: unknown key \"" + it.key() + "\" in " +
                        where);
  }
}

const json& member(const json& j, const char* k, const char* where) {
  if (!j.is_object())
    throw ConfigError(std::string("config: ") + where + " must be an object");
  return j.at(k);
}

double num_or(const json& j, const char* k, double dflt, const char* where) {
  if (!j.contains(k)) return dflt;
  const json& v = member(j, k, where);
  if (!v.is_number())
    throw ConfigError(std::string("config: ") + where + "." + k +
                      " must be a number");
  return v.get<double>();
}

int int_or(const json& j, const char* k, int dflt, const char* where) {
  if (!j.contains(k)) return dflt;
  const json& v = member(j, k, where);
  if (!v.is_number_integer())
    throw ConfigError(std::string("config: ") + where + "." + k +
                      " must be an integer");
  return v.get<int>();
}

std::vector<double> num_list_or(const json& j, const char* k,
                                std::vector<double> dflt, const char* where) {
  if (!j.contains(k)) return dflt;
  const json& v = member(j, k, where);
  if (!v.is_array())
    throw ConfigError(std::string("config: ") + where + "." + k +
                      " must be an array of numbers");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number())
      throw ConfigError(std::string("config: ") + where + "." + k +
                        " must be an array of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

[[noreturn]] void bad(const char* what) {
  throw ConfigError(std::string("config: ") + what);
}

// ---- individual suites ----

std::vector<DiagnosticReport> suite_phi_estimates(const RunConfig& c) {
  const auto grid = log_spaced(0.05, 5.0, 21);
  auto r = phi_estimate_suite(DRParams(c.m, c.l), grid, grid);
  r.notes += "; m=" + std::to_string(c.m) + ", l=" + std::to_string(c.l);
  return {r};
}

std::vector<DiagnosticReport> suite_density(const RunConfig& c) {
  const SpectralGeometry g = config_geometry(c);
  std::vector<DiagnosticReport> out;
  {
    DiagnosticReport r;
    r.check = "density_small_lambda_cubic";
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const double L : log_spaced(0.01, 0.1, 5)) {
      const double v = cumulative_density(g, L, c.quad) / (L * L * L);
      r.samples.push_back({L, v});
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    r.bound = 0.10;
    r.empirical = hi / lo - 1.0;
    r.ratio = r.empirical / r.bound;
    r.verdict = (r.empirical < r.bound) ? "pass" : "fail";
    r.notes = "spread of K(L)/L^3 over [0.01, 0.1]";
    out.push_back(std::move(r));
  }
  {
    DiagnosticReport r;
    r.check = "density_large_lambda_power";
    const double ex = 2.0 * g.jacobi_params().alpha + 2.0;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const double L : log_spaced(10.0, 100.0, 5)) {
      const double v = cumulative_density(g, L, c.quad) / std::pow(L, ex);
      r.samples.push_back({L, v});
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    r.bound = 0.25;
    r.empirical = hi / lo - 1.0;
    r.ratio = r.empirical / r.bound;
    r.verdict = (r.empirical < r.bound) ? "pass" : "fail";
    r.notes = "spread of K(L)/L^" + fmt(ex) + " over [10, 100]";
    out.push_back(std::move(r));
  }
  if (g.is_dr()) {
    DiagnosticReport r;
    r.check = "density_dr_log_slope";
    std::vector<std::array<double, 2>> samples;
    for (const double L : log_spaced(50.0, 500.0, 9))
      samples.push_back({L, g.density_plain(L)});
    const FitResult fit = fit_growth_exponent(samples);
    const double target = g.dimension() - 1;
    r.bound = target;
    r.empirical = fit.exponent;
    r.ratio = fit.exponent / target;
    r.samples = samples;
    r.verdict = (std::fabs(fit.exponent - target) <= 0.1) ? "pass" : "fail";
    r.notes = "log-log slope of the plain density vs dimension - 1";
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<DiagnosticReport> suite_plancherel(const RunConfig& c) {
  const TransformPlan plan = config_plan(c);
  std::vector<DiagnosticReport> out;
  for (const auto& item : config_corpus(c, plan)) {
    DiagnosticReport r;
    r.check = "plancherel:" + item.name;
    const double d = plancherel_defect(item.f, plan);
    r.bound = c.plancherel_tol;
    r.empirical = d;
    r.ratio = d / r.bound;
    r.verdict = (d < r.bound) ? "pass" : "fail";
    r.notes = "relative defect of the two-norm identity";
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<DiagnosticReport> suite_hy(const RunConfig& c) {
  const TransformPlan plan = config_plan(c);
  std::vector<DiagnosticReport> out;
  for (const auto& item : config_corpus(c, plan))
    for (const double p : c.hy_ps) {
      auto r = check_hausdorff_young(item.f, p, plan);
      r.check += ":" + item.name + ":p=" + fmt(p);
      out.push_back(std::move(r));
    }
  return out;
}

WeightFunction clip_power_weight(const JacobiParams& p) {
  const double e = 2.0 * p.alpha + 3.0;
  return {[e](double l) { return std::min(1.0, std::pow(l, -e)); },
          "clip_power_" + fmt(e)};
}

std::vector<DiagnosticReport> suite_paley(const RunConfig& c) {
  const TransformPlan plan = config_plan(c);
  const WeightFunction psi = clip_power_weight(plan.params);
  std::vector<DiagnosticReport> out;
  for (const auto& item : config_corpus(c, plan)) {
    auto r = check_paley(item.f, psi, c.paley_p, plan, c.c_global);
    r.check += ":" + item.name;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<DiagnosticReport> suite_hyp(const RunConfig& c) {
  const TransformPlan plan = config_plan(c);
  const WeightFunction psi = clip_power_weight(plan.params);
  const double p = c.paley_p;
  const double pc = conj_exponent(p);
  std::vector<double> bs = c.hyp_bs;
  if (bs.empty()) bs = {p, 0.5 * (p + pc), pc};
  auto corpus = config_corpus(c, plan);
  if (corpus.size() > 2) corpus.erase(corpus.begin() + 2, corpus.end());
  std::vector<DiagnosticReport> out;
  for (const auto& item : corpus)
    for (const double b : bs) {
      auto r = check_hyp(item.f, psi, p, b, plan, c.c_global);
      r.check += ":" + item.name + ":b=" + fmt(b);
      out.push_back(std::move(r));
    }
  return out;
}

std::vector<DiagnosticReport> suite_multiplier(const RunConfig& c) {
  const TransformPlan plan = config_plan(c);
  const double rho = plan.params.rho();
  const double br = 0.5 * rho * rho;
  const double gm = c.mult_gamma;
  const SymbolFunction h{
      [br, gm](double l) { return std::pow(l * l + br, -0.5 * gm); },
      "bracket_pow_" + fmt(gm)};
  auto r = empirical_multiplier_ratio(h, ExponentPair(c.mult_p, c.mult_q),
                                      config_corpus(c, plan), plan, c.c_global);
  return {r};
}

std::vector<DiagnosticReport> suite_spectral(const RunConfig& c) {
  const SpectralGeometry g = config_geometry(c);
  const double q = g.Q();
  const double u0 = g.is_dr() ? 0.25 * q * q : q * q;
  struct ProfileCase {
    std::string name;
    std::function<double(double)> f;
  };
  const std::vector<ProfileCase> cases = {
      {"expdecay", [](double u) { return std::exp(-u); }},
      {"ratdecay", [u0](double u) { return std::pow(u - u0 + 1.0, -2.0); }}};
  const std::vector<ExponentPair> pairs = {ExponentPair(c.mult_p, c.mult_q),
                                           ExponentPair(2.0, 2.0)};
  std::vector<DiagnosticReport> out;
  for (const auto& pc : cases)
    for (const auto& pq : pairs) {
      const SpectralBoundResult sb = spectral_bound(pc.f, pq, g, c.quad);
      DiagnosticReport r;
      r.check = "spectral:" + pc.name + ":p=" + fmt(pq.p) + ",q=" + fmt(pq.q);
      r.bound = sb.exact_numeric;
      r.empirical = sb.closed_form;
      r.ratio = sb.closed_form / sb.exact_numeric;
      r.verdict =
          (r.ratio >= c.band_lo && r.ratio <= c.band_hi) ? "pass" : "fail";
      r.notes = "closed-form route over level-set route, band [" +
                fmt(c.band_lo) + ", " + fmt(c.band_hi) + "]";
      out.push_back(std::move(r));
    }
  return out;
}

std::vector<DiagnosticReport> suite_lipschitz(const RunConfig& c) {
  const SpectralGeometry g = config_geometry(c);
  const auto tg = log_spaced(0.02, 0.2, 8);
  const auto rg = log_spaced(10.0, 1000.0, 10);
  std::vector<DiagnosticReport> out;
  for (const double a : c.lip_alphas) {
    auto r = check_lipschitz_equivalence(synthetic_tail_spectrum(g, a), a, g,
                                         tg, rg, c.quad);
    r.check += ":alpha=" + fmt(a);
    out.push_back(std::move(r));
  }
  auto r = check_lipschitz_multiplier_gain(
      preset_power_symbol(g, c.gain_gamma), c.gain_gamma,
      synthetic_tail_spectrum(g, c.gain_alpha), c.gain_alpha, g, rg, c.quad);
  out.push_back(std::move(r));
  return out;
}

std::vector<DiagnosticReport> suite_dini(const RunConfig& c) {
  const SpectralGeometry g = config_geometry(c);
  const auto rg = log_spaced(8.0, 20000.0, 12);
  const SpectralFunction F =
      synthetic_dini_spectrum(g, c.dini_alpha, c.dini_beta);
  std::vector<DiagnosticReport> out;
  out.push_back(check_dini(F, c.dini_alpha, c.dini_beta, g, rg,
                           TailMeasure::spectral, c.quad));
  if (g.is_dr())
    out.push_back(check_dini(F, c.dini_alpha, c.dini_beta, g, rg,
                             TailMeasure::lebesgue, c.quad));
  return out;
}

}  // namespace

RunConfig default_config() { return RunConfig{}; }

RunConfig light_config() {
  RunConfig c;
  c.corpus = {"gauss_narrow", "gauss_wide", "heat_one"};
  c.lambda_max = 48.0;
  c.n_lambda = 384;
  c.hy_ps = {1.5, 2.0};
  c.lip_alphas = {0.5};
  return c;
}

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) bad("top level must be an object");
  check_keys(j, "top level",
             {"jacobi", "damek_ricci", "grids", "quadrature", "corpus",
              "c_global", "threads", "checks"});
  RunConfig c;
  if (j.contains("jacobi") && j.contains("damek_ricci"))
    bad("give exactly one of \"jacobi\" or \"damek_ricci\"");
  if (j.contains("jacobi")) {
    c.geometry = "jacobi";
    const json& ja = j["jacobi"];
    if (!ja.is_object()) bad("jacobi must be an object");
    check_keys(ja, "jacobi", {"alpha", "beta"});
    try {
      c.jparams = JacobiParams(num_or(ja, "alpha", 1.0, "jacobi"),
                               num_or(ja, "beta", 0.0, "jacobi"));
    } catch (const DomainError& e) {
      throw ConfigError(std::string("config: ") + e.what());
    }
  }
  if (j.contains("damek_ricci")) {
    c.geometry = "damek_ricci";
    const json& dr = j["damek_ricci"];
    if (!dr.is_object()) bad("damek_ricci must be an object");
    check_keys(dr, "damek_ricci", {"m", "l"});
    const int m = int_or(dr, "m", 2, "damek_ricci");
    const int l = int_or(dr, "l", 1, "damek_ricci");
    try {
      DRParams probe(m, l);
    } catch (const DomainError& e) {
      throw ConfigError(std::string("config: ") + e.what());
    }
    c.m = m;
    c.l = l;
  }
  if (j.contains("grids")) {
    const json& gr = j["grids"];
    if (!gr.is_object()) bad("grids must be an object");
    check_keys(gr, "grids", {"lambda_max", "n_lambda", "t_max", "n_t"});
    c.lambda_max = num_or(gr, "lambda_max", c.lambda_max, "grids");
    c.n_lambda = int_or(gr, "n_lambda", c.n_lambda, "grids");
    c.t_max = num_or(gr, "t_max", c.t_max, "grids");
    c.n_t = int_or(gr, "n_t", c.n_t, "grids");
    if (!(c.lambda_max > 0.0) || !(c.t_max > 0.0))
      bad("grids: lambda_max and t_max must be positive");
    if (c.n_lambda < 16 || c.n_t < 16)
      bad("grids: n_lambda and n_t must be at least 16");
  }
  if (j.contains("quadrature")) {
    const json& q = j["quadrature"];
    if (!q.is_object()) bad("quadrature must be an object");
    check_keys(q, "quadrature",
               {"panel_order", "rel_tol", "abs_tol", "max_depth",
                "halfline_start", "max_doublings"});
    c.quad.panel_order = int_or(q, "panel_order", c.quad.panel_order, "quadrature");
    c.quad.rel_tol = num_or(q, "rel_tol", c.quad.rel_tol, "quadrature");
    c.quad.abs_tol = num_or(q, "abs_tol", c.quad.abs_tol, "quadrature");
    c.quad.max_depth = int_or(q, "max_depth", c.quad.max_depth, "quadrature");
    c.quad.halfline_start =
        num_or(q, "halfline_start", c.quad.halfline_start, "quadrature");
    c.quad.max_doublings =
        int_or(q, "max_doublings", c.quad.max_doublings, "quadrature");
    if (c.quad.panel_order < 2 || c.quad.panel_order > 128)
      bad("quadrature: panel_order must be in [2, 128]");
    if (!(c.quad.rel_tol > 0.0) || !(c.quad.abs_tol >= 0.0))
      bad("quadrature: tolerances must be positive");
    if (c.quad.max_depth < 4 || c.quad.max_depth > 40)
      bad("quadrature: max_depth must be in [4, 40]");
    if (!(c.quad.halfline_start > 0.0))
      bad("quadrature: halfline_start must be positive");
    if (c.quad.max_doublings < 1 || c.quad.max_doublings > 40)
      bad("quadrature: max_doublings must be in [1, 40]");
  }
  if (j.contains("corpus")) {
    if (!j["corpus"].is_array()) bad("corpus must be an array of names");
    c.corpus.clear();
    for (const auto& e : j["corpus"]) {
      if (!e.is_string()) bad("corpus must be an array of names");
      c.corpus.push_back(e.get<std::string>());
    }
  }
  c.c_global = num_or(j, "c_global", c.c_global, "top level");
  if (!(c.c_global >= 1.0)) bad("c_global must be >= 1");
  c.threads = int_or(j, "threads", c.threads, "top level");
  if (c.threads < 0 || c.threads > 256) bad("threads must be in [0, 256]");
  if (j.contains("checks")) {
    const json& ck = j["checks"];
    if (!ck.is_object()) bad("checks must be an object");
    check_keys(ck, "checks",
               {"hy_ps", "paley_p", "hyp_bs", "plancherel_tol", "multiplier",
                "spectral_band", "lipschitz_alphas", "gain", "dini"});
    c.hy_ps = num_list_or(ck, "hy_ps", c.hy_ps, "checks");
    if (c.hy_ps.empty()) bad("checks.hy_ps must be nonempty");
    for (const double p : c.hy_ps)
      if (!(p >= 1.0 && p <= 2.0)) bad("checks.hy_ps entries must be in [1, 2]");
    c.paley_p = num_or(ck, "paley_p", c.paley_p, "checks");
    if (!(c.paley_p > 1.0 && c.paley_p <= 2.0))
      bad("checks.paley_p must be in (1, 2]");
    c.hyp_bs = num_list_or(ck, "hyp_bs", c.hyp_bs, "checks");
    c.plancherel_tol = num_or(ck, "plancherel_tol", c.plancherel_tol, "checks");
    if (!(c.plancherel_tol > 0.0)) bad("checks.plancherel_tol must be positive");
    if (ck.contains("multiplier")) {
      const json& mu = ck["multiplier"];
      if (!mu.is_object()) bad("checks.multiplier must be an object");
      check_keys(mu, "checks.multiplier", {"gamma", "p", "q"});
      c.mult_gamma = num_or(mu, "gamma", c.mult_gamma, "checks.multiplier");
      c.mult_p = num_or(mu, "p", c.mult_p, "checks.multiplier");
      c.mult_q = num_or(mu, "q", c.mult_q, "checks.multiplier");
      try {
        ExponentPair probe(c.mult_p, c.mult_q);
      } catch (const DomainError& e) {
        throw ConfigError(std::string("config: checks.multiplier: ") + e.what());
      }
    }
    if (ck.contains("spectral_band")) {
      const auto band =
          num_list_or(ck, "spectral_band", {c.band_lo, c.band_hi}, "checks");
      if (band.size() != 2 || !(band[0] > 0.0) || !(band[0] <= band[1]))
        bad("checks.spectral_band must be [lo, hi] with 0 < lo <= hi");
      c.band_lo = band[0];
      c.band_hi = band[1];
    }
    c.lip_alphas = num_list_or(ck, "lipschitz_alphas", c.lip_alphas, "checks");
    if (c.lip_alphas.empty()) bad("checks.lipschitz_alphas must be nonempty");
    for (const double a : c.lip_alphas)
      if (!(a > 0.0 && a <= 1.0))
        bad("checks.lipschitz_alphas entries must be in (0, 1]");
    if (ck.contains("gain")) {
      const json& ga = ck["gain"];
      if (!ga.is_object()) bad("checks.gain must be an object");
      check_keys(ga, "checks.gain", {"gamma", "alpha"});
      c.gain_gamma = num_or(ga, "gamma", c.gain_gamma, "checks.gain");
      c.gain_alpha = num_or(ga, "alpha", c.gain_alpha, "checks.gain");
      if (!(c.gain_gamma >= 0.0 && c.gain_gamma < 1.0))
        bad("checks.gain.gamma must be in [0, 1)");
      if (!(c.gain_alpha > 0.0 && c.gain_alpha < 1.0 - c.gain_gamma))
        bad("checks.gain.alpha must be in (0, 1 - gamma)");
    }
    if (ck.contains("dini")) {
      const json& di = ck["dini"];
      if (!di.is_object()) bad("checks.dini must be an object");
      check_keys(di, "checks.dini", {"alpha", "beta"});
      c.dini_alpha = num_or(di, "alpha", c.dini_alpha, "checks.dini");
      c.dini_beta = num_or(di, "beta", c.dini_beta, "checks.dini");
      if (!(c.dini_alpha > 0.0)) bad("checks.dini.alpha must be positive");
      if (!(c.dini_beta >= 0.0)) bad("checks.dini.beta must be nonnegative");
    }
  }
  return c;
}

std::string config_to_json_text(const RunConfig& c) {
  ordered_json j;
  if (c.geometry == "damek_ricci")
    j["damek_ricci"] = {{"m", c.m}, {"l", c.l}};
  else
    j["jacobi"] = {{"alpha", c.jparams.alpha}, {"beta", c.jparams.beta}};
  j["grids"] = {{"lambda_max", c.lambda_max},
                {"n_lambda", c.n_lambda},
                {"t_max", c.t_max},
                {"n_t", c.n_t}};
  j["quadrature"] = {{"panel_order", c.quad.panel_order},
                     {"rel_tol", c.quad.rel_tol},
                     {"abs_tol", c.quad.abs_tol},
                     {"max_depth", c.quad.max_depth},
                     {"halfline_start", c.quad.halfline_start},
                     {"max_doublings", c.quad.max_doublings}};
  j["corpus"] = c.corpus;
  j["c_global"] = c.c_global;
  j["threads"] = c.threads;
  j["checks"] = {
      {"hy_ps", c.hy_ps},
      {"paley_p", c.paley_p},
      {"hyp_bs", c.hyp_bs},
      {"plancherel_tol", c.plancherel_tol},
      {"multiplier",
       ordered_json{{"gamma", c.mult_gamma}, {"p", c.mult_p}, {"q", c.mult_q}}},
      {"spectral_band", std::vector<double>{c.band_lo, c.band_hi}},
      {"lipschitz_alphas", c.lip_alphas},
      {"gain", ordered_json{{"gamma", c.gain_gamma}, {"alpha", c.gain_alpha}}},
      {"dini",
       ordered_json{{"alpha", c.dini_alpha}, {"beta", c.dini_beta}}}};
  return j.dump(2) + "\n";
}

SpectralGeometry config_geometry(const RunConfig& c) {
  if (c.geometry == "damek_ricci")
    return SpectralGeometry::damek_ricci(DRParams(c.m, c.l));
  return SpectralGeometry::jacobi(c.jparams);
}

TransformPlan config_plan(const RunConfig& c) {
  TransformPlan plan(reduction_params(c),
                     default_lambda_grid(c.lambda_max, c.n_lambda),
                     default_t_grid(c.t_max, c.n_t));
  plan.quad = c.quad;
  return plan;
}

std::vector<CorpusItem> config_corpus(const RunConfig& c,
                                      const TransformPlan& plan) {
  auto full = standard_corpus(plan);
  if (c.corpus.empty()) return full;
  std::vector<CorpusItem> out;
  for (const auto& want : c.corpus) {
    const auto it =
        std::find_if(full.begin(), full.end(),
                     [&want](const CorpusItem& ci) { return ci.name == want; });
    if (it == full.end()) {
      std::string valid;
      for (const auto& ci : full) valid += (valid.empty() ? "" : ", ") + ci.name;
      throw ConfigError("config: unknown corpus item \"" + want +
                        "\"; valid: " + valid);
    }
    out.push_back(*it);
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "phi_estimates", "density_asymptotics", "plancherel", "hy",
      "paley",         "hyp",                 "multiplier", "spectral",
      "lipschitz",     "dini"};
  return names;
}

std::vector<DiagnosticReport> run_suite(const std::string& name,
                                        const RunConfig& c) {
  if (name == "phi_estimates") return suite_phi_estimates(c);
  if (name == "density_asymptotics") return suite_density(c);
  if (name == "plancherel") return suite_plancherel(c);
  if (name == "hy") return suite_hy(c);
  if (name == "paley") return suite_paley(c);
  if (name == "hyp") return suite_hyp(c);
  if (name == "multiplier") return suite_multiplier(c);
  if (name == "spectral") return suite_spectral(c);
  if (name == "lipschitz") return suite_lipschitz(c);
  if (name == "dini") return suite_dini(c);
  std::string valid;
  for (const auto& n : suite_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw ConfigError("unknown suite \"" + name + "\"; valid: " + valid);
}

int verdict_exit_code(const std::vector<DiagnosticReport>& reports) {
  bool any_fail = false, any_inconclusive = false;
  for (const auto& r : reports) {
    if (r.verdict == "fail") any_fail = true;
    if (r.verdict == "inconclusive") any_inconclusive = true;
  }
  if (any_fail) return 1;
  if (any_inconclusive) return 4;
  return 0;
}

}  // namespace jharm
