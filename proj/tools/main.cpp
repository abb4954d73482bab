#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "jharm/cfunction.hpp"
#include "jharm/csvio.hpp"
#include "jharm/errors.hpp"
#include "jharm/inequalities.hpp"
#include "jharm/parallel.hpp"
#include "jharm/report.hpp"
#include "jharm/suites.hpp"
#include "jharm/transform.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

jharm::RunConfig load_config(const std::string& path, bool light_default) {
  if (path.empty())
    return light_default ? jharm::light_config() : jharm::default_config();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw jharm::ConfigError("config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return jharm::parse_config(buf.str());
}

void apply_threads(const jharm::RunConfig& cfg, int flag_threads) {
  if (flag_threads > 0)
    jharm::set_worker_count(flag_threads);
  else if (cfg.threads > 0)
    jharm::set_worker_count(cfg.threads);
}

fs::path ensure_out(const std::string& out_dir) {
  fs::path p(out_dir);
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec)
    throw jharm::ConfigError("cannot create output directory " + out_dir +
                             ": " + ec.message());
  return p;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.flush();
  if (!out)
    throw jharm::CsvError("cannot write " + path.string());
}

int cmd_phi(const jharm::RunConfig& cfg, const std::vector<double>& lambdas,
            const std::vector<double>& ts, const fs::path& out) {
  const jharm::SpectralGeometry g = jharm::config_geometry(cfg);
  std::vector<std::vector<double>> rows;
  rows.reserve(lambdas.size());
  for (const double l : lambdas) rows.push_back(g.phi_profile_at(l, ts));
  jharm::write_csv_phi_grid((out / "phi.csv").string(), lambdas, ts, rows);
  std::cout << "phi: " << lambdas.size() * ts.size() << " rows -> "
            << (out / "phi.csv").string() << "\n";
  return kExitPass;
}

int cmd_cfun(const jharm::RunConfig& cfg, const std::vector<double>& lambdas,
             const fs::path& out) {
  const jharm::JacobiParams p = jharm::config_plan(cfg).params;
  std::vector<std::complex<double>> vals;
  vals.reserve(lambdas.size());
  for (const double l : lambdas) vals.push_back(jharm::c_function(p, l));
  jharm::write_csv_spectral((out / "cfun.csv").string(), lambdas, vals);
  std::cout << "cfun: " << lambdas.size() << " rows -> "
            << (out / "cfun.csv").string() << "\n";
  return kExitPass;
}

int cmd_transform(const jharm::RunConfig& cfg, const std::string& in_path,
                  const fs::path& out) {
  const jharm::TransformPlan plan = jharm::config_plan(cfg);
  const auto rows = jharm::read_csv_tv(in_path);
  std::vector<double> ts, vs;
  for (const auto& [t, v] : rows) {
    ts.push_back(t);
    vs.push_back(v);
  }
  const auto f = jharm::RadialFunction::from_samples(std::move(ts),
                                                     std::move(vs));
  const jharm::SpectralFunction F = jharm::forward(f, plan);
  jharm::write_csv_spectral((out / "transform.csv").string(), F.grid(),
                            F.samples());
  std::cout << "transform: " << F.grid().size() << " rows -> "
            << (out / "transform.csv").string() << "\n";
  return kExitPass;
}

int cmd_inverse(const jharm::RunConfig& cfg, const std::string& in_path,
                const fs::path& out) {
  const jharm::TransformPlan plan = jharm::config_plan(cfg);
  auto [lambda, values] = jharm::read_csv_spectral(in_path);
  const auto F =
      jharm::SpectralFunction::from_samples(std::move(lambda),
                                            std::move(values));
  const jharm::RadialFunction f = jharm::inverse(F, plan);
  std::vector<std::pair<double, double>> rows;
  for (std::size_t i = 0; i < f.grid().size(); ++i)
    rows.emplace_back(f.grid()[i], f.samples()[i]);
  jharm::write_csv_tv((out / "inverse.csv").string(), rows);
  std::cout << "inverse: " << rows.size() << " rows -> "
            << (out / "inverse.csv").string() << "\n";
  return kExitPass;
}

void print_reports(const std::string& suite,
                   const std::vector<jharm::DiagnosticReport>& reports) {
  for (const auto& r : reports)
    std::cout << "[" << suite << "] " << r.check << ": " << r.verdict
              << " (bound " << r.bound << ", empirical " << r.empirical
              << ", ratio " << r.ratio << ")\n";
}

int cmd_check(const jharm::RunConfig& cfg, const std::string& suite,
              const fs::path& out) {
  const auto reports = jharm::run_suite(suite, cfg);
  write_text(out / (suite + ".json"), jharm::reports_to_json(reports));
  print_reports(suite, reports);
  return jharm::verdict_exit_code(reports);
}

int cmd_report_all(const jharm::RunConfig& cfg, const fs::path& out) {
  int worst = kExitPass;
  std::ostringstream summary;
  summary << "{\n  \"suites\": [\n";
  bool first = true;
  for (const auto& suite : jharm::suite_names()) {
    const auto reports = jharm::run_suite(suite, cfg);
    write_text(out / (suite + ".json"), jharm::reports_to_json(reports));
    print_reports(suite, reports);
    const int code = jharm::verdict_exit_code(reports);
    if (code == kExitFail || (code != kExitPass && worst != kExitFail))
      worst = code;
    summary << (first ? "" : ",\n") << "    {\"suite\": \"" << suite
            << "\", \"checks\": " << reports.size() << ", \"exit\": " << code
            << "}";
    first = false;
  }
  summary << "\n  ],\n  \"exit\": " << worst << "\n}\n";
  write_text(out / "summary.json", summary.str());
  std::cout << "report-all: exit " << worst << " -> " << out.string() << "\n";
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobi-transform harmonic analysis toolkit"};
  app.require_subcommand(0, 1);
  // Let --config/--out/--threads appear on either side of the subcommand name.
  app.fallthrough();

  std::string config_path, out_dir = ".";
  int threads = 0;
  bool show_defaults = false;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--out", out_dir, "output directory (created if missing)");
  app.add_option("--threads", threads, "worker thread cap");
  app.add_flag("--show-defaults", show_defaults,
               "print the default config as JSON and exit");

  std::vector<double> lambdas, ts;
  std::string in_path, suite;

  auto* phi = app.add_subcommand("phi", "evaluate spherical functions");
  phi->add_option("--lambda", lambdas, "lambda values")
      ->required()
      ->delimiter(',');
  phi->add_option("--t", ts, "t values")->required()->delimiter(',');

  auto* cfun = app.add_subcommand("cfun", "evaluate the c-function");
  cfun->add_option("--lambda", lambdas, "lambda values")
      ->required()
      ->delimiter(',');

  auto* transform =
      app.add_subcommand("transform", "forward transform of a t,value CSV");
  transform->add_option("--in", in_path, "input CSV (t,value)")->required();

  auto* inverse =
      app.add_subcommand("inverse", "inverse transform of a lambda,re,im CSV");
  inverse->add_option("--in", in_path, "input CSV (lambda,re,im)")->required();

  auto* check = app.add_subcommand("check", "run one diagnostic suite");
  check->add_option("suite", suite, "suite name")->required();

  auto* report_all =
      app.add_subcommand("report-all", "run every suite and a summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message
    return kExitConfig;
  }

  if (show_defaults) {
    std::cout << jharm::config_to_json_text(jharm::default_config());
    return kExitPass;
  }
  if (app.get_subcommands().empty()) {
    std::cout << app.help();
    return kExitPass;
  }

  try {
    // report-all defaults to the trimmed workload unless a config says
    // otherwise
    const jharm::RunConfig cfg =
        load_config(config_path, report_all->parsed());
    apply_threads(cfg, threads);
    const fs::path out = ensure_out(out_dir);
    if (phi->parsed()) return cmd_phi(cfg, lambdas, ts, out);
    if (cfun->parsed()) return cmd_cfun(cfg, lambdas, out);
    if (transform->parsed()) return cmd_transform(cfg, in_path, out);
    if (inverse->parsed()) return cmd_inverse(cfg, in_path, out);
    if (check->parsed()) return cmd_check(cfg, suite, out);
    if (report_all->parsed()) return cmd_report_all(cfg, out);
  } catch (const jharm::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const jharm::CsvError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const jharm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitPass;
}
