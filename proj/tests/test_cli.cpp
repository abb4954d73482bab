#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "jharm/csvio.hpp"
#include "jharm/damek_ricci.hpp"
#include "jharm/params.hpp"
#include "jharm/phi.hpp"

using namespace jharm;
namespace fs = std::filesystem;

// Exercises the installed binary end to end: the test runner passes its path
// through JHARM_CLI.

namespace {

std::string cli() {
  const char* p = std::getenv("JHARM_CLI");
  return p ? p : "";
}

int run(const std::string& cmd) {
  const int st = std::system((cmd + " > /dev/null 2>&1").c_str());
  REQUIRE(st != -1);
  REQUIRE(WIFEXITED(st));
  return WEXITSTATUS(st);
}

// capture variant for commands whose stdout matters
int run_to(const std::string& cmd, const fs::path& stdout_file) {
  const int st =
      std::system((cmd + " > " + stdout_file.string() + " 2>/dev/null").c_str());
  REQUIRE(st != -1);
  REQUIRE(WIFEXITED(st));
  return WEXITSTATUS(st);
}

fs::path case_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "jharm_cli" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_text(const fs::path& p, const std::string& body) {
  std::ofstream out(p, std::ios::binary);
  out << body;
}

std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

const char* kSmallGrids =
    R"({"grids": {"lambda_max": 40, "n_lambda": 192, "t_max": 10, "n_t": 289}})";
const char* kMicroGrids =
    R"({"grids": {"lambda_max": 20, "n_lambda": 48, "t_max": 5, "n_t": 65}})";

}  // namespace

TEST_CASE("show-defaults prints a parseable config") {
  REQUIRE(!cli().empty());
  const fs::path dir = case_dir("defaults");
  const fs::path out = dir / "defaults.json";
  CHECK(run_to(cli() + " --show-defaults", out) == 0);
  const auto j = nlohmann::json::parse(read_text(out));
  CHECK(j["grids"]["lambda_max"].get<double>() == 60.0);
  CHECK(j["checks"]["paley_p"].get<double>() == 1.5);
}

TEST_CASE("phi values match the library") {
  REQUIRE(!cli().empty());
  const fs::path dir = case_dir("phi");
  CHECK(run(cli() + " phi --lambda 0.5,2 --t 0.4,1.1 --out " + dir.string()) ==
        0);
  std::ifstream in(dir / "phi.csv");
  std::string line;
  std::getline(in, line);
  REQUIRE(line == "lambda,t,phi");
  const JacobiParams p(1.0, 0.0);  // default geometry
  int rows = 0;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string f;
    double v[3];
    for (int k = 0; k < 3; ++k) {
      std::getline(ss, f, ',');
      v[k] = std::stod(f);
    }
    CHECK(v[2] == doctest::Approx(jacobi_phi(p, v[0], v[1])).epsilon(1e-12));
    ++rows;
  }
  CHECK(rows == 4);
}

TEST_CASE("phi respects a damek-ricci config") {
  REQUIRE(!cli().empty());
  const fs::path dir = case_dir("phi_dr");
  write_text(dir / "dr.json", R"({"damek_ricci": {"m": 2, "l": 1}})");
  CHECK(run(cli() + " --config " + (dir / "dr.json").string() +
            " phi --lambda 1.5 --t 0.8 --out " + dir.string()) == 0);
  std::ifstream in(dir / "phi.csv");
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  const double got = std::stod(line.substr(line.rfind(',') + 1));
  CHECK(got ==
        doctest::Approx(dr_spherical_phi(DRParams(2, 1), 1.5, 0.8))
            .epsilon(1e-12));
}

TEST_CASE("cfun closed form at the half-integer point") {
  REQUIRE(!cli().empty());
  const fs::path dir = case_dir("cfun");
  write_text(dir / "hh.json", R"({"jacobi": {"alpha": 0.5, "beta": 0.5}})");
  CHECK(run(cli() + " --config " + (dir / "hh.json").string() +
            " cfun --lambda 2 --out " + dir.string()) == 0);
  const auto [lambda, vals] = read_csv_spectral((dir / "cfun.csv").string());
  REQUIRE(lambda.size() == 1);
  CHECK(lambda[0] == 2.0);
  // c(lambda) = 2/(i lambda) here, so c(2) = -i
  CHECK(std::abs(vals[0] - std::complex<double>(0.0, -1.0)) < 1e-12);
}

TEST_CASE("transform then inverse reproduces the sampled input") {
  REQUIRE(!cli().empty());
  const fs::path dir = case_dir("roundtrip");
  write_text(dir / "small.json", kSmallGrids);
  std::vector<std::pair<double, double>> rows;
  for (int k = 0; k <= 2000; ++k) {
    const double t = 0.005 * k;
    rows.emplace_back(t, std::exp(-0.5 * t * t));
  }
  write_csv_tv((dir / "input.csv").string(), rows);
  const std::string cfg = " --config " + (dir / "small.json").string();
  CHECK(run(cli() + cfg + " transform --in " + (dir / "input.csv").string() +
            " --out " + dir.string()) == 0);
  CHECK(run(cli() + cfg + " inverse --in " + (dir / "transform.csv").string() +
            " --out " + dir.string()) == 0);
  double worst = 0.0;
  for (const auto& [t, v] : read_csv_tv((dir / "inverse.csv").string()))
    worst = std::max(worst, std::fabs(v - std::exp(-0.5 * t * t)));
  // measured 3.7e-4 on these grids
  CHECK(worst < 2e-3);
}

TEST_CASE("transform output is deterministic") {
  REQUIRE(!cli().empty());
  const fs::path dir = case_dir("determinism");
  write_text(dir / "micro.json", kMicroGrids);
  std::vector<std::pair<double, double>> rows;
  for (int k = 0; k <= 500; ++k) {
    const double t = 0.01 * k;
    rows.emplace_back(t, std::exp(-2.0 * t * t));
  }
  write_csv_tv((dir / "input.csv").string(), rows);
  const std::string cfg = " --config " + (dir / "micro.json").string();
  const fs::path d1 = dir / "run1", d2 = dir / "run2";
  CHECK(run(cli() + cfg + " transform --in " + (dir / "input.csv").string() +
            " --out " + d1.string()) == 0);
  CHECK(run(cli() + cfg + " transform --in " + (dir / "input.csv").string() +
            " --out " + d2.string()) == 0);
  const std::string a = read_text(d1 / "transform.csv");
  CHECK(!a.empty());
  CHECK(a == read_text(d2 / "transform.csv"));
}

TEST_CASE("zero input transforms to zero") {
  REQUIRE(!cli().empty());
  const fs::path dir = case_dir("zero");
  write_text(dir / "micro.json", kMicroGrids);
  std::vector<std::pair<double, double>> rows;
  for (int k = 0; k <= 50; ++k) rows.emplace_back(0.01 * k, 0.0);
  write_csv_tv((dir / "input.csv").string(), rows);
  CHECK(run(cli() + " --config " + (dir / "micro.json").string() +
            " transform --in " + (dir / "input.csv").string() + " --out " +
            dir.string()) == 0);
  const auto [lambda, vals] =
      read_csv_spectral((dir / "transform.csv").string());
  CHECK(lambda.size() == 48);
  for (const auto& v : vals) CHECK(std::abs(v) == 0.0);
}

TEST_CASE("inverse rejects spectra with a surviving imaginary part") {
  REQUIRE(!cli().empty());
  const fs::path dir = case_dir("imaginary");
  write_text(dir / "micro.json", kMicroGrids);
  std::vector<double> lambda;
  std::vector<std::complex<double>> vals;
  for (int k = 0; k <= 80; ++k) {
    const double l = 0.25 * k;
    lambda.push_back(l);
    vals.emplace_back(0.0, std::exp(-l * l));
  }
  write_csv_spectral((dir / "bad.csv").string(), lambda, vals);
  CHECK(run(cli() + " --config " + (dir / "micro.json").string() +
            " inverse --in " + (dir / "bad.csv").string() + " --out " +
            dir.string()) == 3);
}

TEST_CASE("check exit codes track the verdicts") {
  REQUIRE(!cli().empty());
  const fs::path dir = case_dir("check");
  write_text(dir / "pass.json",
             R"({"grids": {"lambda_max": 20, "n_lambda": 48, "t_max": 5, "n_t": 65},
                 "corpus": ["gauss_narrow"]})");
  CHECK(run(cli() + " --config " + (dir / "pass.json").string() +
            " check plancherel --out " + dir.string()) == 0);
  const auto j = nlohmann::json::parse(read_text(dir / "plancherel.json"));
  REQUIRE(j["checks"].size() == 1);
  CHECK(j["checks"][0]["verdict"] == "pass");

  // an impossible tolerance flips the same run to a failure
  write_text(dir / "fail.json",
             R"({"grids": {"lambda_max": 20, "n_lambda": 48, "t_max": 5, "n_t": 65},
                 "corpus": ["gauss_narrow"],
                 "checks": {"plancherel_tol": 1e-30}})");
  CHECK(run(cli() + " --config " + (dir / "fail.json").string() +
            " check plancherel --out " + dir.string()) == 1);

  // a constant symbol off the diagonal has no finite level-set bound, so the
  // check cannot decide either way
  write_text(dir / "inc.json",
             R"({"grids": {"lambda_max": 20, "n_lambda": 48, "t_max": 5, "n_t": 65},
                 "corpus": ["gauss_narrow"],
                 "checks": {"multiplier": {"gamma": 0}}})");
  CHECK(run(cli() + " --config " + (dir / "inc.json").string() +
            " check multiplier --out " + dir.string()) == 4);
  const auto jm = nlohmann::json::parse(read_text(dir / "multiplier.json"));
  CHECK(jm["checks"][0]["verdict"] == "inconclusive");
}

TEST_CASE("config and usage problems exit 2") {
  REQUIRE(!cli().empty());
  const fs::path dir = case_dir("exit2");
  CHECK(run(cli() + " --config " + (dir / "missing.json").string() +
            " check plancherel") == 2);
  write_text(dir / "broken.json", "{nope");
  CHECK(run(cli() + " --config " + (dir / "broken.json").string() +
            " check plancherel") == 2);
  write_text(dir / "bad.csv", "x,y\n0,1\n");
  CHECK(run(cli() + " transform --in " + (dir / "bad.csv").string() +
            " --out " + dir.string()) == 2);
  CHECK(run(cli() + " check bogus --out " + dir.string()) == 2);
  CHECK(run(cli() + " --bogus") == 2);
  CHECK(run(cli() + " phi --t 1 --out " + dir.string()) == 2);
  write_text(dir / "corpus.json", R"({"corpus": ["nope"]})");
  CHECK(run(cli() + " --config " + (dir / "corpus.json").string() +
            " check plancherel --out " + dir.string()) == 2);
}

TEST_CASE("report-all writes a summary and one file per suite") {
  REQUIRE(!cli().empty());
  const fs::path dir = case_dir("report_all");
  write_text(dir / "all.json",
             R"({"grids": {"lambda_max": 20, "n_lambda": 48, "t_max": 5, "n_t": 65},
                 "corpus": ["gauss_narrow"],
                 "checks": {"hy_ps": [2.0], "lipschitz_alphas": [0.5]}})");
  CHECK(run(cli() + " --config " + (dir / "all.json").string() +
            " report-all --out " + dir.string()) == 0);
  const auto summary = nlohmann::json::parse(read_text(dir / "summary.json"));
  CHECK(summary["exit"].get<int>() == 0);
  REQUIRE(summary["suites"].size() == 10);
  for (const auto& s : summary["suites"]) {
    const std::string name = s["suite"].get<std::string>();
    CHECK(fs::exists(dir / (name + ".json")));
    CHECK(s["exit"].get<int>() == 0);
  }
}
