#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "isw/cli/commands.hpp"
#include "isw/cli/output.hpp"
#include "isw/cli/validate.hpp"

namespace fs = std::filesystem;
using namespace isw::cli;

namespace {

fs::path scratch(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("isw_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int shell(const std::string& args) {
  const std::string cmd = std::string(ISW_BINARY) + " " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

RunConfig config(Command c, const fs::path& out) {
  RunConfig cfg;
  cfg.command = c;
  cfg.output_dir = out;
  return cfg;
}

}  // namespace

TEST_CASE("shortest round-trip floats") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-2.5e-300) == "-2.5e-300");
  const double x = 0.1 + 0.2;
  CHECK(std::stod(format_double(x)) == x);
}

TEST_CASE("csv layout") {
  Table t;
  t.columns = {"a", "b"};
  t.add_row({1.0, 0.5});
  const auto s = csv_string({{"command", "x"}}, t);
  CHECK(s == "# {\"command\":\"x\"}\na,b\n1,0.5\n");
  CHECK_THROWS(t.add_row({1.0}));
  const auto svg = svg_string(t, 0, {1}, "demo");
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("viewBox=\"0 0 800 500\"") != std::string::npos);
}

TEST_CASE("density output is byte-deterministic") {
  const auto a = scratch("det_a"), b = scratch("det_b");
  std::ostringstream out, err;
  auto cfg = config(Command::Density, a);
  cfg.params.n = 15;
  cfg.params.grid = 101;
  REQUIRE(run(cfg, out, err) == kExitOk);
  cfg.output_dir = b;
  REQUIRE(run(cfg, out, err) == kExitOk);
  const auto first = slurp(a / "density_n15.csv");
  CHECK(first == slurp(b / "density_n15.csv"));
  CHECK(first.rfind("# {", 0) == 0);
  CHECK(first.find("\"version\"") != std::string::npos);
  CHECK(first.find("x/L,L*rho_qm,L*rho_a,L*rho_cl\n") != std::string::npos);
}

TEST_CASE("figure commands") {
  const auto dir = scratch("figs");
  std::ostringstream out, err;

  auto inter = config(Command::Interference, dir);
  inter.params.n = 15;
  inter.params.alpha = 4;
  inter.params.grid = 50;
  inter.formats = {Format::Csv, Format::Svg, Format::Json};
  CHECK(run(inter, out, err) == kExitOk);
  CHECK(fs::exists(dir / "interference_n15_a4.svg"));
  CHECK(fs::exists(dir / "interference_n15_a4.json"));
  inter.params.alpha = 0;
  CHECK(run(inter, out, err) == kExitOk);
  CHECK(slurp(dir / "interference_n15_a0.csv").find("L*rho_cl") != std::string::npos);

  auto sup = config(Command::Superposition, dir);
  sup.params.delta = 0;
  sup.params.grid = 11;
  REQUIRE(run(sup, out, err) == kExitOk);
  std::istringstream rows(slurp(dir / "superposition_delta0.csv"));
  std::string line;
  std::getline(rows, line);
  std::getline(rows, line);
  int count = 0;
  while (std::getline(rows, line)) {
    CHECK(line.substr(line.find(',') + 1) == "1,1");
    ++count;
  }
  CHECK(count == 11);

  auto gauss = config(Command::Superposition, dir);
  gauss.params.sigma = 20;
  gauss.params.exact_n = 300;
  CHECK(run(gauss, out, err) == kExitOk);
  CHECK(fs::exists(dir / "superposition_sigma20.csv"));

  auto dyn = config(Command::Dynamics, dir);
  dyn.params.delta = 0;
  dyn.params.grid = 16;
  REQUIRE(run(dyn, out, err) == kExitOk);
  auto summary = nlohmann::json::parse(slurp(dir / "dynamics_delta0_summary.json"));
  CHECK(summary["aligned_rms"].is_null());
  dyn.params.delta = 5;
  REQUIRE(run(dyn, out, err) == kExitOk);
  summary = nlohmann::json::parse(slurp(dir / "dynamics_delta5_summary.json"));
  CHECK(summary["max_abs_closed_minus_direct"].get<double>() <= 1e-8);
  CHECK(summary["aligned_rms"].get<double>() < 0.05);
}

TEST_CASE("estimate and converge") {
  const auto dir = scratch("est");
  std::ostringstream out, err;
  auto est = config(Command::Estimate, dir);
  REQUIRE(run(est, out, err) == kExitOk);
  const auto j = nlohmann::json::parse(out.str());
  CHECK(j["n"].get<long>() > 1'000'000);
  CHECK(j["delta"].get<long>() >= 10'000);
  std::ostringstream out0;
  est.params.rel_uncertainty = 0;
  REQUIRE(run(est, out0, err) == kExitOk);
  CHECK(nlohmann::json::parse(out0.str())["delta"] == 0);
  est.params.energy = -1;
  CHECK(run(est, out, err) == kExitUsage);

  auto conv = config(Command::Converge, dir);
  conv.params.deltas = {1, 5, 20};
  REQUIRE(run(conv, out, err) == kExitOk);
  const auto csv = slurp(dir / "converge.csv");
  CHECK(csv.find("delta,interior_sup_dev,boundary_layer_width,norm_defect,rms_dynamics") !=
        std::string::npos);
  CHECK(csv.find("\n1,") != std::string::npos);
}

TEST_CASE("validation suites") {
  const auto sums = run_validation("sums");
  CHECK(sums.passed());
  CHECK(run_validation("sums", 1e-6).passed() == false);
  CHECK(run_validation("dynamics", 1e-6).passed() == false);
  CHECK_THROWS(run_validation("bogus"));
  CHECK(sums.to_json()["checks"].size() == sums.checks.size());
}

TEST_CASE("config files") {
  RunConfig cfg;
  apply_json(cfg, nlohmann::json::parse(
                      R"({"command":"superposition","params":{"delta":40,"grid":7},"formats":["csv","svg"]})"));
  CHECK(cfg.command == Command::Superposition);
  CHECK(*cfg.params.delta == 40);
  CHECK(cfg.formats.size() == 2);
  CHECK_THROWS_AS(apply_json(cfg, nlohmann::json::parse(R"({"comand":"x"})")), std::invalid_argument);
  CHECK_THROWS_AS(apply_json(cfg, nlohmann::json::parse(R"({"params":{"nn":1}})")), std::invalid_argument);
  CHECK_THROWS_AS(apply_json(cfg, nlohmann::json::parse(R"({"params":{"n":"five"}})")), std::invalid_argument);
}

TEST_CASE("exit codes of the executable") {
  const auto dir = scratch("exe");
  CHECK(shell("density --n 5 --grid 21 --out " + dir.string()) == kExitOk);
  CHECK(fs::exists(dir / "density_n5.csv"));
  CHECK(shell("density --grid 0 --out " + dir.string()) == kExitUsage);
  CHECK(shell("density --n 0") == kExitUsage);
  CHECK(shell("frobnicate") == kExitUsage);
  CHECK(shell("superposition --delta 3 --sigma 2") == kExitUsage);
  CHECK(shell("estimate --energy -1") == kExitUsage);
  CHECK(shell("validate --suite sums") == kExitOk);
  CHECK(shell("validate --suite sums --perturb 1e-6") == kExitValidation);
  // Output directory below a regular file cannot be created.
  std::ofstream(dir / "blocker") << "x";
  CHECK(shell("density --n 5 --out " + (dir / "blocker" / "sub").string()) == kExitIo);

  std::ofstream(dir / "run.json") << R"({"command":"dynamics","params":{"delta":2,"grid":12},"output_dir":")"
                                  << dir.string() << R"("})";
  CHECK(shell("--config " + (dir / "run.json").string()) == kExitOk);
  CHECK(fs::exists(dir / "dynamics_delta2.csv"));
  // Flags override the config file.
  CHECK(shell("--config " + (dir / "run.json").string() + " dynamics --delta 3") == kExitOk);
  CHECK(fs::exists(dir / "dynamics_delta3.csv"));
  std::ofstream(dir / "bad.json") << "{not json";
  CHECK(shell("--config " + (dir / "bad.json").string()) == kExitUsage);
}
