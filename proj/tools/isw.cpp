// isw: figure data, sweeps, estimates and oracle validation for the
// infinite square well.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isw/cli/commands.hpp"

namespace {

using isw::cli::Command;
using isw::cli::RunConfig;

struct Flags {
  long n = 0, alpha = 0, delta = 0, grid = 0, exact_n = 0;
  double sigma = 0, periods = 0, threshold = 0, perturb = 0;
  double mass = 0, length = 0, energy = 0, rel = 0, hbar = 0;
  std::vector<std::string> methods;
  std::vector<long> deltas;
  std::string suite, out, format;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Infinite square well: quantum-classical correspondence toolkit"};
  app.set_version_flag("--version", std::string(ISW_VERSION));
  app.require_subcommand(0, 1);

  Flags f;
  std::string config_path;
  app.add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);

  struct Sub {
    Command cmd;
    CLI::App* app;
  };
  std::vector<Sub> subs;
  auto sub = [&](Command c, const char* help) {
    auto* s = app.add_subcommand(isw::cli::to_string(c), help);
    s->add_option("--out", f.out, "output directory");
    s->add_option("--format", f.format, "comma-separated subset of csv,json,svg");
    subs.push_back({c, s});
    return s;
  };

  auto* density = sub(Command::Density, "eigenstate densities (exact, Si asymptotic, classical)");
  density->add_option("--n", f.n, "mode index");
  density->add_option("--grid", f.grid, "number of grid points");
  density->add_option("--methods", f.methods, "subset of qm,a,cl")->delimiter(',');

  auto* inter = sub(Command::Interference, "interference term psi_n psi_{n+alpha}");
  inter->add_option("--n", f.n, "mode index");
  inter->add_option("--alpha", f.alpha, "index separation");
  inter->add_option("--grid", f.grid, "number of grid points");

  auto* super = sub(Command::Superposition, "closed-form superposition density");
  super->add_option("--delta", f.delta, "equiprobable half-width");
  super->add_option("--sigma", f.sigma, "Gaussian width");
  super->add_option("--grid", f.grid, "number of grid points");
  super->add_option("--exact-n", f.exact_n, "add the exact density for this central mode");

  auto* dyn = sub(Command::Dynamics, "position expectation value vs classical trajectory");
  dyn->add_option("--delta", f.delta, "equiprobable half-width");
  dyn->add_option("--periods", f.periods, "number of periods");
  dyn->add_option("--grid", f.grid, "number of phase points");

  auto* conv = sub(Command::Converge, "convergence sweep over Delta");
  conv->add_option("--deltas", f.deltas, "comma-separated Delta values")->delimiter(',');
  conv->add_option("--threshold", f.threshold, "boundary-layer threshold");
  auto* no_dyn = conv->add_flag("--no-dynamics", "skip the aligned-RMS column");

  auto* est = sub(Command::Estimate, "quantum numbers for a physical particle in a box");
  est->add_option("--mass", f.mass, "mass [kg]");
  est->add_option("--length", f.length, "box length [m]");
  est->add_option("--energy", f.energy, "energy [J]");
  est->add_option("--rel", f.rel, "relative energy uncertainty");
  est->add_option("--hbar", f.hbar, "reduced Planck constant [J s]");

  auto* val = sub(Command::Validate, "oracle-equivalence checks");
  val->add_option("--suite", f.suite, "specfun, sums, fourier, dynamics or all");
  val->add_option("--perturb", f.perturb, "inject a relative error (self-test)")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : isw::cli::kExitUsage;
  }

  RunConfig cfg;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "I/O error: cannot read " << config_path << "\n";
        return isw::cli::kExitIo;
      }
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        std::cerr << "usage error: " << config_path << ": " << e.what() << "\n";
        return isw::cli::kExitUsage;
      }
      isw::cli::apply_json(cfg, j);
    }
    const Sub* chosen = nullptr;
    for (const auto& s : subs) {
      if (s.app->parsed()) chosen = &s;
    }
    if (!chosen && config_path.empty()) {
      std::cerr << app.help();
      return isw::cli::kExitUsage;
    }
    if (chosen) {
      cfg.command = chosen->cmd;
      auto* a = chosen->app;
      auto given = [&](const char* name) {
        auto* o = a->get_option_no_throw(name);
        return o && o->count() > 0;
      };
      auto& p = cfg.params;
      if (given("--n")) p.n = f.n;
      if (given("--alpha")) p.alpha = f.alpha;
      if (given("--delta")) p.delta = f.delta;
      if (given("--sigma")) p.sigma = f.sigma;
      if (given("--grid")) p.grid = f.grid;
      if (given("--exact-n")) p.exact_n = f.exact_n;
      if (given("--periods")) p.periods = f.periods;
      if (given("--methods")) p.methods = f.methods;
      if (given("--deltas")) p.deltas = f.deltas;
      if (given("--threshold")) p.threshold = f.threshold;
      if (a == conv && no_dyn->count() > 0) p.dynamics = false;
      if (given("--mass")) p.mass = f.mass;
      if (given("--length")) p.length = f.length;
      if (given("--energy")) p.energy = f.energy;
      if (given("--rel")) p.rel_uncertainty = f.rel;
      if (given("--hbar")) p.hbar = f.hbar;
      if (given("--suite")) p.suite = f.suite;
      if (given("--perturb")) p.perturb = f.perturb;
      if (given("--out")) cfg.output_dir = f.out;
      if (given("--format")) {
        cfg.formats.clear();
        std::size_t pos = 0;
        while (pos <= f.format.size()) {
          const auto comma = f.format.find(',', pos);
          const auto tok = f.format.substr(pos, comma == std::string::npos ? std::string::npos
                                                                            : comma - pos);
          if (!tok.empty()) cfg.formats.insert(isw::cli::format_from_string(tok));
          if (comma == std::string::npos) break;
          pos = comma + 1;
        }
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return isw::cli::kExitUsage;
  }
  return isw::cli::run(cfg, std::cout, std::cerr);
}
