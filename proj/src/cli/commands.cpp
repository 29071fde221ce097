#include "isw/cli/commands.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "isw/analysis.hpp"
#include "isw/asymptotics.hpp"
#include "isw/cli/output.hpp"
#include "isw/cli/validate.hpp"
#include "isw/core.hpp"
#include "isw/dynamics.hpp"
#include "isw/errors.hpp"

#ifndef ISW_VERSION
#define ISW_VERSION "dev"
#endif

namespace isw::cli {

namespace {

using nlohmann::json;

const core::WellConfig kUnit{};

json header(const RunConfig& cfg, json params) {
  return {{"command", to_string(cfg.command)}, {"params", std::move(params)},
          {"version", ISW_VERSION}};
}

void emit(const RunConfig& cfg, const std::string& stem, const json& head, const Table& t,
          const std::vector<std::size_t>& plot_cols, std::ostream& out) {
  const auto base = cfg.output_dir / stem;
  if (cfg.formats.count(Format::Csv)) {
    write_file(base.string() + ".csv", csv_string(head, t));
    out << "wrote " << base.string() << ".csv\n";
  }
  if (cfg.formats.count(Format::Json)) {
    write_file(base.string() + ".json", table_json(head, t).dump(1) + "\n");
    out << "wrote " << base.string() << ".json\n";
  }
  if (cfg.formats.count(Format::Svg)) {
    write_file(base.string() + ".svg", svg_string(t, 0, plot_cols, stem));
    out << "wrote " << base.string() << ".svg\n";
  }
}

std::vector<std::size_t> value_columns(const Table& t) {
  std::vector<std::size_t> c;
  for (std::size_t i = 1; i < t.columns.size(); ++i) c.push_back(i);
  return c;
}

Table density_table(long n, long grid, const std::vector<std::string>& methods) {
  const core::ModeIndex mode(n);
  const auto g = core::SpatialGrid::uniform(grid, 1.0, true);
  Table t;
  t.columns.push_back("x/L");
  for (const auto& m : methods) t.columns.push_back("L*rho_" + m);
  for (double x : g.points()) {
    std::vector<double> row{x};
    for (const auto& m : methods) {
      if (m == "qm") row.push_back(core::exact_eigenstate_density(kUnit, mode, x));
      if (m == "a") row.push_back(asym::asymptotic_eigenstate_density(kUnit, mode, x));
      if (m == "cl") row.push_back(core::classical_density(kUnit, x));
    }
    t.add_row(std::move(row));
  }
  return t;
}

int cmd_density(const RunConfig& cfg, std::ostream& out) {
  const auto& p = cfg.params;
  const auto t = density_table(p.n, p.grid, p.methods);
  emit(cfg, "density_n" + std::to_string(p.n),
       header(cfg, {{"n", p.n}, {"grid", p.grid}, {"methods", p.methods}}), t, value_columns(t),
       out);
  return kExitOk;
}

int cmd_interference(const RunConfig& cfg, std::ostream& out) {
  const auto& p = cfg.params;
  const std::string stem =
      "interference_n" + std::to_string(p.n) + "_a" + std::to_string(p.alpha);
  const json params{{"n", p.n}, {"alpha", p.alpha}, {"grid", p.grid}};
  if (p.alpha == 0) {
    // psi_n psi_n is the eigenstate density.
    const auto t = density_table(p.n, p.grid, {"qm", "a", "cl"});
    emit(cfg, stem, header(cfg, params), t, value_columns(t), out);
    return kExitOk;
  }
  const core::ModeIndex mode(p.n);
  const auto g = core::SpatialGrid::uniform(p.grid, 1.0, false);
  Table t;
  t.columns = {"x/L", "L*rho_qm", "L*rho_a", "L*envelope"};
  for (double x : g.points()) {
    t.add_row({x, core::exact_interference_term(kUnit, mode, p.alpha, x),
               asym::asymptotic_interference_density(kUnit, mode, p.alpha, x),
               asym::envelope_interference_density(kUnit, p.alpha, x)});
  }
  emit(cfg, stem, header(cfg, params), t, value_columns(t), out);
  return kExitOk;
}

int cmd_superposition(const RunConfig& cfg, std::ostream& out) {
  const auto& p = cfg.params;
  const auto g = core::SpatialGrid::uniform(p.grid, 1.0, true);
  json params{{"grid", p.grid}};
  std::string stem;
  std::function<double(double)> closed;
  std::optional<core::SuperpositionSpec> spec;
  if (p.delta) {
    const long d = *p.delta;
    params["delta"] = d;
    stem = "superposition_delta" + std::to_string(d);
    closed = [d](double x) { return asym::superposition_density_closed_form(kUnit, d, x); };
    if (p.exact_n) spec.emplace(core::ModeIndex(*p.exact_n), core::Equiprobable{d});
  } else {
    const double s = *p.sigma;
    const auto trunc = static_cast<long>(std::ceil(12.0 * s));
    params["sigma"] = s;
    stem = "superposition_sigma" + format_double(s);
    closed = [s, trunc](double x) {
      return asym::gaussian_superposition_density(kUnit, s, x, trunc);
    };
    if (p.exact_n) spec.emplace(core::ModeIndex(*p.exact_n), core::Gaussian{s, 0});
  }
  Table t;
  t.columns = {"x/L", "L*rho_closed", "L*rho_cl"};
  if (spec) {
    params["exact_n"] = *p.exact_n;
    t.columns.push_back("L*rho_exact");
  }
  for (double x : g.points()) {
    std::vector<double> row{x, closed(x), core::classical_density(kUnit, x)};
    if (spec) row.push_back(core::exact_superposition_density(kUnit, *spec, x, 0.0));
    t.add_row(std::move(row));
  }
  emit(cfg, stem, header(cfg, params), t, value_columns(t), out);
  return kExitOk;
}

int cmd_dynamics(const RunConfig& cfg, std::ostream& out) {
  const auto& p = cfg.params;
  const long d = *p.delta;
  const auto phases = dyn::uniform_phase_grid(p.grid, p.periods);
  Table t;
  t.columns = {"omega", "x_closed/L", "x_direct/L", "x_cl/L"};
  double max_diff = 0.0;
  long fallbacks = 0;
  for (double w : phases) {
    const auto c = dyn::expectation_total_closed_detail(d, w);
    const double direct = dyn::expectation_total_direct(d, w);
    max_diff = std::max(max_diff, std::abs(c.value - direct));
    fallbacks += c.used_fallback ? 1 : 0;
    t.add_row({w, c.value, direct, dyn::classical_position_phase(w)});
  }
  const json params{{"delta", d}, {"periods", p.periods}, {"grid", p.grid}};
  const std::string stem = "dynamics_delta" + std::to_string(d);
  emit(cfg, stem, header(cfg, params), t, {1, 3}, out);

  json summary = header(cfg, params);
  summary["max_abs_closed_minus_direct"] = max_diff;
  summary["fallback_points"] = fallbacks;
  const auto one = dyn::uniform_phase_grid(1000);
  try {
    const auto a = dyn::align_time_shift(dyn::asymptotic_series(d, one), dyn::classical_series(one));
    summary["aligned_rms"] = a.rms;
    summary["shift_omega"] = a.shift;
  } catch (const AlignmentError&) {
    summary["aligned_rms"] = nullptr;
    summary["shift_omega"] = nullptr;
  }
  write_file(cfg.output_dir / (stem + "_summary.json"), summary.dump(1) + "\n");
  out << "wrote " << (cfg.output_dir / (stem + "_summary.json")).string() << "\n";
  return kExitOk;
}

int cmd_converge(const RunConfig& cfg, std::ostream& out) {
  const auto& p = cfg.params;
  analysis::SuiteConfig sc;
  sc.deltas = p.deltas;
  sc.threshold = p.threshold;
  sc.dynamics = p.dynamics;
  const auto report = analysis::run_convergence_suite(sc);
  Table t;
  t.columns = {"delta", "interior_sup_dev", "boundary_layer_width", "norm_defect", "rms_dynamics"};
  for (std::size_t i = 0; i < report.parameter_values.size(); ++i) {
    const auto& m = report.metrics[i];
    t.add_row({static_cast<double>(report.parameter_values[i]), m.interior_sup_dev,
               m.boundary_layer_width.value_or(NAN), m.norm_defect, m.rms_dynamics.value_or(NAN)});
  }
  emit(cfg, "converge",
       header(cfg, {{"deltas", p.deltas}, {"threshold", p.threshold}, {"dynamics", p.dynamics}}),
       t, {1, 2}, out);
  return kExitOk;
}

int cmd_estimate(const RunConfig& cfg, std::ostream& out) {
  const auto& p = cfg.params;
  const core::WellConfig well{p.mass, p.length, p.hbar};
  const auto est = core::estimate_macroscopic_params(well, p.energy, p.rel_uncertainty);
  json j = header(cfg, {{"mass", p.mass},
                        {"length", p.length},
                        {"energy", p.energy},
                        {"rel_uncertainty", p.rel_uncertainty},
                        {"hbar", p.hbar}});
  j["n"] = est.n;
  j["delta"] = est.delta;
  j["ground_energy"] = well.ground_energy();
  j["relative_spacing"] = asym::relative_spacing(core::ModeIndex(est.n), 1).approx;
  out << j.dump(1) << "\n";
  if (cfg.formats.count(Format::Json)) {
    write_file(cfg.output_dir / "estimate.json", j.dump(1) + "\n");
  }
  return kExitOk;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  const auto report = run_validation(cfg.params.suite, cfg.params.perturb);
  auto j = report.to_json();
  j["version"] = ISW_VERSION;
  out << j.dump(1) << "\n";
  if (cfg.formats.count(Format::Json)) {
    write_file(cfg.output_dir / ("validate_" + cfg.params.suite + ".json"), j.dump(1) + "\n");
  }
  return report.passed() ? kExitOk : kExitValidation;
}

template <class T>
void take(const json& j, const char* key, T& dst) {
  if (j.contains(key)) dst = j.at(key).get<T>();
}

template <class T>
void take(const json& j, const char* key, std::optional<T>& dst) {
  if (j.contains(key)) dst = j.at(key).get<T>();
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::Density: return "density";
    case Command::Interference: return "interference";
    case Command::Superposition: return "superposition";
    case Command::Dynamics: return "dynamics";
    case Command::Converge: return "converge";
    case Command::Estimate: return "estimate";
    case Command::Validate: return "validate";
  }
  return "density";
}

Command command_from_string(const std::string& s) {
  for (auto c : {Command::Density, Command::Interference, Command::Superposition,
                 Command::Dynamics, Command::Converge, Command::Estimate, Command::Validate}) {
    if (to_string(c) == s) return c;
  }
  throw std::invalid_argument("unknown command '" + s + "'");
}

Format format_from_string(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  if (s == "svg") return Format::Svg;
  throw std::invalid_argument("unknown format '" + s + "'");
}

void apply_json(RunConfig& cfg, const json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "command" && key != "params" && key != "output_dir" && key != "formats") {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
  try {
    if (j.contains("command")) cfg.command = command_from_string(j.at("command").get<std::string>());
    if (j.contains("output_dir")) cfg.output_dir = j.at("output_dir").get<std::string>();
    if (j.contains("formats")) {
      cfg.formats.clear();
      for (const auto& f : j.at("formats")) cfg.formats.insert(format_from_string(f.get<std::string>()));
    }
    if (j.contains("params")) {
      const auto& p = j.at("params");
      auto& d = cfg.params;
      static const std::set<std::string> known{
          "n", "alpha", "delta", "sigma", "grid", "periods", "methods", "exact_n", "deltas",
          "threshold", "dynamics", "mass", "length", "energy", "rel_uncertainty", "hbar",
          "suite", "perturb"};
      for (const auto& [key, _] : p.items()) {
        if (!known.count(key)) throw std::invalid_argument("unknown parameter '" + key + "'");
      }
      take(p, "n", d.n);
      take(p, "alpha", d.alpha);
      take(p, "delta", d.delta);
      take(p, "sigma", d.sigma);
      take(p, "grid", d.grid);
      take(p, "periods", d.periods);
      take(p, "methods", d.methods);
      take(p, "exact_n", d.exact_n);
      take(p, "deltas", d.deltas);
      take(p, "threshold", d.threshold);
      take(p, "dynamics", d.dynamics);
      take(p, "mass", d.mass);
      take(p, "length", d.length);
      take(p, "energy", d.energy);
      take(p, "rel_uncertainty", d.rel_uncertainty);
      take(p, "hbar", d.hbar);
      take(p, "suite", d.suite);
      take(p, "perturb", d.perturb);
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad config value: ") + e.what());
  }
}

void validate_params(const RunConfig& cfg) {
  const auto& p = cfg.params;
  auto need = [](bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
  };
  if (cfg.formats.empty()) throw std::invalid_argument("no output format selected");
  switch (cfg.command) {
    case Command::Density:
      need(p.n >= 1, "--n must be >= 1");
      need(p.grid >= 2, "--grid must be >= 2");
      need(!p.methods.empty(), "--methods must not be empty");
      for (const auto& m : p.methods) {
        need(m == "qm" || m == "a" || m == "cl", "unknown method '" + m + "'");
      }
      break;
    case Command::Interference:
      need(p.n >= 1, "--n must be >= 1");
      need(p.alpha >= 0, "--alpha must be >= 0");
      need(p.grid >= 2, "--grid must be >= 2");
      break;
    case Command::Superposition:
      need(p.delta.has_value() != p.sigma.has_value(), "give exactly one of --delta, --sigma");
      need(!p.delta || *p.delta >= 0, "--delta must be >= 0");
      need(!p.sigma || *p.sigma > 0.0, "--sigma must be > 0");
      need(p.grid >= 2, "--grid must be >= 2");
      need(!p.exact_n || !p.delta || *p.exact_n - *p.delta >= 1, "--exact-n must exceed --delta");
      need(!p.exact_n || *p.exact_n >= 1, "--exact-n must be >= 1");
      break;
    case Command::Dynamics:
      need(p.delta.has_value() && *p.delta >= 0, "--delta (>= 0) is required");
      need(p.periods > 0.0, "--periods must be > 0");
      need(p.grid >= 2, "--grid must be >= 2");
      break;
    case Command::Converge:
      need(!p.deltas.empty(), "--deltas must not be empty");
      break;
    case Command::Estimate:
      need(p.energy > 0.0, "--energy must be > 0");
      need(p.mass > 0.0 && p.length > 0.0 && p.hbar > 0.0, "--mass, --length, --hbar must be > 0");
      need(p.rel_uncertainty >= 0.0 && p.rel_uncertainty < 1.0, "--rel must be in [0, 1)");
      break;
    case Command::Validate:
      need(p.suite == "specfun" || p.suite == "sums" || p.suite == "fourier" ||
               p.suite == "dynamics" || p.suite == "all",
           "--suite must be one of specfun, sums, fourier, dynamics, all");
      break;
  }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate_params(cfg);
    switch (cfg.command) {
      case Command::Density: return cmd_density(cfg, out);
      case Command::Interference: return cmd_interference(cfg, out);
      case Command::Superposition: return cmd_superposition(cfg, out);
      case Command::Dynamics: return cmd_dynamics(cfg, out);
      case Command::Converge: return cmd_converge(cfg, out);
      case Command::Estimate: return cmd_estimate(cfg, out);
      case Command::Validate: return cmd_validate(cfg, out);
    }
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace isw::cli
