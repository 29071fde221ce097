#pragma once

// Command layer behind the `isw` executable. Each command computes a Table,
// writes it in the requested formats and returns a process exit code.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace isw::cli {

enum class Command { Density, Interference, Superposition, Dynamics, Converge, Estimate, Validate };
enum class Format { Csv, Json, Svg };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitIo = 3;

std::string to_string(Command c);
Command command_from_string(const std::string& s);
Format format_from_string(const std::string& s);

struct Params {
  long n = 5;
  long alpha = 1;
  std::optional<long> delta;
  std::optional<double> sigma;
  long grid = 501;
  double periods = 1.0;
  std::vector<std::string> methods{"qm", "a", "cl"};
  // Mode index for the optional exact column of `superposition`.
  std::optional<long> exact_n;
  std::vector<long> deltas{10, 40, 100};
  double threshold = 0.1;
  bool dynamics = true;
  double mass = 1.67492749804e-27;
  double length = 1e-3;
  double energy = 1e-21;
  double rel_uncertainty = 0.01;
  double hbar = 1.054571817e-34;
  std::string suite = "all";
  // Relative error injected into closed forms by `validate` (self-test).
  double perturb = 0.0;
};

struct RunConfig {
  Command command = Command::Density;
  Params params;
  std::filesystem::path output_dir = ".";
  std::set<Format> formats{Format::Csv};
};

// Fills fields present in a JSON object {"command", "params", "output_dir",
// "formats"}. Unknown keys are rejected with std::invalid_argument.
void apply_json(RunConfig& cfg, const nlohmann::json& j);

// Throws std::invalid_argument when a parameter is out of range.
void validate_params(const RunConfig& cfg);

// Runs one command. Messages go to `out`/`err`; returns an exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace isw::cli
