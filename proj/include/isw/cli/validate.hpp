#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace isw::cli {

struct Check {
  std::string name;
  long samples = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct ValidationReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool passed() const;
  nlohmann::json to_json() const;
};

// suite in {specfun, sums, fourier, dynamics, all}. `perturb` is added as a
// relative error to the closed-form side of every comparison.
ValidationReport run_validation(const std::string& suite, double perturb = 0.0);

}  // namespace isw::cli
