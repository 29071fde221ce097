#pragma once

// Derived metrics for the equiprobable superposition density: boundary-layer
// width, interior flatness, normalization defect, coarse-grained distances,
// and a deterministic sweep that collects them.

#include <optional>
#include <string>
#include <vector>

#include "isw/core.hpp"

namespace isw::analysis {

inline constexpr double kDefaultThreshold = 0.1;
// Right end of the boundary-layer scan, as a fraction of L.
inline constexpr double kLayerScanEnd = 0.95;

// Interval [lo, hi] in units of L.
struct Window {
  double lo = 0.25;
  double hi = 0.75;
};

// Smallest x* with |L rho_closed(x) - 1| < threshold on [x*, 0.95 L].
// Returns 0 for Delta = 0; throws NoConvergenceError if the threshold is
// not met at 0.95 L.
double boundary_layer_width(const core::WellConfig& cfg, long delta,
                            double threshold = kDefaultThreshold);

// sup over the window of |L rho_closed - 1|.
double interior_deviation(const core::WellConfig& cfg, long delta, Window w = {});

// |int_0^L rho_closed dx - 1|.
double norm_defect(const core::WellConfig& cfg, long delta);

// int |a - b| dx over the grid (trapezoid rule); grids must match.
double l1_distance(const core::DensityProfile& a, const core::DensityProfile& b);

// Grid used by coarse_grained_comparison: spacing below eps/5 and 1/40 of
// the shortest wavelength in the state.
core::SpatialGrid comparison_grid(const core::WellConfig& cfg,
                                  const core::SuperpositionSpec& spec,
                                  const core::CoarseGrainSpec& cg);

// L1 distance between the coarse-grained exact t = 0 density and the
// coarse-grained closed form (equiprobable or Gaussian) of the same state.
double coarse_grained_comparison(const core::WellConfig& cfg,
                                 const core::SuperpositionSpec& spec,
                                 const core::CoarseGrainSpec& cg);

struct Metrics {
  double interior_sup_dev = 0.0;
  // Absent when the threshold is not reached by 0.95 L (small Delta).
  std::optional<double> boundary_layer_width;
  double norm_defect = 0.0;
  std::optional<double> rms_dynamics;
};

struct ConvergenceReport {
  std::string parameter = "delta";
  std::vector<long> parameter_values;
  std::vector<Metrics> metrics;
};

struct SuiteConfig {
  std::vector<long> deltas;
  double threshold = kDefaultThreshold;
  Window window;
  bool dynamics = true;
  long phase_points = 1000;

  void validate() const;
};

ConvergenceReport run_convergence_suite(const SuiteConfig& config);

}  // namespace isw::analysis
