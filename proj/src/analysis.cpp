#include "isw/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "isw/asymptotics.hpp"
#include "isw/dynamics.hpp"
#include "isw/errors.hpp"
#include "isw/quadrature.hpp"

namespace isw::analysis {

namespace {

// Dimensionless |L rho_closed(chi) - 1|.
double deviation(long delta, double chi) {
  static const core::WellConfig unit{};
  return std::abs(asym::superposition_density_closed_form(unit, delta, chi) - 1.0);
}

// Scan step resolving the cos((2 Delta + 1) pi chi) oscillation.
double scan_step(long delta) {
  return std::min(1e-3, 1.0 / (40.0 * static_cast<double>(2 * delta + 1)));
}

// Golden-section maximization of deviation on [a, b].
double refine_max(long delta, double a, double b) {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
  double fc = deviation(delta, c), fd = deviation(delta, d);
  for (int it = 0; it < 80 && b - a > 1e-15; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = deviation(delta, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = deviation(delta, d);
    }
  }
  return std::max({fc, fd, deviation(delta, 0.5 * (a + b))});
}

void require_delta(long delta, const char* what) {
  if (delta < 0) throw DomainError(std::string(what) + ": Delta must be >= 0");
}

}  // namespace

double boundary_layer_width(const core::WellConfig& cfg, long delta, double threshold) {
  require_delta(delta, "boundary_layer_width");
  cfg.validate();
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw DomainError("boundary_layer_width: need 0 < threshold < 1");
  }
  if (delta == 0) return 0.0;
  if (!(deviation(delta, kLayerScanEnd) < threshold)) {
    throw NoConvergenceError("boundary_layer_width: threshold not met at 0.95 L");
  }
  const double h = scan_step(delta);
  const long steps = static_cast<long>(std::ceil(kLayerScanEnd / h));
  double good = kLayerScanEnd;
  double bad = -1.0;
  for (long k = 1; k <= steps; ++k) {
    const double chi = std::max(0.0, kLayerScanEnd - h * static_cast<double>(k));
    if (!(deviation(delta, chi) < threshold)) {
      bad = chi;
      break;
    }
    good = chi;
  }
  if (bad < 0.0) return 0.0;
  for (int it = 0; it < 60 && good - bad > 1e-15; ++it) {
    const double mid = 0.5 * (good + bad);
    (deviation(delta, mid) < threshold ? good : bad) = mid;
  }
  return good * cfg.length;
}

double interior_deviation(const core::WellConfig& cfg, long delta, Window w) {
  require_delta(delta, "interior_deviation");
  cfg.validate();
  if (!(w.lo > 0.0 && w.lo < w.hi && w.hi < 1.0)) {
    throw DomainError("interior_deviation: need 0 < lo < hi < L");
  }
  if (delta == 0) return 0.0;
  const double h0 = scan_step(delta);
  const auto count = std::max(2000L, static_cast<long>(std::ceil((w.hi - w.lo) / h0)));
  const double h = (w.hi - w.lo) / static_cast<double>(count);
  std::vector<double> v(static_cast<std::size_t>(count + 1));
  for (long k = 0; k <= count; ++k) {
    v[k] = deviation(delta, k == count ? w.hi : w.lo + h * static_cast<double>(k));
  }
  // Refine the largest few sampled local maxima.
  std::vector<long> peaks;
  for (long k = 0; k <= count; ++k) {
    const bool left = k == 0 || v[k] >= v[k - 1];
    const bool right = k == count || v[k] >= v[k + 1];
    if (left && right) peaks.push_back(k);
  }
  std::sort(peaks.begin(), peaks.end(), [&](long a, long b) {
    return v[a] != v[b] ? v[a] > v[b] : a < b;
  });
  double best = *std::max_element(v.begin(), v.end());
  for (std::size_t i = 0; i < std::min<std::size_t>(5, peaks.size()); ++i) {
    const long k = peaks[i];
    const double a = std::max(w.lo, w.lo + h * static_cast<double>(k - 1));
    const double b = std::min(w.hi, w.lo + h * static_cast<double>(k + 1));
    best = std::max(best, refine_max(delta, a, b));
  }
  return best;
}

double norm_defect(const core::WellConfig& cfg, long delta) {
  require_delta(delta, "norm_defect");
  cfg.validate();
  if (delta == 0) return 0.0;
  quad::Options opt;
  opt.rel_tol = 1e-12;
  opt.abs_tol = 1e-14;
  opt.max_panel = quad::quarter_wavelength(static_cast<double>(2 * delta + 1));
  static const core::WellConfig unit{};
  const double integral = quad::integrate_or_throw(
      [delta](double chi) {
        return asym::superposition_density_closed_form(unit, delta, chi);
      },
      0.0, 1.0, opt);
  return std::abs(integral - 1.0);
}

double l1_distance(const core::DensityProfile& a, const core::DensityProfile& b) {
  const auto& x = a.grid.points();
  if (x != b.grid.points() || a.values.size() != x.size() || b.values.size() != x.size()) {
    throw ConstraintError("l1_distance: profiles must share a grid");
  }
  double sum = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    sum += 0.5 * (std::abs(a.values[i] - b.values[i]) +
                  std::abs(a.values[i - 1] - b.values[i - 1])) *
           (x[i] - x[i - 1]);
  }
  return sum;
}

core::SpatialGrid comparison_grid(const core::WellConfig& cfg,
                                  const core::SuperpositionSpec& spec,
                                  const core::CoarseGrainSpec& cg) {
  const double by_eps = 5.0 * cfg.length / cg.epsilon();
  const double by_mode = 80.0 * static_cast<double>(spec.highest_mode());
  const auto cells = static_cast<long>(std::ceil(std::max({by_eps, by_mode, 2000.0})));
  return core::SpatialGrid::uniform(cells + 1, cfg.length, true);
}

double coarse_grained_comparison(const core::WellConfig& cfg,
                                 const core::SuperpositionSpec& spec,
                                 const core::CoarseGrainSpec& cg) {
  cfg.validate();
  const auto grid = comparison_grid(cfg, spec, cg);
  const auto exact = core::sample(
      grid, [&](double x) { return core::exact_superposition_density(cfg, spec, x, 0.0); },
      core::DensityMethod::ExactSuperposition);
  core::DensityProfile closed = [&] {
    if (const auto* e = std::get_if<core::Equiprobable>(&spec.kind())) {
      const long delta = e->halfwidth;
      return core::sample(
          grid,
          [&](double x) { return asym::superposition_density_closed_form(cfg, delta, x); },
          core::DensityMethod::ClosedForm);
    }
    const double sigma = std::get<core::Gaussian>(spec.kind()).sigma;
    const auto trunc = static_cast<long>(std::ceil(12.0 * sigma));
    return core::sample(
        grid,
        [&](double x) {
          return asym::gaussian_superposition_density(cfg, sigma, x, trunc);
        },
        core::DensityMethod::GaussianClosedForm);
  }();
  return l1_distance(core::coarse_grain(exact, cg), core::coarse_grain(closed, cg));
}

void SuiteConfig::validate() const {
  if (deltas.empty()) throw ConstraintError("SuiteConfig: empty Delta range");
  for (long d : deltas) {
    if (d < 0) throw ConstraintError("SuiteConfig: Delta must be >= 0");
  }
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw ConstraintError("SuiteConfig: need 0 < threshold < 1");
  }
  if (!(window.lo > 0.0 && window.lo < window.hi && window.hi < 1.0)) {
    throw ConstraintError("SuiteConfig: window must satisfy 0 < lo < hi < 1");
  }
  if (phase_points < 4) throw ConstraintError("SuiteConfig: phase_points must be >= 4");
}

ConvergenceReport run_convergence_suite(const SuiteConfig& config) {
  config.validate();
  const core::WellConfig unit{};
  ConvergenceReport report;
  const auto phases = dyn::uniform_phase_grid(config.phase_points);
  const auto classical = dyn::classical_series(phases);
  for (long delta : config.deltas) {
    Metrics m;
    m.interior_sup_dev = interior_deviation(unit, delta, config.window);
    try {
      m.boundary_layer_width = boundary_layer_width(unit, delta, config.threshold);
    } catch (const NoConvergenceError&) {
      m.boundary_layer_width.reset();
    }
    m.norm_defect = norm_defect(unit, delta);
    if (config.dynamics && delta > 0) {
      m.rms_dynamics =
          dyn::align_time_shift(dyn::asymptotic_series(delta, phases), classical).rms;
    }
    report.parameter_values.push_back(delta);
    report.metrics.push_back(m);
  }
  return report;
}

}  // namespace isw::analysis
