#include "isw/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "isw/errors.hpp"
#include "isw/quadrature.hpp"
#include "isw/specfun.hpp"

namespace isw::core {

using specfun::kPi;

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

bool inside(double chi) { return chi >= 0.0 && chi <= 1.0; }

std::vector<Component> equiprobable_components(long n, long delta) {
  std::vector<Component> out;
  const double c = 1.0 / std::sqrt(static_cast<double>(2 * delta + 1));
  for (long k = -delta; k <= delta; ++k) out.push_back({n + k, c});
  return out;
}

std::vector<Component> gaussian_components(long n, double sigma, long window) {
  std::vector<Component> out;
  const long lo = std::max(1L, n - window);
  const long hi = n + window;
  double norm2 = 0.0;
  for (long k = lo; k <= hi; ++k) {
    const double d = static_cast<double>(k - n);
    const double w = std::exp(-d * d / (4.0 * sigma * sigma));
    out.push_back({k, w});
    norm2 += w * w;
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& c : out) c.weight *= scale;
  return out;
}

}  // namespace

void WellConfig::validate() const {
  if (!positive_finite(mass) || !positive_finite(length) || !positive_finite(hbar)) {
    throw ConstraintError("WellConfig: mass, length and hbar must be finite and > 0");
  }
}

double WellConfig::ground_energy() const {
  validate();
  return kPi * kPi * hbar * hbar / (2.0 * mass * length * length);
}

double WellConfig::time_unit() const { return hbar / ground_energy(); }

ModeIndex::ModeIndex(long n) : n_(n) {
  if (n < 1) throw ConstraintError("ModeIndex: n must be >= 1");
}

SuperpositionSpec::SuperpositionSpec(ModeIndex center, Equiprobable kind)
    : center_(center), kind_(kind) {
  if (kind.halfwidth < 0) {
    throw ConstraintError("Equiprobable: halfwidth must be >= 0");
  }
  if (center.value() - kind.halfwidth < 1) {
    throw ConstraintError("Equiprobable: n - Delta must be >= 1");
  }
  components_ = equiprobable_components(center.value(), kind.halfwidth);
}

SuperpositionSpec::SuperpositionSpec(ModeIndex center, Gaussian kind)
    : center_(center), kind_(kind) {
  if (!positive_finite(kind.sigma)) {
    throw ConstraintError("Gaussian: sigma must be > 0");
  }
  if (kind.truncation < 0) {
    throw ConstraintError("Gaussian: truncation must be >= 0");
  }
  long window = kind.truncation;
  if (window == 0) window = static_cast<long>(std::ceil(6.0 * kind.sigma));
  std::get<Gaussian>(kind_).truncation = window;
  components_ = gaussian_components(center.value(), kind.sigma, window);
}

SpatialGrid::SpatialGrid(std::vector<double> points, double length)
    : points_(std::move(points)), length_(length) {
  if (!positive_finite(length)) throw ConstraintError("SpatialGrid: length must be > 0");
  if (points_.empty()) throw ConstraintError("SpatialGrid: no points");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i]) || points_[i] < 0.0 || points_[i] > length) {
      throw ConstraintError("SpatialGrid: point outside [0, L]");
    }
    if (i > 0 && !(points_[i] > points_[i - 1])) {
      throw ConstraintError("SpatialGrid: points must be strictly increasing");
    }
  }
}

SpatialGrid SpatialGrid::uniform(long count, double length, bool include_endpoints) {
  if (count < 1) throw ConstraintError("SpatialGrid::uniform: count must be >= 1");
  std::vector<double> p(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    const double di = static_cast<double>(i);
    if (include_endpoints) {
      p[i] = count == 1 ? 0.5 * length : length * di / static_cast<double>(count - 1);
    } else {
      p[i] = length * (di + 0.5) / static_cast<double>(count);
    }
  }
  return SpatialGrid(std::move(p), length);
}

double SpatialGrid::max_spacing() const {
  double h = 0.0;
  for (std::size_t i = 1; i < points_.size(); ++i) {
    h = std::max(h, points_[i] - points_[i - 1]);
  }
  return h;
}

std::string to_string(DensityMethod m) {
  switch (m) {
    case DensityMethod::Classical: return "classical";
    case DensityMethod::ExactEigenstate: return "exact_eigenstate";
    case DensityMethod::ExactInterference: return "exact_interference";
    case DensityMethod::ExactSuperposition: return "exact_superposition";
    case DensityMethod::AsymptoticEigenstate: return "asymptotic_eigenstate";
    case DensityMethod::AsymptoticInterference: return "asymptotic_interference";
    case DensityMethod::Envelope: return "envelope";
    case DensityMethod::ClosedForm: return "closed_form";
    case DensityMethod::GaussianClosedForm: return "gaussian_closed_form";
    case DensityMethod::CoarseGrained: return "coarse_grained";
    case DensityMethod::Custom: return "custom";
  }
  return "custom";
}

void DensityProfile::validate() const {
  if (values.size() != grid.points().size()) {
    throw ConstraintError("DensityProfile: values/grid length mismatch");
  }
  const bool signed_ok = method == DensityMethod::ExactInterference ||
                         method == DensityMethod::AsymptoticInterference ||
                         method == DensityMethod::Envelope ||
                         method == DensityMethod::Custom ||
                         method == DensityMethod::CoarseGrained;
  for (double v : values) {
    if (!std::isfinite(v)) throw ConstraintError("DensityProfile: non-finite value");
    if (!signed_ok && v < 0.0) throw ConstraintError("DensityProfile: negative density");
  }
}

CoarseGrainSpec::CoarseGrainSpec(double epsilon, double length) : epsilon_(epsilon) {
  if (!positive_finite(epsilon) || !(epsilon < 0.5 * length)) {
    throw ConstraintError("CoarseGrainSpec: need 0 < epsilon < L/2");
  }
}

double energy(const WellConfig& cfg, ModeIndex n) {
  const double k = static_cast<double>(n.value());
  return k * k * cfg.ground_energy();
}

double eigenfunction(const WellConfig& cfg, ModeIndex n, double x) {
  cfg.validate();
  const double chi = x / cfg.length;
  if (!inside(chi)) return 0.0;
  return std::sqrt(2.0 / cfg.length) *
         std::sin(static_cast<double>(n.value()) * kPi * chi);
}

double classical_density(const WellConfig& cfg, double x) {
  cfg.validate();
  return (x >= 0.0 && x <= cfg.length) ? 1.0 / cfg.length : 0.0;
}

double classical_density_generic(double period,
                                 const std::function<double(double)>& speed,
                                 double x) {
  if (!positive_finite(period)) throw DomainError("classical_density_generic: tau must be > 0");
  const double v = std::abs(speed(x));
  if (!std::isfinite(v)) throw DomainError("classical_density_generic: non-finite speed");
  if (v == 0.0) {
    throw PoleError("classical_density_generic: turning point (|v| = 0)");
  }
  return 2.0 / (period * v);
}

double exact_eigenstate_density(const WellConfig& cfg, ModeIndex n, double x) {
  const double psi = eigenfunction(cfg, n, x);
  return psi * psi;
}

double exact_interference_term(const WellConfig& cfg, ModeIndex n, long alpha,
                               double x) {
  if (alpha < 0) throw DomainError("exact_interference_term: alpha must be >= 0");
  cfg.validate();
  const double chi = x / cfg.length;
  if (!inside(chi)) return 0.0;
  const double k = static_cast<double>(n.value());
  return 2.0 * std::sin(kPi * chi * k) *
         std::sin(kPi * chi * (k + static_cast<double>(alpha))) / cfg.length;
}

Complex superposition_wavefunction(const WellConfig& cfg,
                                   const SuperpositionSpec& spec, double x,
                                   double t) {
  cfg.validate();
  const double chi = x / cfg.length;
  if (!inside(chi)) return {0.0, 0.0};
  // E_k t / hbar = k^2 t / time_unit.
  const double tau = t / cfg.time_unit();
  const double amp = std::sqrt(2.0 / cfg.length);
  Complex psi{0.0, 0.0};
  for (const auto& c : spec.components()) {
    const double k = static_cast<double>(c.mode);
    const double phase = specfun::reduce_signed(k * k * tau);
    const double s = std::sin(kPi * chi * k);
    psi += c.weight * amp * s * Complex(std::cos(phase), -std::sin(phase));
  }
  return psi;
}

double exact_superposition_density(const WellConfig& cfg,
                                   const SuperpositionSpec& spec, double x,
                                   double t) {
  return std::norm(superposition_wavefunction(cfg, spec, x, t));
}

double superposition_norm(const WellConfig& cfg, const SuperpositionSpec& spec,
                          double t) {
  quad::Options opt;
  opt.rel_tol = 1e-13;
  opt.abs_tol = 1e-15;
  opt.max_panel =
      cfg.length * quad::quarter_wavelength(2.0 * static_cast<double>(spec.highest_mode()));
  return quad::integrate_or_throw(
      [&](double x) { return exact_superposition_density(cfg, spec, x, t); }, 0.0,
      cfg.length, opt);
}

DensityProfile sample(const SpatialGrid& grid,
                      const std::function<double(double)>& f,
                      DensityMethod method, std::map<std::string, double> params) {
  std::vector<double> v;
  v.reserve(grid.points().size());
  for (double x : grid.points()) v.push_back(f(x));
  DensityProfile p{grid, std::move(v), method, std::move(params)};
  p.validate();
  return p;
}

DensityProfile coarse_grain(const DensityProfile& profile, const CoarseGrainSpec& cg) {
  profile.validate();
  const auto& x = profile.grid.points();
  const auto& r = profile.values;
  const double eps = cg.epsilon();
  if (!(eps < 0.5 * profile.grid.length())) {
    throw ConstraintError("coarse_grain: epsilon must be < L/2");
  }
  if (x.size() < 2 || profile.grid.max_spacing() > eps / 5.0) {
    throw ResolutionError("coarse_grain: grid spacing must be <= epsilon/5");
  }

  // Cumulative integral of the piecewise-linear interpolant.
  const std::size_t m = x.size();
  std::vector<double> cum(m, 0.0);
  for (std::size_t i = 1; i < m; ++i) {
    cum[i] = cum[i - 1] + 0.5 * (r[i] + r[i - 1]) * (x[i] - x[i - 1]);
  }
  auto primitive = [&](double s) {
    if (s <= x.front()) return 0.0;
    if (s >= x.back()) return cum.back();
    const auto it = std::upper_bound(x.begin(), x.end(), s);
    const std::size_t i = static_cast<std::size_t>(it - x.begin()) - 1;
    const double h = x[i + 1] - x[i];
    const double d = s - x[i];
    return cum[i] + r[i] * d + 0.5 * (r[i + 1] - r[i]) * d * d / h;
  };

  const double lo_edge = std::max(0.0, x.front());
  const double hi_edge = std::min(profile.grid.length(), x.back());
  std::vector<double> out(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double lo = std::max(lo_edge, x[i] - eps);
    const double hi = std::min(hi_edge, x[i] + eps);
    out[i] = (primitive(hi) - primitive(lo)) / (hi - lo);
  }
  auto params = profile.params;
  params["epsilon"] = eps;
  DensityProfile res{profile.grid, std::move(out), DensityMethod::CoarseGrained,
                     std::move(params)};
  return res;
}

MacroscopicParams estimate_macroscopic_params(const WellConfig& cfg, double energy,
                                              double rel_uncertainty) {
  cfg.validate();
  if (!positive_finite(energy)) {
    throw DomainError("estimate_macroscopic_params: energy must be > 0");
  }
  if (!(rel_uncertainty >= 0.0 && rel_uncertainty < 1.0)) {
    throw DomainError("estimate_macroscopic_params: need 0 <= rel_uncertainty < 1");
  }
  const double n_real =
      cfg.length * std::sqrt(2.0 * cfg.mass * energy) / (kPi * cfg.hbar);
  const long n = std::max(1L, std::lround(n_real));
  const long delta = std::lround(0.5 * rel_uncertainty * static_cast<double>(n));
  return {n, std::min(delta, n - 1)};
}

}  // namespace isw::core
