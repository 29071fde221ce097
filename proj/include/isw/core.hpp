#pragma once

// Exact quantum and classical machinery for the infinite square well.
//
// Internally everything runs in the dimensionless convention hbar = m = L = 1
// (positions chi = x/L, densities L*rho, times t*hbar/(m L^2)). WellConfig
// converts at the API boundary, so every function below takes and returns
// quantities in the units of the supplied configuration.

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace isw::core {

using Complex = std::complex<double>;

struct WellConfig {
  double mass = 1.0;
  double length = 1.0;
  double hbar = 1.0;

  static WellConfig dimensionless() { return {}; }
  // Throws ConstraintError unless all three are finite and > 0.
  void validate() const;
  // Ground-state energy E_1 = pi^2 hbar^2 / (2 m L^2).
  double ground_energy() const;
  // hbar / E_1: the natural time unit used by unit conversions.
  double time_unit() const;
};

class ModeIndex {
 public:
  explicit ModeIndex(long n);
  long value() const { return n_; }
  friend bool operator==(ModeIndex, ModeIndex) = default;

 private:
  long n_;
};

struct Equiprobable {
  long halfwidth = 0;  // Delta
};

struct Gaussian {
  double sigma = 1.0;
  // Half-width K of the index window |k - n| <= K; 0 selects ceil(6 sigma).
  long truncation = 0;
};

// Mode index together with its (real) amplitude c_k.
struct Component {
  long mode;
  double weight;
};

class SuperpositionSpec {
 public:
  SuperpositionSpec(ModeIndex center, Equiprobable kind);
  SuperpositionSpec(ModeIndex center, Gaussian kind);

  ModeIndex center() const { return center_; }
  const std::variant<Equiprobable, Gaussian>& kind() const { return kind_; }
  bool is_equiprobable() const {
    return std::holds_alternative<Equiprobable>(kind_);
  }
  // Amplitudes with sum |c_k|^2 = 1, ordered by mode.
  const std::vector<Component>& components() const { return components_; }
  long lowest_mode() const { return components_.front().mode; }
  long highest_mode() const { return components_.back().mode; }

 private:
  ModeIndex center_;
  std::variant<Equiprobable, Gaussian> kind_;
  std::vector<Component> components_;
};

// Sample positions inside the box [0, length].
class SpatialGrid {
 public:
  SpatialGrid(std::vector<double> points, double length);

  // `count` equally spaced points on [0, length]. With include_endpoints
  // false the points are cell centres.
  static SpatialGrid uniform(long count, double length, bool include_endpoints);

  const std::vector<double>& points() const { return points_; }
  long count() const { return static_cast<long>(points_.size()); }
  double length() const { return length_; }
  double max_spacing() const;

 private:
  std::vector<double> points_;
  double length_;
};

enum class DensityMethod {
  Classical,
  ExactEigenstate,
  ExactInterference,
  ExactSuperposition,
  AsymptoticEigenstate,
  AsymptoticInterference,
  Envelope,
  ClosedForm,
  GaussianClosedForm,
  CoarseGrained,
  Custom,
};

std::string to_string(DensityMethod m);

struct DensityProfile {
  SpatialGrid grid;
  std::vector<double> values;
  DensityMethod method = DensityMethod::Custom;
  std::map<std::string, double> params;

  // Throws ConstraintError on length mismatch. Negative values are allowed
  // only for interference terms and envelopes.
  void validate() const;
};

class CoarseGrainSpec {
 public:
  CoarseGrainSpec(double epsilon, double length);
  double epsilon() const { return epsilon_; }

 private:
  double epsilon_;
};

double energy(const WellConfig& cfg, ModeIndex n);
double eigenfunction(const WellConfig& cfg, ModeIndex n, double x);
double classical_density(const WellConfig& cfg, double x);

// rho_cl = 2 / (tau |v(x)|) for a periodic orbit of period tau.
double classical_density_generic(double period,
                                 const std::function<double(double)>& speed,
                                 double x);

double exact_eigenstate_density(const WellConfig& cfg, ModeIndex n, double x);

// psi_n(x) psi_{n+alpha}(x) = 2 sin(pi n x/L) sin(pi (n+alpha) x/L) / L.
double exact_interference_term(const WellConfig& cfg, ModeIndex n, long alpha,
                               double x);

Complex superposition_wavefunction(const WellConfig& cfg,
                                   const SuperpositionSpec& spec, double x,
                                   double t);
double exact_superposition_density(const WellConfig& cfg,
                                   const SuperpositionSpec& spec, double x,
                                   double t);

// Quadrature value of int_0^L |Psi(x,t)|^2 dx.
double superposition_norm(const WellConfig& cfg, const SuperpositionSpec& spec,
                          double t);

// Evaluates f on every grid point.
DensityProfile sample(const SpatialGrid& grid,
                      const std::function<double(double)>& f,
                      DensityMethod method,
                      std::map<std::string, double> params = {});

// Sliding-window mean (1/|W|) int_W rho, W = [x-eps, x+eps] clipped to the
// sampled part of [0, L]. rho is integrated as its piecewise-linear
// interpolant. Throws ResolutionError if the grid spacing exceeds eps/5.
DensityProfile coarse_grain(const DensityProfile& profile,
                            const CoarseGrainSpec& cg);

struct MacroscopicParams {
  long n;
  long delta;
};

// n = round(L sqrt(2 m E) / (pi hbar)), Delta = round(rel * n / 2).
MacroscopicParams estimate_macroscopic_params(const WellConfig& cfg,
                                              double energy,
                                              double rel_uncertainty);

}  // namespace isw::core
