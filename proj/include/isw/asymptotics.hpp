#pragma once

// Closed-form and large-n expressions for square-well densities: Fourier
// coefficients, Si/Ei asymptotic densities, interference envelopes and the
// equiprobable/Gaussian superposition densities.
//
// Fourier coefficients are dimensionless (hbar = L = 1) with the kernel
//   f(Q) = (1/2pi) int_0^1 rho(chi) exp(-i Q chi) dchi,
// so a unit-normalized density has f(0) = +1/(2pi).

#include <complex>

#include "isw/core.hpp"

namespace isw::asym {

using Complex = std::complex<double>;

struct FourierPoint {
  double Q;
  Complex value;
};

class InterferencePair {
 public:
  InterferencePair(core::ModeIndex n, long alpha);
  core::ModeIndex n() const { return n_; }
  long alpha() const { return alpha_; }
  // Relative level spacing 2 alpha / n.
  double quasidegeneracy() const;

 private:
  core::ModeIndex n_;
  long alpha_;
};

// Gamma = n (n + alpha) / (n + alpha/2)^2, in (0, 1].
class Prefactor {
 public:
  static Prefactor of(core::ModeIndex n, long alpha);
  double gamma() const { return gamma_; }

 private:
  explicit Prefactor(double g) : gamma_(g) {}
  double gamma_;
};

// Within this distance of a removable singularity the limit form is used.
inline constexpr double kSingularRadius = 1e-6;

Complex fourier_eigenstate(core::ModeIndex n, double Q);
Complex fourier_interference(core::ModeIndex n, long alpha, double Q);

// |Q| < pi (2n + alpha).
bool geometric_expansion_validity(core::ModeIndex n, long alpha, double Q);

// (1/(L pi)) [Si(2 n pi (1 - chi)) + Si(2 n pi chi)].
double asymptotic_eigenstate_density(const core::WellConfig& cfg, core::ModeIndex n,
                                     double x);

// Exponential-integral form of the interference term. The complex
// combination must be real to 1e-10 (AccuracyError otherwise). Throws
// PoleError at the walls.
double asymptotic_interference_density(const core::WellConfig& cfg,
                                       core::ModeIndex n, long alpha, double x);

// (2/L) cos(pi alpha x / L) inside the box, 0 outside.
double envelope_interference_density(const core::WellConfig& cfg, long alpha,
                                     double x);

struct Spacing {
  double exact;   // ((n+alpha)^2 - n^2) / n^2
  double approx;  // 2 alpha / n
};
Spacing relative_spacing(core::ModeIndex n, long alpha);

// S = sum_{alpha=1}^{N} (N - alpha + 1) cos(alpha y) in closed form.
double dirichlet_weighted_sum(long N, double y);

// Equiprobable superposition of 2 Delta + 1 levels at t = 0:
// (1/L) |1 + 4 S(2 Delta, pi x / L) / (2 Delta + 1)|.
double superposition_density_closed_form(const core::WellConfig& cfg, long delta,
                                         double x);

// (1/L) |1 + 2 sum_{alpha=1}^{T} exp(-alpha^2/(8 sigma^2)) cos(pi alpha x/L)|.
// Requires T >= ceil(12 sigma) (AccuracyError otherwise).
double gaussian_superposition_density(const core::WellConfig& cfg, double sigma,
                                      double x, long truncation);

}  // namespace isw::asym
