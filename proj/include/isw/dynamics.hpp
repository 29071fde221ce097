#pragma once

// Position expectation value of square-well superpositions.
//
// Dynamics run on the dimensionless phase omega = pi v_cl t / L, where
// n = m L v_cl / (pi hbar). The linearized level spacing then makes the
// alpha-th harmonic exactly cos(alpha omega). Positions are returned in
// units of L unless stated otherwise.

#include <complex>
#include <string>
#include <vector>

#include "isw/core.hpp"

namespace isw::dyn {

using Complex = std::complex<double>;

struct TimeSeries {
  std::vector<double> phases;
  std::vector<double> values;
  std::string label;

  // Equal lengths, finite entries, strictly increasing phases, values in
  // the sanity band [-1, 2].
  void validate() const;
};

struct DynamicsSpec {
  core::SuperpositionSpec spec;
  double v_cl;
  std::vector<double> phase_grid;

  void validate() const;
};

// Phase grid of `count` points covering [0, periods * 2 pi).
std::vector<double> uniform_phase_grid(long count, double periods = 1.0);

// |(v t mod 2L) - L|, so x(0) = L. Physical units.
double classical_position(double v_cl, double length, double t);
// Same trajectory as a function of omega, in units of L.
double classical_position_phase(double omega);

// n = round(m L v / (pi hbar)).
long mode_from_speed(const core::WellConfig& cfg, double v_cl);
// omega = pi v t / L.
double phase_from_time(const core::WellConfig& cfg, double v_cl, double t);

// 2 [(-1)^alpha - 1] / (pi^2 alpha^2) cos(alpha omega).
double expectation_alpha(long alpha, double omega);

// 1/2 + (1/(2 Delta + 1)) sum_{alpha=1}^{2 Delta} (2 Delta - alpha + 1) <x>_alpha.
double expectation_total_direct(long delta, double omega);

// S_t = sum_{alpha=1}^{N} (N - alpha + 1) ((-1)^alpha - 1)/alpha^2 cos(alpha omega).
double st_direct(long N, double omega);
// S_t from polylogarithm tails: Li_s(xi) - xi^{N+1} Phi(xi, s, N+1).
Complex st_generating(long N, double omega);
// S_t from the atanh/acoth + Lerch assembly with N^2 normalization.
Complex st_closed_printed(long N, double omega);

// Phases within this distance of a multiple of pi use the direct sum.
inline constexpr double kSingularPhaseRadius = 1e-4;

struct ClosedEvaluation {
  double value;
  double imag_residue;
  bool used_fallback;
};
ClosedEvaluation expectation_total_closed_detail(long delta, double omega);
double expectation_total_closed(long delta, double omega);

// 1/2 - (4/pi^2) sum_{k=1}^{K} exp(-(2k-1)^2/(8 sigma^2)) cos((2k-1) omega)/(2k-1)^2.
// Requires 2K - 1 >= 12 sigma (AccuracyError otherwise).
double expectation_gaussian(double sigma, double omega, long truncation);

// int Psi* x Psi dx / L with exact eigenfunctions and the quadratic spectrum,
// by adaptive quadrature. t is physical time.
double expectation_exact_oracle(const core::WellConfig& cfg,
                                const core::SuperpositionSpec& spec, double t);

// <psi_j|x|psi_k> / L from the closed-form matrix elements.
double position_matrix_element(long j, long k);
// sum_{j,k} c_j c_k x_jk cos((E_j - E_k) t / hbar) / L.
double expectation_matrix_elements(const core::WellConfig& cfg,
                                   const core::SuperpositionSpec& spec, double t);

TimeSeries asymptotic_series(long delta, const std::vector<double>& phases,
                             bool closed = false);
TimeSeries classical_series(const std::vector<double>& phases);

struct Alignment {
  double shift;  // phase shift s with q(omega) ~ cl(omega + s), in (-pi, pi]
  double rms;
};
// Both series must share a uniform one-period phase grid. Throws
// AlignmentError for constant series or mismatched grids.
Alignment align_time_shift(const TimeSeries& series_q, const TimeSeries& series_cl);

}  // namespace isw::dyn
