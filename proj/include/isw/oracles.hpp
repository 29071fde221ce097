#pragma once

// Independent reference computations (brute-force sums and adaptive
// quadrature) that the closed forms are checked against.

#include <complex>

namespace isw::oracle {

using Complex = std::complex<double>;

// sum_{alpha=1}^{N} (N - alpha + 1) cos(alpha y), compensated.
double dirichlet_brute(long N, double y);

double sine_integral_quad(double y);
// gamma + ln y + int_0^y (cos t - 1)/t dt, y > 0.
double cosine_integral_quad(double y);
// -int_0^theta ln|2 sin(t/2)| dt.
double clausen2_quad(double theta);
// -int_0^1 ln(1 - z t)/t dt, z = e^{i theta}.
Complex dilog_quad(double theta);
// -log(1 - e^{i theta}) through std::log.
Complex log1_direct(double theta);
// Li_s(z) - [sum_{k<=N} z^k/k^s + z^{N+1} Phi(z, s, N+1)], z = e^{i theta}.
Complex lerch_identity_residual(double theta, int s, long N);

// (1/2pi) int_0^1 rho(chi) exp(-i Q chi) dchi for the exact densities.
Complex fourier_eigenstate_quad(long n, double Q);
Complex fourier_interference_quad(long n, long alpha, double Q);

// int_{|Q| < pi(2n+alpha)} F0(Q) exp(i Q chi) dQ, with F0 the leading term of
// the geometric expansion of the interference coefficient.
double interference_inverse_transform(long n, long alpha, double chi);

// int_0^1 psi_j chi psi_k dchi.
double position_matrix_element_quad(long j, long k);

}  // namespace isw::oracle
