#pragma once

// Special functions needed by the square-well asymptotics: sine/cosine
// integrals, Ei on the imaginary axis, and Li_1, Li_2 and the Lerch
// transcendent restricted to the unit circle.
//
// All functions are pure and thread-safe.

#include <complex>

namespace isw::specfun {

using Complex = std::complex<double>;

// Relative/absolute acceptance band used by oracle comparisons.
class Tolerance {
 public:
  Tolerance(double rel, double abs);
  static Tolerance relative(double rel) { return {rel, 0.0}; }
  static Tolerance absolute(double abs) { return {0.0, abs}; }

  double rel() const { return rel_; }
  double abs() const { return abs_; }

  // |got - want| <= abs or |got - want| <= rel*|want|.
  bool accepts(double got, double want) const;
  bool accepts(const Complex& got, const Complex& want) const;

 private:
  double rel_;
  double abs_;
};

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 6.283185307179586476925286766559005768;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;
inline constexpr double kCatalan = 0.915965594177219015054603514932384110;

// theta reduced to (-pi, pi] using a two-constant (Cody-Waite) split of 2*pi.
double reduce_signed(double theta);
// theta reduced to [0, 2*pi).
double reduce_angle(double theta);

// Si(y) = int_0^y sin(t)/t dt. Odd by construction.
double sine_integral(double y);

// Ci(y), y > 0.
double cosine_integral(double y);

// Ei(iy) on the branch Ei(iy) = Ci(|y|) + i Si(y), i.e.
// Ei(-iy) = conj(Ei(iy)). Throws PoleError at y = 0.
Complex exp_integral_imag(double y);

// Clausen function Cl_2(theta) = -int_0^theta ln|2 sin(t/2)| dt.
double clausen2(double theta);

// Li_2(e^{i theta}).
Complex dilog_unit_circle(double theta);

// Li_1(e^{i theta}) = -ln(1 - e^{i theta}), principal branch.
Complex log_unit_circle(double theta);

// Radius around theta = 0 (mod 2*pi) inside which the s = 1 Lerch
// transcendent is refused; callers fall back to finite sums there.
inline constexpr double kLerchRefusalRadius = 1e-6;

// Phi(e^{i theta}, s, a) = sum_{k>=0} e^{i k theta} / (k + a)^s for s in {1,2}
// and integer a >= 1.
Complex lerch_unit_circle(double theta, int s, long a);

// sum_{alpha=1}^{N} e^{i alpha theta} / alpha^s by direct (compensated)
// summation.
Complex truncated_polylog(double theta, int s, long N);

}  // namespace isw::specfun
