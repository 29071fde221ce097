#include "isw/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "isw/asymptotics.hpp"
#include "isw/errors.hpp"
#include "isw/quadrature.hpp"
#include "isw/specfun.hpp"

namespace isw::oracle {

using specfun::kPi;
using specfun::kTwoPi;

namespace {

quad::Options tight(double panel = 0.0) {
  quad::Options opt;
  opt.rel_tol = 1e-14;
  opt.abs_tol = 1e-16;
  opt.max_panel = panel;
  return opt;
}

// Accepts the result once the error estimate is far below the 1e-8 level
// the Fourier comparisons need; rel 1e-14 alone is unreachable for tiny
// coefficients. The absolute floor sits near rounding level for an
// integrand of size 1/pi.
template <class F>
Complex fourier_integral(F&& f, double top) {
  const auto r = quad::integrate(f, 0.0, 1.0, tight(quad::quarter_wavelength(top)));
  if (!(r.error <= 1e-12 * std::abs(r.value) + 1e-15)) {
    throw AccuracyError("fourier oracle: quadrature tolerance not met");
  }
  return r.value;
}

}  // namespace

double dirichlet_brute(long N, double y) {
  double sum = 0.0, comp = 0.0;
  for (long a = 1; a <= N; ++a) {
    const double v = static_cast<double>(N - a + 1) * std::cos(static_cast<double>(a) * y);
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  return sum + comp;
}

double sine_integral_quad(double y) {
  auto f = [](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; };
  return quad::integrate_or_throw(f, 0.0, y, tight(0.5 * kPi));
}

double cosine_integral_quad(double y) {
  if (!(y > 0.0)) throw DomainError("cosine_integral_quad: y must be > 0");
  auto f = [](double t) {
    if (t < 1e-4) {
      const double t2 = t * t;
      return -0.5 * t + t * t2 / 24.0 - t * t2 * t2 / 720.0;
    }
    return (std::cos(t) - 1.0) / t;
  };
  return specfun::kEulerGamma + std::log(y) +
         quad::integrate_or_throw(f, 0.0, y, tight(0.5 * kPi));
}

double clausen2_quad(double theta) {
  auto f = [](double t) { return -std::log(std::abs(2.0 * std::sin(0.5 * t))); };
  // Split at the logarithmic singularities t = 2 pi k.
  const double lo = std::min(0.0, theta), hi = std::max(0.0, theta);
  std::vector<double> breaks;
  for (double k = std::ceil(lo / kTwoPi); k * kTwoPi < hi; k += 1.0) {
    breaks.push_back(k * kTwoPi);
  }
  return quad::integrate_or_throw(f, 0.0, theta, tight(0.5), breaks);
}

Complex dilog_quad(double theta) {
  const Complex z = std::polar(1.0, theta);
  auto f = [&](double t) -> Complex {
    if (t < 1e-6) return z + 0.5 * z * z * t;
    return -std::log(1.0 - z * t) / t;
  };
  return quad::integrate_or_throw(f, 0.0, 1.0, tight());
}

Complex log1_direct(double theta) { return -std::log(1.0 - std::polar(1.0, theta)); }

Complex lerch_identity_residual(double theta, int s, long N) {
  const Complex li = s == 1 ? specfun::log_unit_circle(theta) : specfun::dilog_unit_circle(theta);
  const double n1 = static_cast<double>(N + 1);
  const Complex head = std::polar(1.0, specfun::reduce_signed(n1 * theta));
  return li - (specfun::truncated_polylog(theta, s, N) +
               head * specfun::lerch_unit_circle(theta, s, N + 1));
}

Complex fourier_eigenstate_quad(long n, double Q) {
  const double k = static_cast<double>(n);
  auto f = [&](double chi) {
    const double s = std::sin(kPi * k * chi);
    return 2.0 * s * s * std::polar(1.0, -Q * chi) / kTwoPi;
  };
  return fourier_integral(f, std::max(2.0 * k, std::abs(Q) / kPi));
}

Complex fourier_interference_quad(long n, long alpha, double Q) {
  const double k = static_cast<double>(n), a = static_cast<double>(alpha);
  auto f = [&](double chi) {
    return 2.0 * std::sin(kPi * k * chi) * std::sin(kPi * (k + a) * chi) *
           std::polar(1.0, -Q * chi) / kTwoPi;
  };
  return fourier_integral(f, std::max(2.0 * k + a, std::abs(Q) / kPi));
}

double interference_inverse_transform(long n, long alpha, double chi) {
  const double a = kPi * static_cast<double>(alpha);
  const double b = kPi * static_cast<double>(2 * n + alpha);
  const double gamma = asym::Prefactor::of(core::ModeIndex(n), alpha).gamma();
  const bool odd = alpha % 2 == 1;
  // Real part of F0(Q) e^{iQ chi}; the imaginary parts cancel between Q and -Q.
  auto f = [&](double Q) {
    const Complex bracket =
        odd ? std::polar(2.0 * std::cos(0.5 * Q), -0.5 * Q)
            : std::polar(2.0 * std::sin(0.5 * Q), -0.5 * Q) * Complex(0, 1);
    const Complex F0 = -gamma * Complex(0, Q) * bracket / (kTwoPi * (Q - a) * (Q + a));
    return (F0 * std::polar(1.0, Q * chi)).real();
  };
  std::vector<double> breaks{-a, a};
  auto opt = tight(0.5);
  opt.rel_tol = 1e-13;
  opt.abs_tol = 1e-12;
  return quad::integrate_or_throw(f, -b, b, opt, breaks);
}

double position_matrix_element_quad(long j, long k) {
  const double jd = static_cast<double>(j), kd = static_cast<double>(k);
  auto f = [&](double chi) {
    return 2.0 * chi * std::sin(kPi * jd * chi) * std::sin(kPi * kd * chi);
  };
  return quad::integrate_or_throw(
      f, 0.0, 1.0, tight(quad::quarter_wavelength(static_cast<double>(j + k))));
}

}  // namespace isw::oracle
