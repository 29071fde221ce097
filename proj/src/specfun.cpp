#include "isw/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "isw/errors.hpp"
#include "isw/quadrature.hpp"

namespace isw::specfun {

namespace {

constexpr double kHalfPi = 0.5 * kPi;
// 2*pi split into a head exactly representable in double and the remainder.
constexpr double kTwoPiHi = 6.28318530717958623199592693708837032318115234375;
constexpr double kTwoPiLo = 2.44929359829470635445213186455000211641949889184e-16;

// Maclaurin/asymptotic crossover for Si and Ci.
constexpr double kSiCiCrossover = 6.0;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw DomainError(std::string(what) + ": non-finite argument");
  }
}

double checked(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw DomainError(std::string(what) + ": result is not finite");
  }
  return v;
}

Complex checked(Complex v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw DomainError(std::string(what) + ": result is not finite");
  }
  return v;
}

double si_series(double y) {
  const double y2 = y * y;
  double power = y;  // y^{2k+1}/(2k+1)!
  double sum = y;
  for (int k = 1; k < 60; ++k) {
    power *= -y2 / (static_cast<double>(2 * k) * static_cast<double>(2 * k + 1));
    const double term = power / static_cast<double>(2 * k + 1);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double ci_series(double y) {
  const double y2 = y * y;
  double power = 1.0;  // y^{2k}/(2k)!
  double sum = 0.0;
  for (int k = 1; k < 60; ++k) {
    power *= -y2 / (static_cast<double>(2 * k - 1) * static_cast<double>(2 * k));
    const double term = power / static_cast<double>(2 * k);
    sum += term;
    if (std::abs(term) < 1e-18 * (std::abs(sum) + 1.0)) break;
  }
  return kEulerGamma + std::log(y) + sum;
}

// Auxiliary functions for t > crossover from the continued fraction of
// E1(it) (modified Lentz). E1(it) = -Ci(t) + i(Si(t) - pi/2).
std::pair<double, double> cisi_asymptotic(double t) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-17;
  Complex b(1.0, t);
  Complex c(1.0 / kTiny, 0.0);
  Complex d = 1.0 / b;
  Complex h = d;
  for (int i = 2; i < 10000; ++i) {
    const double a = -static_cast<double>(i - 1) * static_cast<double>(i - 1);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const Complex del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < kEps) break;
  }
  h *= Complex(std::cos(t), -std::sin(t));
  return {-h.real(), kHalfPi + h.imag()};
}

// ζ(2k) for k = 1..kZetaTerms.
constexpr int kZetaTerms = 40;

const std::array<double, kZetaTerms + 1>& zeta_even() {
  static const std::array<double, kZetaTerms + 1> table = [] {
    std::array<double, kZetaTerms + 1> z{};
    const double p2 = kPi * kPi;
    z[1] = p2 / 6.0;
    z[2] = p2 * p2 / 90.0;
    z[3] = p2 * p2 * p2 / 945.0;
    z[4] = p2 * p2 * p2 * p2 / 9450.0;
    for (int k = 5; k <= kZetaTerms; ++k) {
      double s = 0.0;
      for (int n = 80; n >= 2; --n) s += std::pow(static_cast<double>(n), -2.0 * k);
      z[k] = 1.0 + s;
    }
    return z;
  }();
  return table;
}

// Cl_2 for 0 < r <= pi via
// Cl_2(r) = r - r ln r + sum_k ζ(2k) r^{2k+1} / (k (2k+1) (2π)^{2k}).
double clausen_series(double r) {
  const auto& z = zeta_even();
  const double q = (r / kTwoPi) * (r / kTwoPi);
  double qk = 1.0;
  double sum = 0.0;
  for (int k = 1; k <= kZetaTerms; ++k) {
    qk *= q;
    const double term = z[k] * qk / (static_cast<double>(k) * (2.0 * k + 1.0));
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return r * (1.0 - std::log(r) + sum);
}

}  // namespace

Tolerance::Tolerance(double rel, double abs) : rel_(rel), abs_(abs) {
  if (!(rel >= 0.0) || !(abs >= 0.0) || (rel == 0.0 && abs == 0.0)) {
    throw ConstraintError("Tolerance: need rel >= 0, abs >= 0, one of them > 0");
  }
}

bool Tolerance::accepts(double got, double want) const {
  const double d = std::abs(got - want);
  return d <= abs_ || d <= rel_ * std::abs(want);
}

bool Tolerance::accepts(const Complex& got, const Complex& want) const {
  const double d = std::abs(got - want);
  return d <= abs_ || d <= rel_ * std::abs(want);
}

double reduce_signed(double theta) {
  require_finite(theta, "reduce_signed");
  const double k = std::nearbyint(theta / kTwoPiHi);
  double r = std::fma(-k, kTwoPiHi, theta);
  r = std::fma(-k, kTwoPiLo, r);
  if (r > kPi) r -= kTwoPi;
  if (r <= -kPi) r += kTwoPi;
  return r;
}

double reduce_angle(double theta) {
  const double r = reduce_signed(theta);
  return r < 0.0 ? r + kTwoPi : r;
}

double sine_integral(double y) {
  require_finite(y, "sine_integral");
  const double t = std::abs(y);
  const double v = t <= kSiCiCrossover ? si_series(t) : cisi_asymptotic(t).second;
  return checked(std::copysign(v, y), "sine_integral");
}

double cosine_integral(double y) {
  require_finite(y, "cosine_integral");
  if (!(y > 0.0)) {
    throw DomainError("cosine_integral: requires y > 0");
  }
  const double v = y <= kSiCiCrossover ? ci_series(y) : cisi_asymptotic(y).first;
  return checked(v, "cosine_integral");
}

Complex exp_integral_imag(double y) {
  require_finite(y, "exp_integral_imag");
  if (y == 0.0) {
    throw PoleError("exp_integral_imag: logarithmic pole at y = 0");
  }
  const double t = std::abs(y);
  double ci, si;
  if (t <= kSiCiCrossover) {
    ci = ci_series(t);
    si = si_series(t);
  } else {
    std::tie(ci, si) = cisi_asymptotic(t);
  }
  return checked(Complex(ci, std::copysign(si, y)), "exp_integral_imag");
}

double clausen2(double theta) {
  const double r = reduce_signed(theta);
  if (r == 0.0) return 0.0;
  const double v = clausen_series(std::abs(r));
  return checked(std::copysign(v, r), "clausen2");
}

Complex dilog_unit_circle(double theta) {
  const double t = reduce_angle(theta);
  const double re = kPi * kPi / 6.0 - 0.25 * t * (kTwoPi - t);
  return checked(Complex(re, clausen2(theta)), "dilog_unit_circle");
}

Complex log_unit_circle(double theta) {
  const double r = reduce_signed(theta);
  if (std::abs(r) <= 8.0 * std::numeric_limits<double>::epsilon() *
                        std::max(1.0, std::abs(theta))) {
    throw PoleError("log_unit_circle: pole at theta = 0 (mod 2pi)");
  }
  // 1 - e^{ir} = 2 sin(r/2) e^{i(r - pi)/2} for r in (0, pi]; odd in r for
  // the imaginary part.
  const double re = -std::log(2.0 * std::abs(std::sin(0.5 * r)));
  const double im = r > 0.0 ? 0.5 * (kPi - r) : -0.5 * (kPi + r);
  return checked(Complex(re, im), "log_unit_circle");
}

Complex lerch_unit_circle(double theta, int s, long a) {
  if (s != 1 && s != 2) {
    throw DomainError("lerch_unit_circle: s must be 1 or 2");
  }
  if (a < 1) {
    throw DomainError("lerch_unit_circle: a must be >= 1");
  }
  const double r = reduce_signed(theta);
  if (s == 1 && std::abs(r) < kLerchRefusalRadius) {
    throw PoleError("lerch_unit_circle: s = 1 too close to theta = 0 (mod 2pi)");
  }

  // Phi = a^{-s}/Gamma(s) int_0^inf u^{s-1} e^{-u} / (1 - e^{ir} e^{-u/a}) du.
  const double ad = static_cast<double>(a);
  const double sin_half = std::sin(0.5 * r);
  const double two_sin2 = 2.0 * sin_half * sin_half;  // 1 - cos r
  const double sin_r = std::sin(r);
  auto integrand = [&](double u) -> Complex {
    const double tau = u / ad;
    const double decay = std::exp(-tau);
    const double re = -std::expm1(-tau) + decay * two_sin2;
    const double im = -decay * sin_r;
    const double w = (s == 1 ? 1.0 : u) * std::exp(-u);
    return w / Complex(re, im);
  };

  // Denominator changes character at u ~ a|r|.
  std::vector<double> breaks;
  const double knee = ad * std::abs(r);
  if (knee > 0.0 && knee < 45.0) {
    for (double b = knee / 64.0; b < 45.0; b *= 2.0) breaks.push_back(b);
  }
  for (double b = 0.5; b < 45.0; b *= 2.0) breaks.push_back(b);

  quad::Options opt;
  opt.rel_tol = 1e-15;
  opt.abs_tol = 1e-300;
  const auto res = quad::integrate(integrand, 0.0, 60.0, opt, breaks);
  if (!(res.error <= 1e-13 * std::abs(res.value))) {
    throw AccuracyError("lerch_unit_circle: quadrature tolerance not met");
  }
  return checked(res.value / std::pow(ad, s), "lerch_unit_circle");
}

Complex truncated_polylog(double theta, int s, long N) {
  if (s != 1 && s != 2) {
    throw DomainError("truncated_polylog: s must be 1 or 2");
  }
  if (N < 1) {
    throw DomainError("truncated_polylog: N must be >= 1");
  }
  const double r = reduce_signed(theta);
  // Neumaier-compensated accumulation of both components.
  double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0;
  auto add = [](double& sum, double& comp, double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  };
  for (long k = 1; k <= N; ++k) {
    const double kd = static_cast<double>(k);
    // k*r carried as an unevaluated sum so the phase keeps full precision.
    const double prod = kd * r;
    const double phase = reduce_signed(prod) + std::fma(kd, r, -prod);
    const double scale = s == 1 ? 1.0 / kd : 1.0 / (kd * kd);
    add(sr, cr, scale * std::cos(phase));
    add(si, ci, scale * std::sin(phase));
  }
  return {sr + cr, si + ci};
}

}  // namespace isw::specfun
