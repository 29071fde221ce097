#include "isw/asymptotics.hpp"

#include <cmath>
#include <string>

#include "isw/errors.hpp"
#include "isw/specfun.hpp"

namespace isw::asym {

using specfun::kPi;
using specfun::kTwoPi;

namespace {

constexpr double kRealityTol = 1e-10;

// E(u) = int_0^1 exp(i u chi) dchi = exp(iu/2) sin(u/2)/(u/2). Regular
// everywhere; used next to the removable points of the printed formulas.
Complex unit_moment(double u) {
  const double h = 0.5 * u;
  const double sinc = h == 0.0 ? 1.0 : std::sin(h) / h;
  return std::polar(sinc, h);
}

bool near(double q, double p) { return std::abs(q - p) < kSingularRadius; }

void require_alpha(long alpha, const char* what) {
  if (alpha < 0) throw DomainError(std::string(what) + ": alpha must be >= 0");
}

}  // namespace

InterferencePair::InterferencePair(core::ModeIndex n, long alpha) : n_(n), alpha_(alpha) {
  if (alpha < 1) throw ConstraintError("InterferencePair: alpha must be >= 1");
}

double InterferencePair::quasidegeneracy() const {
  return 2.0 * static_cast<double>(alpha_) / static_cast<double>(n_.value());
}

Prefactor Prefactor::of(core::ModeIndex n, long alpha) {
  require_alpha(alpha, "Prefactor");
  const double nd = static_cast<double>(n.value());
  const double ad = static_cast<double>(alpha);
  const double mid = nd + 0.5 * ad;
  return Prefactor(nd * (nd + ad) / (mid * mid));
}

Complex fourier_eigenstate(core::ModeIndex n, double Q) {
  if (!std::isfinite(Q)) throw DomainError("fourier_eigenstate: non-finite Q");
  const double p2 = kTwoPi * static_cast<double>(n.value());
  if (near(Q, 0.0) || near(Q, p2) || near(Q, -p2)) {
    return (unit_moment(-Q) - 0.5 * unit_moment(p2 - Q) - 0.5 * unit_moment(-p2 - Q)) /
           kTwoPi;
  }
  // 1 - exp(-iQ) = 2i sin(Q/2) exp(-iQ/2).
  const Complex one_minus = std::polar(2.0 * std::sin(0.5 * Q), -0.5 * Q) * Complex(0, 1);
  const double r = Q / p2;
  return -Complex(0, 1) / (kTwoPi * Q) * one_minus / (1.0 - r * r);
}

Complex fourier_interference(core::ModeIndex n, long alpha, double Q) {
  require_alpha(alpha, "fourier_interference");
  if (alpha == 0) return fourier_eigenstate(n, Q);
  if (!std::isfinite(Q)) throw DomainError("fourier_interference: non-finite Q");
  const double a = kPi * static_cast<double>(alpha);
  const double b = kPi * static_cast<double>(2 * n.value() + alpha);
  if (near(Q, a) || near(Q, -a) || near(Q, b) || near(Q, -b)) {
    return 0.5 *
           (unit_moment(a - Q) + unit_moment(-a - Q) - unit_moment(b - Q) -
            unit_moment(-b - Q)) /
           kTwoPi;
  }
  const double gamma = Prefactor::of(n, alpha).gamma();
  // 1 - (-1)^alpha exp(-iQ) written without cancellation.
  const Complex bracket = alpha % 2 == 0
                              ? std::polar(2.0 * std::sin(0.5 * Q), -0.5 * Q) * Complex(0, 1)
                              : std::polar(2.0 * std::cos(0.5 * Q), -0.5 * Q);
  const double r = Q / b;
  return -gamma * Complex(0, Q) * bracket /
         (kTwoPi * (Q - a) * (Q + a) * (1.0 - r * r));
}

bool geometric_expansion_validity(core::ModeIndex n, long alpha, double Q) {
  return std::abs(Q) < kPi * static_cast<double>(2 * n.value() + alpha);
}

double asymptotic_eigenstate_density(const core::WellConfig& cfg, core::ModeIndex n,
                                     double x) {
  cfg.validate();
  const double chi = x / cfg.length;
  if (chi < 0.0 || chi > 1.0) return 0.0;
  const double k = kTwoPi * static_cast<double>(n.value());
  return (specfun::sine_integral(k * (1.0 - chi)) + specfun::sine_integral(k * chi)) /
         (kPi * cfg.length);
}

double asymptotic_interference_density(const core::WellConfig& cfg,
                                       core::ModeIndex n, long alpha, double x) {
  require_alpha(alpha, "asymptotic_interference_density");
  cfg.validate();
  const double chi = x / cfg.length;
  if (chi < 0.0 || chi > 1.0) return 0.0;
  if (chi == 0.0 || chi == 1.0) {
    throw PoleError("asymptotic_interference_density: Ei pole at the wall");
  }
  const double nd = static_cast<double>(n.value());
  const double ad = static_cast<double>(alpha);
  // zeta_a^xi = i y with y = 2 pi chi^{1-xi} (1-chi)^xi (n + a);
  // Ei(+-zeta) = exp_integral_imag(+-y).
  auto y = [&](double shift, int xi) {
    return kTwoPi * (xi == 0 ? chi : 1.0 - chi) * (nd + shift);
  };
  auto ei = [](double v) { return specfun::exp_integral_imag(v); };
  const double ya1 = y(ad, 1), ya0 = y(ad, 0), y01 = y(0.0, 1), y00 = y(0.0, 0);
  const Complex b1 = ei(-ya1) - ei(y01) + ei(-y00) - ei(ya0);
  const Complex b2 = -ei(ya1) + ei(-ya0) - ei(y00) + ei(-y01);
  const double phase = kPi * ad * chi;
  const double gamma = Prefactor::of(n, alpha).gamma();
  const Complex rho = Complex(0.0, gamma / (2.0 * kTwoPi)) *
                      (std::polar(1.0, -phase) * b1 + std::polar(1.0, phase) * b2);
  if (!(std::abs(rho.imag()) < kRealityTol)) {
    throw AccuracyError("asymptotic_interference_density: imaginary residue above 1e-10");
  }
  return rho.real() / cfg.length;
}

double envelope_interference_density(const core::WellConfig& cfg, long alpha,
                                     double x) {
  cfg.validate();
  const double chi = x / cfg.length;
  if (chi < 0.0 || chi > 1.0) return 0.0;
  return 2.0 * std::cos(kPi * static_cast<double>(alpha) * chi) / cfg.length;
}

Spacing relative_spacing(core::ModeIndex n, long alpha) {
  const double nd = static_cast<double>(n.value());
  const double ad = static_cast<double>(alpha);
  return {ad * (2.0 * nd + ad) / (nd * nd), 2.0 * ad / nd};
}

double dirichlet_weighted_sum(long N, double y) {
  if (N < 1) throw DomainError("dirichlet_weighted_sum: N must be >= 1");
  if (!std::isfinite(y)) throw DomainError("dirichlet_weighted_sum: non-finite y");
  const double d = specfun::reduce_signed(y);
  const double nd = static_cast<double>(N);
  if (std::abs(d) < kSingularRadius && std::abs(d) * (nd + 2.0) < 1e-3) {
    // Second-order Taylor expansion about y = 0 (mod 2 pi).
    return 0.5 * nd * (nd + 1.0) -
           d * d * nd * (nd + 1.0) * (nd + 1.0) * (nd + 2.0) / 24.0;
  }
  // [cos y - cos((N+1)y)] / (4 sin^2(y/2)) in product form.
  const double s = std::sin(0.5 * d);
  return std::sin(0.5 * (nd + 2.0) * d) * std::sin(0.5 * nd * d) / (2.0 * s * s) -
         0.5 * nd;
}

double superposition_density_closed_form(const core::WellConfig& cfg, long delta,
                                         double x) {
  if (delta < 0) throw DomainError("superposition_density_closed_form: Delta must be >= 0");
  cfg.validate();
  const double chi = x / cfg.length;
  if (chi < 0.0 || chi > 1.0) return 0.0;
  if (delta == 0) return 1.0 / cfg.length;
  const double s = dirichlet_weighted_sum(2 * delta, kPi * chi);
  return std::abs(1.0 + 4.0 * s / static_cast<double>(2 * delta + 1)) / cfg.length;
}

double gaussian_superposition_density(const core::WellConfig& cfg, double sigma,
                                      double x, long truncation) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw DomainError("gaussian_superposition_density: sigma must be > 0");
  }
  if (static_cast<double>(truncation) < std::ceil(12.0 * sigma)) {
    throw AccuracyError("gaussian_superposition_density: truncation below ceil(12 sigma)");
  }
  cfg.validate();
  const double chi = x / cfg.length;
  if (chi < 0.0 || chi > 1.0) return 0.0;
  const double inv = 1.0 / (8.0 * sigma * sigma);
  double sum = 0.0;
  for (long a = truncation; a >= 1; --a) {
    const double ad = static_cast<double>(a);
    sum += std::exp(-ad * ad * inv) * std::cos(kPi * ad * chi);
  }
  return std::abs(1.0 + 2.0 * sum) / cfg.length;
}

}  // namespace isw::asym
