#include "isw/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "isw/errors.hpp"
#include "isw/quadrature.hpp"
#include "isw/specfun.hpp"

namespace isw::dyn {

using specfun::kPi;
using specfun::kTwoPi;

namespace {

constexpr double kPi2 = kPi * kPi;

// exp(i k w) with k*w carried to full precision before reduction.
Complex cis_multiple(double k, double w) {
  const double prod = k * w;
  const double phase = specfun::reduce_signed(prod) + std::fma(k, w, -prod);
  return std::polar(1.0, phase);
}

// sum_{alpha=1}^{N} (N + 1 - alpha) xi^alpha / alpha^2 for xi = e^{i theta}.
Complex weighted_tail_sum(long N, double theta) {
  const double n1 = static_cast<double>(N + 1);
  const Complex head = cis_multiple(n1, theta);
  const Complex li2 = specfun::dilog_unit_circle(theta) -
                      head * specfun::lerch_unit_circle(theta, 2, N + 1);
  const Complex li1 = specfun::log_unit_circle(theta) -
                      head * specfun::lerch_unit_circle(theta, 1, N + 1);
  return n1 * li2 - li1;
}

bool near_multiple_of_pi(double omega) {
  return std::abs(specfun::reduce_signed(2.0 * omega)) < 2.0 * kSingularPhaseRadius;
}

void require_delta(long delta, const char* what) {
  if (delta < 0) throw DomainError(std::string(what) + ": Delta must be >= 0");
}

}  // namespace

void TimeSeries::validate() const {
  if (phases.size() != values.size()) {
    throw ConstraintError("TimeSeries: phases/values length mismatch");
  }
  for (std::size_t i = 0; i < phases.size(); ++i) {
    if (!std::isfinite(phases[i]) || !std::isfinite(values[i])) {
      throw ConstraintError("TimeSeries: non-finite entry");
    }
    if (i > 0 && !(phases[i] > phases[i - 1])) {
      throw ConstraintError("TimeSeries: phases must be increasing");
    }
    if (values[i] < -1.0 || values[i] > 2.0) {
      throw ConstraintError("TimeSeries: value outside [-L, 2L]");
    }
  }
}

void DynamicsSpec::validate() const {
  if (!(v_cl > 0.0) || !std::isfinite(v_cl)) {
    throw ConstraintError("DynamicsSpec: v_cl must be > 0");
  }
  for (std::size_t i = 0; i < phase_grid.size(); ++i) {
    if (!std::isfinite(phase_grid[i]) || (i > 0 && !(phase_grid[i] > phase_grid[i - 1]))) {
      throw ConstraintError("DynamicsSpec: phase grid must be finite and increasing");
    }
  }
}

std::vector<double> uniform_phase_grid(long count, double periods) {
  if (count < 1) throw ConstraintError("uniform_phase_grid: count must be >= 1");
  if (!(periods > 0.0)) throw ConstraintError("uniform_phase_grid: periods must be > 0");
  std::vector<double> g(static_cast<std::size_t>(count));
  const double span = kTwoPi * periods;
  for (long i = 0; i < count; ++i) {
    g[i] = span * static_cast<double>(i) / static_cast<double>(count);
  }
  return g;
}

double classical_position(double v_cl, double length, double t) {
  if (!(t >= 0.0)) throw DomainError("classical_position: t must be >= 0");
  if (!(v_cl > 0.0) || !(length > 0.0)) {
    throw DomainError("classical_position: v_cl and L must be > 0");
  }
  const double s = std::fmod(v_cl * t, 2.0 * length);
  return std::abs(s - length);
}

double classical_position_phase(double omega) {
  double u = std::fmod(omega / kPi, 2.0);
  if (u < 0.0) u += 2.0;
  return std::abs(u - 1.0);
}

long mode_from_speed(const core::WellConfig& cfg, double v_cl) {
  cfg.validate();
  const long n = std::lround(cfg.mass * cfg.length * v_cl / (kPi * cfg.hbar));
  if (n < 1) throw DomainError("mode_from_speed: speed below the ground-state value");
  return n;
}

double phase_from_time(const core::WellConfig& cfg, double v_cl, double t) {
  cfg.validate();
  return kPi * v_cl * t / cfg.length;
}

double expectation_alpha(long alpha, double omega) {
  if (alpha < 1) throw DomainError("expectation_alpha: alpha must be >= 1");
  if (alpha % 2 == 0) return 0.0;
  const double a = static_cast<double>(alpha);
  return -4.0 / (kPi2 * a * a) * cis_multiple(a, omega).real();
}

double st_direct(long N, double omega) {
  if (N < 0) throw DomainError("st_direct: N must be >= 0");
  double sum = 0.0;
  for (long a = N % 2 == 1 ? N : N - 1; a >= 1; a -= 2) {
    const double ad = static_cast<double>(a);
    sum += static_cast<double>(N - a + 1) * (-2.0 / (ad * ad)) *
           cis_multiple(ad, omega).real();
  }
  return sum;
}

double expectation_total_direct(long delta, double omega) {
  require_delta(delta, "expectation_total_direct");
  if (delta == 0) return 0.5;
  return 0.5 + 2.0 * st_direct(2 * delta, omega) /
                   (kPi2 * static_cast<double>(2 * delta + 1));
}

Complex st_generating(long N, double omega) {
  if (N < 1) throw DomainError("st_generating: N must be >= 1");
  // ((-1)^a - 1) cos(a w) = Re[(-z)^a - z^a] with z = e^{iw}.
  const Complex f_mz = weighted_tail_sum(N, omega + kPi);
  const Complex f_z = weighted_tail_sum(N, omega);
  const Complex f_mzb = weighted_tail_sum(N, kPi - omega);
  const Complex f_zb = weighted_tail_sum(N, -omega);
  return 0.5 * (f_mz - f_z + f_mzb - f_zb);
}

Complex st_closed_printed(long N, double omega) {
  if (N < 1) throw DomainError("st_closed_printed: N must be >= 1");
  using specfun::dilog_unit_circle;
  using specfun::lerch_unit_circle;
  using specfun::log_unit_circle;
  const double w = omega;
  const double nd = static_cast<double>(N);
  const double n1 = nd + 1.0;
  const double n2 = nd * nd;

  // atanh(z) = (1/2)[ln(1+z) - ln(1-z)], acoth(z) = atanh(1/z), with
  // ln(1 - e^{i t}) = -Li_1(e^{i t}).
  const Complex atanh_z = 0.5 * (log_unit_circle(w) - log_unit_circle(w + kPi));
  const Complex acoth_z = 0.5 * (log_unit_circle(-w) - log_unit_circle(kPi - w));

  const Complex eiw = std::polar(1.0, w);
  const Complex eiNw = cis_multiple(nd, w);
  const Complex t1 = eiw * (2.0 * n2 * eiNw * (atanh_z + acoth_z) + eiNw * eiNw + 1.0);

  const double mzb = kPi - w;  // -e^{-iw}
  const double mz = w + kPi;   // -e^{iw}
  const Complex part_conj = eiw * lerch_unit_circle(mzb, 1, N) -
                            n1 * eiw * lerch_unit_circle(mzb, 2, N) -
                            lerch_unit_circle(-w, 1, N + 1) +
                            n1 * lerch_unit_circle(-w, 2, N + 1);
  const Complex part_dir =
      cis_multiple(2.0 * nd + 1.0, w) *
      (lerch_unit_circle(mz, 1, N) - n1 * lerch_unit_circle(mz, 2, N) +
       eiw * (n1 * lerch_unit_circle(w, 2, N + 1) - lerch_unit_circle(w, 1, N + 1)));
  const Complex part_li2 = n1 * cis_multiple(n1, w) *
                           (dilog_unit_circle(mzb) - dilog_unit_circle(-w) +
                            dilog_unit_circle(mz) - dilog_unit_circle(w));
  const Complex t2 = n2 * (part_conj + part_dir + part_li2);
  return std::conj(cis_multiple(n1, w)) / (2.0 * n2) * (t1 + t2);
}

ClosedEvaluation expectation_total_closed_detail(long delta, double omega) {
  require_delta(delta, "expectation_total_closed");
  if (!std::isfinite(omega)) throw DomainError("expectation_total_closed: non-finite omega");
  if (delta == 0) return {0.5, 0.0, false};
  if (near_multiple_of_pi(omega)) {
    return {expectation_total_direct(delta, omega), 0.0, true};
  }
  const Complex st = st_generating(2 * delta, omega);
  const double scale = 2.0 / (kPi2 * static_cast<double>(2 * delta + 1));
  return {0.5 + scale * st.real(), scale * std::abs(st.imag()), false};
}

double expectation_total_closed(long delta, double omega) {
  return expectation_total_closed_detail(delta, omega).value;
}

double expectation_gaussian(double sigma, double omega, long truncation) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw DomainError("expectation_gaussian: sigma must be > 0");
  }
  if (static_cast<double>(2 * truncation - 1) < 12.0 * sigma) {
    throw AccuracyError("expectation_gaussian: truncation must satisfy 2K - 1 >= 12 sigma");
  }
  const double inv = 1.0 / (8.0 * sigma * sigma);
  double sum = 0.0;
  for (long k = truncation; k >= 1; --k) {
    const double m = static_cast<double>(2 * k - 1);
    sum += std::exp(-m * m * inv) * cis_multiple(m, omega).real() / (m * m);
  }
  return 0.5 - 4.0 / kPi2 * sum;
}

double expectation_exact_oracle(const core::WellConfig& cfg,
                                const core::SuperpositionSpec& spec, double t) {
  cfg.validate();
  const auto& comps = spec.components();
  const double tau = t / cfg.time_unit();
  std::vector<Complex> amp;
  amp.reserve(comps.size());
  for (const auto& c : comps) {
    const double k = static_cast<double>(c.mode);
    amp.push_back(c.weight * std::polar(1.0, -specfun::reduce_signed(k * k * tau)));
  }
  const double k0 = static_cast<double>(spec.lowest_mode());
  // Consecutive modes: sin(k pi chi) by rotating e^{i k pi chi}.
  auto density = [&](double chi) {
    const double th = kPi * chi;
    const Complex step = std::polar(1.0, th);
    Complex rot = std::polar(1.0, k0 * th);
    Complex psi{0.0, 0.0};
    for (const Complex& a : amp) {
      psi += a * rot.imag();
      rot *= step;
    }
    return 2.0 * chi * std::norm(psi);
  };
  quad::Options opt;
  opt.rel_tol = 1e-12;
  opt.abs_tol = 1e-14;
  opt.max_panel = quad::quarter_wavelength(2.0 * static_cast<double>(spec.highest_mode()));
  return quad::integrate_or_throw(density, 0.0, 1.0, opt);
}

double position_matrix_element(long j, long k) {
  if (j < 1 || k < 1) throw DomainError("position_matrix_element: indices must be >= 1");
  if (j == k) return 0.5;
  if ((j - k) % 2 == 0) return 0.0;
  const double jd = static_cast<double>(j), kd = static_cast<double>(k);
  const double d = (jd - kd) * (jd + kd);
  return -8.0 * jd * kd / (kPi2 * d * d);
}

double expectation_matrix_elements(const core::WellConfig& cfg,
                                   const core::SuperpositionSpec& spec, double t) {
  cfg.validate();
  const double tau = t / cfg.time_unit();
  double sum = 0.0;
  for (const auto& a : spec.components()) {
    for (const auto& b : spec.components()) {
      const double ja = static_cast<double>(a.mode), kb = static_cast<double>(b.mode);
      // (E_j - E_k) t / hbar with integer (j^2 - k^2).
      const double phase = specfun::reduce_signed((ja - kb) * (ja + kb) * tau);
      sum += a.weight * b.weight * position_matrix_element(a.mode, b.mode) *
             std::cos(phase);
    }
  }
  return sum;
}

TimeSeries asymptotic_series(long delta, const std::vector<double>& phases, bool closed) {
  TimeSeries s;
  s.phases = phases;
  s.label = closed ? "asymptotic_closed" : "asymptotic_direct";
  s.values.reserve(phases.size());
  for (double w : phases) {
    s.values.push_back(closed ? expectation_total_closed(delta, w)
                              : expectation_total_direct(delta, w));
  }
  return s;
}

TimeSeries classical_series(const std::vector<double>& phases) {
  TimeSeries s;
  s.phases = phases;
  s.label = "classical";
  s.values.reserve(phases.size());
  for (double w : phases) s.values.push_back(classical_position_phase(w));
  return s;
}

Alignment align_time_shift(const TimeSeries& series_q, const TimeSeries& series_cl) {
  const auto& ph = series_q.phases;
  const std::size_t m = ph.size();
  if (m < 4 || series_cl.phases.size() != m || series_q.values.size() != m ||
      series_cl.values.size() != m) {
    throw AlignmentError("align_time_shift: series need a shared grid of >= 4 points");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (std::abs(ph[i] - series_cl.phases[i]) > 1e-12 * (1.0 + std::abs(ph[i]))) {
      throw AlignmentError("align_time_shift: phase grids differ");
    }
  }
  const double h = (ph.back() - ph.front()) / static_cast<double>(m - 1);
  for (std::size_t i = 1; i < m; ++i) {
    if (std::abs(ph[i] - ph[i - 1] - h) > 1e-9 * h) {
      throw AlignmentError("align_time_shift: phase grid must be uniform");
    }
  }
  auto spread = [](const std::vector<double>& v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi - *lo;
  };
  if (spread(series_q.values) <= 1e-14 || spread(series_cl.values) <= 1e-14) {
    throw AlignmentError("align_time_shift: constant series cannot be aligned");
  }

  const double period = h * static_cast<double>(m);
  const auto& cl = series_cl.values;
  // Periodic linear interpolation of the reference at phase offset s.
  auto shifted = [&](std::size_t i, double s) {
    double u = std::fmod(static_cast<double>(i) + s / h, static_cast<double>(m));
    if (u < 0.0) u += static_cast<double>(m);
    const auto j = static_cast<std::size_t>(u) % m;
    const double f = u - std::floor(u);
    return (1.0 - f) * cl[j] + f * cl[(j + 1) % m];
  };
  auto msd = [&](double s) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double d = series_q.values[i] - shifted(i, s);
      acc += d * d;
    }
    return acc / static_cast<double>(m);
  };

  constexpr int kSteps = 1000;
  const double ds = period / kSteps;
  int best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (int k = 0; k < kSteps; ++k) {
    const double v = msd(ds * k);
    if (v < best_val) {
      best_val = v;
      best = k;
    }
  }
  double s = ds * best;
  const double fm = msd(s - ds), f0 = best_val, fp = msd(s + ds);
  const double denom = fm - 2.0 * f0 + fp;
  if (denom > 0.0) {
    const double off = 0.5 * (fm - fp) / denom;
    if (std::abs(off) <= 1.0) {
      const double cand = s + off * ds;
      const double fc = msd(cand);
      if (fc <= f0) {
        s = cand;
        best_val = fc;
      }
    }
  }
  s = std::fmod(s, period);
  if (s > 0.5 * period) s -= period;
  if (s <= -0.5 * period) s += period;
  return {s, std::sqrt(std::max(0.0, best_val))};
}

}  // namespace isw::dyn
