// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "isw/analysis.hpp"
#include "isw/asymptotics.hpp"
#include "isw/core.hpp"
#include "isw/dynamics.hpp"
#include "isw/oracles.hpp"
#include "isw/specfun.hpp"

using namespace isw;

namespace {

constexpr double kPi = 3.14159265358979323846;
const core::WellConfig kUnit = core::WellConfig::dimensionless();

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(const char* id, bool ok, const std::string& detail, double seconds, double budget) {
  const bool in_time = seconds < budget;
  if (!(ok && in_time)) ++failures;
  std::printf("[%s] %-6s %s | %.3f s (budget %.0f s)\n", ok && in_time ? "PASS" : "FAIL", id,
              detail.c_str(), seconds, budget);
}

std::string fmt(const char* f, double a = 0, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

// Relative error with a floor: |got - want| / max(|want|, floor).
double rel_err(double got, double want, double floor) {
  return std::abs(got - want) / std::max(std::abs(want), floor);
}

void criterion1() {
  Timer t;
  double worst = 0.0;
  for (long N = 1; N <= 200; ++N) {
    const double scale = 0.5 * static_cast<double>(N) * static_cast<double>(N + 1);
    for (int i = 0; i < 400; ++i) {
      const double y = 2.0 * kPi * (i + 0.5) / 400.0;
      const double d =
          std::abs(asym::dirichlet_weighted_sum(N, y) - oracle::dirichlet_brute(N, y)) / scale;
      worst = std::max(worst, d);
    }
  }
  report("C1", worst <= 1e-10, fmt("weighted cosine sum: max rel err %.3g (tol 1e-10)", worst),
         t.seconds(), 5.0);
}

void criterion2() {
  Timer t;
  double worst = 0.0;
  bool fallback = false;
  for (long delta : {1L, 5L, 20L, 40L}) {
    for (int i = 0; i < 50; ++i) {
      const double w = 2.0 * kPi * (i + 0.5) / 50.0;
      const auto c = dyn::expectation_total_closed_detail(delta, w);
      fallback = fallback || c.used_fallback;
      worst = std::max(worst, std::abs(c.value - dyn::expectation_total_direct(delta, w)));
    }
  }
  report("C2", worst <= 1e-8 && !fallback,
         fmt("closed <x> vs direct, N = 2,10,40,80: max |diff| %.3g L (tol 1e-8)", worst),
         t.seconds(), 10.0);
}

void criterion3() {
  Timer t;
  bool bound = true, decreasing = true, walls = true;
  double prev = INFINITY;
  std::string detail = "interior dev";
  for (long delta : {10L, 40L, 100L}) {
    const double m = 2.0 * delta + 1.0;
    const double dev = analysis::interior_deviation(kUnit, delta);
    bound = bound && dev <= 6.0 / m;
    decreasing = decreasing && dev < prev;
    prev = dev;
    detail += fmt(" D=%g: %.4g (<= %.4g)", static_cast<double>(delta), dev, 6.0 / m);
    const double left = asym::superposition_density_closed_form(kUnit, delta, 1e-12);
    const double right = asym::superposition_density_closed_form(kUnit, delta, 1.0 - 1e-12);
    walls = walls && rel_err(left, 4.0 * delta + 1.0, 0.0) <= 1e-6 &&
            rel_err(right, (2.0 * delta - 1.0) / m, 0.0) <= 1e-6;
  }
  detail += decreasing ? "; decreasing" : "; NOT decreasing";
  detail += walls ? "; wall limits ok" : "; wall limits off";
  report("C3", bound && decreasing && walls, detail, t.seconds(), 5.0);
}

void criterion4() {
  Timer t;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<long> pick_n(1, 60), pick_a(1, 12);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double worst_eig = 0.0, worst_int = 0.0;
  for (int i = 0; i < 20; ++i) {
    const long n = pick_n(rng), a = pick_a(rng);
    const double Q = 0.98 * kPi * (2.0 * n + a) * unit(rng);
    const auto e = asym::fourier_eigenstate(core::ModeIndex(n), Q);
    const auto eo = oracle::fourier_eigenstate_quad(n, Q);
    const auto f = asym::fourier_interference(core::ModeIndex(n), a, Q);
    const auto fo = oracle::fourier_interference_quad(n, a, Q);
    worst_eig = std::max(worst_eig, std::abs(e - eo) / std::abs(eo));
    worst_int = std::max(worst_int, std::abs(f - fo) / std::abs(fo));
  }
  report("C4", worst_eig <= 1e-8 && worst_int <= 1e-8,
         fmt("Fourier coefficients vs quadrature, 20 triples: eigenstate %.3g, interference "
             "%.3g (tol 1e-8)",
             worst_eig, worst_int),
         t.seconds(), 30.0);
}

double envelope_excess(long n, long alpha) {
  double worst = -INFINITY;
  const long count = 20 * n + 2000;
  for (long i = 0; i < count; ++i) {
    const double x = (i + 0.5) / static_cast<double>(count);
    const double qm = core::exact_interference_term(kUnit, core::ModeIndex(n), alpha, x);
    const double as = asym::asymptotic_interference_density(kUnit, core::ModeIndex(n), alpha, x);
    worst = std::max(worst, std::abs(qm) - std::abs(as));
  }
  return worst;
}

void criterion5() {
  Timer t;
  const double a1 = envelope_excess(15, 1), a4 = envelope_excess(15, 4);
  const double b1 = envelope_excess(500, 1), b4 = envelope_excess(500, 4);
  const bool ok = a1 <= 0.4 && a4 <= 0.4 && b1 < 0.05 && b4 < 0.05;
  report("C5", ok,
         fmt("max(|qm|-|asym|): n=15 a=1 %.4g, a=4 %.4g (<= 0.4); n=500 a=1 %.4g", a1, a4, b1) +
             fmt(", a=4 %.4g (< 0.05)", b4),
         t.seconds(), 5.0);
}

void criterion6() {
  Timer t;
  const auto phases = dyn::uniform_phase_grid(1000);
  const auto cl = dyn::classical_series(phases);
  std::vector<double> rms;
  for (long delta : {1L, 5L, 20L}) {
    rms.push_back(dyn::align_time_shift(dyn::asymptotic_series(delta, phases), cl).rms);
  }
  const bool ok = rms[0] > rms[1] && rms[1] > rms[2] && rms[2] < 0.05;
  report("C6", ok,
         fmt("aligned RMS vs classical: D=1 %.4g, D=5 %.4g, D=20 %.4g (< 0.05, decreasing)",
             rms[0], rms[1], rms[2]),
         t.seconds(), 10.0);
}

void criterion7() {
  Timer t;
  const long n = 400, delta = 20;
  const core::SuperpositionSpec spec(core::ModeIndex(n), core::Equiprobable{delta});
  double worst = 0.0;
  const int points = 200;
  for (int i = 0; i < points; ++i) {
    const double w = 2.0 * kPi * i / points;
    const double time = w / (kPi * kPi * n);  // omega = pi v t / L with v = pi n
    const double exact = dyn::expectation_exact_oracle(kUnit, spec, time);
    worst = std::max(worst, std::abs(exact - dyn::expectation_total_direct(delta, w)));
  }
  report("C7", worst <= 0.03,
         fmt("exact spectrum vs linearized <x>, n=400 D=20: max |diff| %.4g L (tol 0.03)",
             worst),
         t.seconds(), 60.0);
}

struct Worst {
  double rel = 0.0;  // worst error among points that fail the absolute test
  double abs = 0.0;
  bool ok = true;
  void add(double got, double want) {
    const double d = std::abs(got - want);
    abs = std::max(abs, d);
    if (d <= 1e-12) return;
    const double r = d / std::abs(want);
    rel = std::max(rel, r);
    ok = ok && r <= 1e-10;
  }
  void add(specfun::Complex got, specfun::Complex want) {
    const double d = std::abs(got - want);
    abs = std::max(abs, d);
    if (d <= 1e-12) return;
    const double r = d / std::abs(want);
    rel = std::max(rel, r);
    ok = ok && r <= 1e-10;
  }
};

void criterion8() {
  Timer t;
  Worst si, ci, ei, cl, li, lg;
  for (int i = 0; i < 1000; ++i) {
    const double y = 60.0 * (i + 0.5) / 1000.0;
    si.add(specfun::sine_integral(y), oracle::sine_integral_quad(y));
    si.add(specfun::sine_integral(-y), -oracle::sine_integral_quad(y));
    ci.add(specfun::cosine_integral(y), oracle::cosine_integral_quad(y));
    const auto e = specfun::exp_integral_imag(y);
    ei.add(e, specfun::Complex(oracle::cosine_integral_quad(y), oracle::sine_integral_quad(y)));
    const double th = 2.0 * kPi * (i + 0.5) / 1000.0;
    cl.add(specfun::clausen2(th), oracle::clausen2_quad(th));
    li.add(specfun::dilog_unit_circle(th), oracle::dilog_quad(th));
    lg.add(specfun::log_unit_circle(th), oracle::log1_direct(th));
  }
  double lerch = 0.0;
  for (long N : {1L, 2L, 5L, 10L, 25L, 50L, 100L}) {
    for (int s : {1, 2}) {
      for (int i = 0; i < 40; ++i) {
        const double th = 2.0 * kPi * (i + 0.5) / 40.0;
        lerch = std::max(lerch, std::abs(oracle::lerch_identity_residual(th, s, N)));
      }
    }
  }
  const bool ok = si.ok && ci.ok && ei.ok && cl.ok && li.ok && lg.ok && lerch <= 1e-9;
  std::string detail = fmt("max abs err: Si %.2g Ci %.2g Ei %.2g Cl2 %.2g", si.abs, ci.abs, ei.abs,
                           cl.abs);
  detail += fmt(" Li2 %.2g log %.2g (rel 1e-10 or abs 1e-12); Lerch identity %.2g (tol 1e-9)",
                li.abs, lg.abs, lerch);
  report("C8", ok, detail, t.seconds(), 30.0);
}

void criterion9() {
  Timer t;
  const core::SuperpositionSpec eig(core::ModeIndex(200), core::Equiprobable{0});
  const double d200 = analysis::coarse_grained_comparison(kUnit, eig, core::CoarseGrainSpec(0.05, 1.0));
  double worst_si = 0.0;
  std::string si_detail;
  for (long n : {5L, 15L}) {
    const double eps = 1.0 / std::sqrt(static_cast<double>(n));
    const auto grid = core::SpatialGrid::uniform(4001, 1.0, true);
    const core::ModeIndex mode(n);
    const auto exact = core::sample(
        grid, [&](double x) { return core::exact_eigenstate_density(kUnit, mode, x); },
        core::DensityMethod::ExactEigenstate);
    const auto cg = core::coarse_grain(exact, core::CoarseGrainSpec(eps, 1.0));
    const auto si = core::sample(
        grid, [&](double x) { return asym::asymptotic_eigenstate_density(kUnit, mode, x); },
        core::DensityMethod::AsymptoticEigenstate);
    const double d = analysis::l1_distance(si, cg);
    worst_si = std::max(worst_si, d);
    si_detail += fmt(" n=%g: %.4g", static_cast<double>(n), d);
  }
  report("C9", d200 < 0.02 && worst_si < 0.05,
         fmt("L1 cg(n=200, eps=L/20) vs uniform %.4g (< 0.02); Si vs cg exact (eps=L/sqrt n)",
             d200) +
             si_detail + " (< 0.05)",
         t.seconds(), 30.0);
}

void macroscopic() {
  Timer t;
  const long delta = 100000;
  const double dev = analysis::interior_deviation(kUnit, delta);
  const double bound = 6.0 / (2.0 * delta + 1.0);
  report("MACRO", dev <= bound,
         fmt("closed form at D=1e5: interior dev %.4g (<= %.4g), scaled (2D+1)*dev = %.4g", dev,
             bound, dev * (2.0 * delta + 1.0)),
         t.seconds(), 1.0);
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> checks = {criterion1, criterion2, criterion3,
                                                     criterion4, criterion5, criterion6,
                                                     criterion7, criterion8, criterion9,
                                                     macroscopic};
  for (const auto& c : checks) {
    try {
      c();
    } catch (const std::exception& e) {
      ++failures;
      std::printf("[FAIL] exception: %s\n", e.what());
    }
  }
  std::printf("%d criterion line(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
