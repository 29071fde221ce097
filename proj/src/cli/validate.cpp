#include "isw/cli/validate.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "isw/asymptotics.hpp"
#include "isw/core.hpp"
#include "isw/dynamics.hpp"
#include "isw/oracles.hpp"
#include "isw/specfun.hpp"

namespace isw::cli {

namespace {

using specfun::kPi;
using specfun::kTwoPi;

class Checker {
 public:
  Checker(std::string name, double tol) { check_.name = std::move(name), check_.tolerance = tol; }
  // err is already normalized (relative or scaled absolute).
  void add(double err) {
    ++check_.samples;
    if (!(err <= check_.max_error)) check_.max_error = std::isnan(err) ? INFINITY : err;
  }
  Check done() {
    check_.passed = check_.samples > 0 && check_.max_error <= check_.tolerance;
    return check_;
  }

 private:
  Check check_;
};

double rel_or_abs(double got, double want, double abs_floor) {
  const double d = std::abs(got - want);
  return std::min(d / std::max(std::abs(want), 1e-300), d / abs_floor);
}

double rel_or_abs(specfun::Complex got, specfun::Complex want, double abs_floor) {
  const double d = std::abs(got - want);
  return std::min(d / std::max(std::abs(want), 1e-300), d / abs_floor);
}

void specfun_suite(std::vector<Check>& out, double p) {
  // rel 1e-10 or abs 1e-12: normalized so that 1e-10 is the pass line.
  constexpr double kRel = 1e-10;
  auto norm = [](auto got, auto want) { return rel_or_abs(got, want, 1e-2); };
  Checker si("specfun.sine_integral", kRel), ci("specfun.cosine_integral", kRel);
  for (int i = 1; i <= 60; ++i) {
    const double y = 0.37 * i;
    si.add(norm(specfun::sine_integral(y) * (1 + p), oracle::sine_integral_quad(y)));
    ci.add(norm(specfun::cosine_integral(y) * (1 + p), oracle::cosine_integral_quad(y)));
  }
  out.push_back(si.done());
  out.push_back(ci.done());
  Checker cl("specfun.clausen2", kRel), li2("specfun.dilog_unit_circle", kRel),
      li1("specfun.log_unit_circle", kRel);
  for (int i = 1; i < 60; ++i) {
    const double t = kTwoPi * i / 60.0;
    cl.add(norm(specfun::clausen2(t) * (1 + p), oracle::clausen2_quad(t)));
    li2.add(norm(specfun::dilog_unit_circle(t) * (1 + p), oracle::dilog_quad(t)));
    li1.add(norm(specfun::log_unit_circle(t) * (1 + p), oracle::log1_direct(t)));
  }
  out.push_back(cl.done());
  out.push_back(li2.done());
  out.push_back(li1.done());
  Checker lerch("specfun.lerch_truncation_identity", 1e-9);
  for (long N : {1L, 7L, 30L, 100L}) {
    for (int s : {1, 2}) {
      for (double t : {0.4, 2.0, 3.1, -1.3}) {
        const auto li = s == 1 ? specfun::log_unit_circle(t) : specfun::dilog_unit_circle(t);
        lerch.add(std::abs(oracle::lerch_identity_residual(t, s, N) + p * li));
      }
    }
  }
  out.push_back(lerch.done());
}

void sums_suite(std::vector<Check>& out, double p) {
  Checker dir("sums.dirichlet_closed_vs_brute", 1e-10);
  for (long N = 1; N <= 200; N += 7) {
    const double scale = 0.5 * static_cast<double>(N) * static_cast<double>(N + 1);
    for (int i = 1; i <= 40; ++i) {
      const double y = kTwoPi * i / 41.0;
      const double closed = asym::dirichlet_weighted_sum(N, y) + p * scale;
      dir.add(std::abs(closed - oracle::dirichlet_brute(N, y)) / scale);
    }
  }
  out.push_back(dir.done());
  Checker ident("sums.density_identity", 1e-12);
  const core::WellConfig unit{};
  for (long d : {1L, 5L, 20L, 100L}) {
    for (int i = 0; i <= 50; ++i) {
      const double x = i / 50.0;
      const double want = std::abs(1.0 + 4.0 * oracle::dirichlet_brute(2 * d, kPi * x) /
                                             static_cast<double>(2 * d + 1));
      const double got = asym::superposition_density_closed_form(unit, d, x) * (1 + p);
      ident.add(std::abs(got - want) / std::max(1.0, want));
    }
  }
  out.push_back(ident.done());
}

void fourier_suite(std::vector<Check>& out, double p) {
  Checker fe("fourier.eigenstate_vs_quadrature", 1e-8), fi("fourier.interference_vs_quadrature", 1e-8);
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> pick_n(1, 60), pick_a(0, 12);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int k = 0; k < 10; ++k) {
    const long n = pick_n(rng), a = pick_a(rng);
    const double Q = 0.98 * unit(rng) * kPi * static_cast<double>(2 * n + a);
    const auto want_e = oracle::fourier_eigenstate_quad(n, Q);
    fe.add(std::abs(asym::fourier_eigenstate(core::ModeIndex(n), Q) * (1 + p) - want_e) /
           std::abs(want_e));
    const auto want_i = oracle::fourier_interference_quad(n, a, Q);
    fi.add(std::abs(asym::fourier_interference(core::ModeIndex(n), a, Q) * (1 + p) - want_i) /
           std::abs(want_i));
  }
  out.push_back(fe.done());
  out.push_back(fi.done());
  Checker ei("fourier.ei_density_vs_inverse_transform", 1e-8);
  const core::WellConfig cfg{};
  for (auto [n, a] : {std::pair{15L, 1L}, std::pair{50L, 5L}}) {
    for (int i = 1; i < 10; ++i) {
      const double x = i / 10.0;
      const double got = asym::asymptotic_interference_density(cfg, core::ModeIndex(n), a, x);
      ei.add(std::abs(got * (1 + p) - oracle::interference_inverse_transform(n, a, x)));
    }
  }
  out.push_back(ei.done());
}

void dynamics_suite(std::vector<Check>& out, double p) {
  Checker cd("dynamics.closed_vs_direct", 1e-8), pr("dynamics.printed_vs_direct", 1e-8);
  for (long d : {1L, 5L, 20L, 40L}) {
    const double scale = 2.0 / (kPi * kPi * static_cast<double>(2 * d + 1));
    for (int i = 0; i < 25; ++i) {
      const double w = 0.05 + kTwoPi * i / 25.0;
      const double direct = dyn::expectation_total_direct(d, w);
      cd.add(std::abs(dyn::expectation_total_closed(d, w) * (1 + p) - direct));
      const double printed = 0.5 + scale * dyn::st_closed_printed(2 * d, w).real();
      pr.add(std::abs(printed * (1 + p) - direct));
    }
  }
  out.push_back(cd.done());
  out.push_back(pr.done());
  Checker ex("dynamics.exact_oracle_vs_matrix_elements", 1e-9);
  const core::WellConfig cfg{};
  const core::SuperpositionSpec spec(core::ModeIndex(100), core::Equiprobable{5});
  for (double t : {0.0, 1e-4, 3e-3}) {
    ex.add(std::abs(dyn::expectation_exact_oracle(cfg, spec, t) * (1 + p) -
                    dyn::expectation_matrix_elements(cfg, spec, t)));
  }
  out.push_back(ex.done());
}

}  // namespace

bool ValidationReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return !checks.empty();
}

nlohmann::json ValidationReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["passed"] = passed();
  j["seconds"] = seconds;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name},
                           {"samples", c.samples},
                           {"max_error", c.max_error},
                           {"tolerance", c.tolerance},
                           {"passed", c.passed}});
  }
  return j;
}

ValidationReport run_validation(const std::string& suite, double perturb) {
  const std::map<std::string, std::function<void(std::vector<Check>&, double)>> suites{
      {"specfun", specfun_suite},
      {"sums", sums_suite},
      {"fourier", fourier_suite},
      {"dynamics", dynamics_suite}};
  if (suite != "all" && !suites.count(suite)) {
    throw std::invalid_argument("unknown validation suite '" + suite + "'");
  }
  const auto t0 = std::chrono::steady_clock::now();
  ValidationReport r;
  r.suite = suite;
  for (const auto& [name, fn] : suites) {
    if (suite == "all" || suite == name) fn(r.checks, perturb);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace isw::cli
