#include <doctest.h>

#include <cmath>

#include "isw/analysis.hpp"
#include "isw/asymptotics.hpp"
#include "isw/errors.hpp"

using namespace isw;
using core::ModeIndex;

namespace {
const core::WellConfig kUnit{};
}

TEST_CASE("boundary-layer width") {
  CHECK(analysis::boundary_layer_width(kUnit, 0) == 0.0);
  double prev = INFINITY;
  for (long d : {10L, 20L, 40L, 80L, 160L}) {
    const double w = analysis::boundary_layer_width(kUnit, d);
    CHECK(w <= prev);
    // Pointwise threshold on the csc^2 tail: width ~ L / sqrt(Delta).
    CHECK(w * std::sqrt(double(d)) > 1.0);
    CHECK(w * std::sqrt(double(d)) < 5.0);
    // Just inside the layer the threshold is violated.
    CHECK(std::abs(asym::superposition_density_closed_form(kUnit, d, w * (1 - 1e-9)) - 1) >= 0.1 - 1e-9);
    prev = w;
  }
  const double ratio =
      analysis::boundary_layer_width(kUnit, 10) / analysis::boundary_layer_width(kUnit, 100);
  CHECK(ratio == doctest::Approx(std::sqrt(10.0)).epsilon(0.35));
  CHECK_THROWS_AS(analysis::boundary_layer_width(kUnit, 1, 0.1), isw::NoConvergenceError);
  CHECK_THROWS_AS(analysis::boundary_layer_width(kUnit, 10, 1.5), isw::DomainError);
  const core::WellConfig w2{1.0, 2.0, 1.0};
  CHECK(analysis::boundary_layer_width(w2, 10) == doctest::Approx(2 * analysis::boundary_layer_width(kUnit, 10)));
}

TEST_CASE("interior deviation") {
  CHECK(analysis::interior_deviation(kUnit, 0) == 0.0);
  const double c = 8 + 4 * std::sqrt(2.0);
  double prev = INFINITY;
  for (long d : {5L, 10L, 40L, 100L}) {
    const double v = analysis::interior_deviation(kUnit, d);
    CHECK(v < prev);
    CHECK(v <= c / (2.0 * d + 1));
    CHECK(v * (2.0 * d + 1) > 0.8 * c);
    prev = v;
  }
  // Narrow window away from L/4 sees a smaller csc^2.
  CHECK(analysis::interior_deviation(kUnit, 40, {0.45, 0.55}) < analysis::interior_deviation(kUnit, 40));
  CHECK_THROWS_AS(analysis::interior_deviation(kUnit, 40, {0.6, 0.5}), isw::DomainError);
}

TEST_CASE("normalization defect") {
  CHECK(analysis::norm_defect(kUnit, 0) == 0.0);
  const double a = analysis::norm_defect(kUnit, 5), b = analysis::norm_defect(kUnit, 20),
               c = analysis::norm_defect(kUnit, 80);
  CHECK(a < b);
  CHECK(b < c);
  CHECK(c < 2.0);
}

TEST_CASE("coarse-grained comparisons") {
  const core::SuperpositionSpec eig(ModeIndex(200), core::Equiprobable{0});
  CHECK(analysis::coarse_grained_comparison(kUnit, eig, core::CoarseGrainSpec(0.05, 1.0)) < 0.02);
  // The closed form carries a doubled interference weight: far from the
  // coarse-grained exact density.
  const core::SuperpositionSpec eq(ModeIndex(200), core::Equiprobable{10});
  CHECK(analysis::coarse_grained_comparison(kUnit, eq, core::CoarseGrainSpec(0.02, 1.0)) > 1.0);

  const auto g = core::SpatialGrid::uniform(101, 1.0, true);
  const auto p = core::sample(g, [](double x) { return 1 + x * x; }, core::DensityMethod::Custom);
  CHECK(analysis::l1_distance(p, p) == 0.0);
  const auto q = core::sample(g, [](double x) { return 2 + x * x; }, core::DensityMethod::Custom);
  CHECK(analysis::l1_distance(p, q) == doctest::Approx(1.0));
  const auto other = core::sample(core::SpatialGrid::uniform(11, 1.0, true), [](double) { return 1.0; },
                                  core::DensityMethod::Custom);
  CHECK_THROWS_AS(analysis::l1_distance(p, other), isw::ConstraintError);
}

TEST_CASE("convergence suite") {
  analysis::SuiteConfig cfg;
  cfg.deltas = {10, 40, 100};
  const auto r1 = analysis::run_convergence_suite(cfg);
  REQUIRE(r1.metrics.size() == 3);
  for (std::size_t i = 1; i < 3; ++i) {
    CHECK(r1.metrics[i].interior_sup_dev < r1.metrics[i - 1].interior_sup_dev);
    CHECK(*r1.metrics[i].boundary_layer_width <= *r1.metrics[i - 1].boundary_layer_width);
  }
  for (const auto& m : r1.metrics) {
    CHECK(m.interior_sup_dev >= 0);
    CHECK(m.norm_defect >= 0);
    REQUIRE(m.rms_dynamics.has_value());
  }
  const auto r2 = analysis::run_convergence_suite(cfg);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(r1.metrics[i].interior_sup_dev == r2.metrics[i].interior_sup_dev);
    CHECK(r1.metrics[i].boundary_layer_width == r2.metrics[i].boundary_layer_width);
    CHECK(r1.metrics[i].boundary_layer_width.has_value());
    CHECK(r1.metrics[i].norm_defect == r2.metrics[i].norm_defect);
    CHECK(*r1.metrics[i].rms_dynamics == *r2.metrics[i].rms_dynamics);
  }

  analysis::SuiteConfig dyn_cfg;
  dyn_cfg.deltas = {1, 5, 20};
  const auto r3 = analysis::run_convergence_suite(dyn_cfg);
  CHECK(*r3.metrics[1].rms_dynamics < *r3.metrics[0].rms_dynamics);
  CHECK(*r3.metrics[2].rms_dynamics < *r3.metrics[1].rms_dynamics);
  // No layer edge inside 0.95 L at small Delta.
  CHECK_FALSE(r3.metrics[0].boundary_layer_width.has_value());
  CHECK(r3.metrics[2].boundary_layer_width.has_value());

  analysis::SuiteConfig empty;
  CHECK_THROWS_AS(analysis::run_convergence_suite(empty), isw::ConstraintError);
}
