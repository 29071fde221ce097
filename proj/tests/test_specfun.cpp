#include <doctest.h>

#include <cmath>

#include "isw/errors.hpp"
#include "isw/oracles.hpp"
#include "isw/specfun.hpp"

using namespace isw::specfun;
namespace oracle = isw::oracle;

namespace {
bool close(double got, double want, double rel = 1e-10, double abs = 1e-12) {
  return Tolerance(rel, abs).accepts(got, want);
}
}  // namespace

TEST_CASE("tolerance construction") {
  CHECK_THROWS_AS(Tolerance(0.0, 0.0), isw::ConstraintError);
  CHECK_THROWS_AS(Tolerance(-1.0, 0.0), isw::ConstraintError);
  CHECK(Tolerance::relative(1e-3).accepts(1000.5, 1000.0));
  CHECK_FALSE(Tolerance::absolute(1e-3).accepts(1000.5, 1000.0));
}

TEST_CASE("angle reduction") {
  CHECK(reduce_signed(kPi) == doctest::Approx(kPi));
  CHECK(reduce_signed(-kPi) == doctest::Approx(kPi));
  CHECK(std::abs(reduce_signed(1e6 * kTwoPi)) < 1e-9);
  CHECK(reduce_angle(-0.5) == doctest::Approx(kTwoPi - 0.5));
  CHECK_THROWS_AS(reduce_signed(NAN), isw::DomainError);
}

TEST_CASE("sine and cosine integral reference values") {
  CHECK(close(sine_integral(1.0), 0.946083070367183015));
  CHECK(close(sine_integral(kPi), 1.851937051982466170));
  CHECK(close(sine_integral(10.0), 1.658347594218874049));
  CHECK(close(cosine_integral(1.0), 0.337403922900968135));
  CHECK(close(cosine_integral(10.0), -0.045456433004455373));
  CHECK(sine_integral(0.0) == 0.0);
  CHECK(close(sine_integral(1e7), kPi / 2, 1e-7));
  CHECK_THROWS_AS(cosine_integral(0.0), isw::DomainError);
  CHECK_THROWS_AS(cosine_integral(-1.0), isw::DomainError);
}

TEST_CASE("sine integral is odd across the crossover") {
  for (double y : {0.1, 5.99, 6.0, 6.01, 40.0}) {
    CHECK(sine_integral(-y) == -sine_integral(y));
  }
  // Continuity at the series/continued-fraction switch.
  CHECK(close(sine_integral(6.0 - 1e-12), sine_integral(6.0 + 1e-12), 1e-11));
  CHECK(close(cosine_integral(6.0 - 1e-12), cosine_integral(6.0 + 1e-12), 1e-11));
}

TEST_CASE("Ei on the imaginary axis") {
  const Complex e = exp_integral_imag(2.5);
  CHECK(e.real() == doctest::Approx(cosine_integral(2.5)).epsilon(1e-15));
  CHECK(e.imag() == doctest::Approx(sine_integral(2.5)).epsilon(1e-15));
  CHECK(exp_integral_imag(-2.5) == std::conj(e));
  CHECK_THROWS_AS(exp_integral_imag(0.0), isw::PoleError);
}

TEST_CASE("Clausen function special values") {
  CHECK(close(clausen2(kPi / 2), kCatalan));
  CHECK(close(clausen2(kPi / 3), 1.014941606409653625));
  CHECK(clausen2(0.0) == 0.0);
  CHECK(std::abs(clausen2(kPi)) < 1e-15);
  CHECK(close(clausen2(-1.0), -clausen2(1.0)));
  CHECK(close(clausen2(1.0 + kTwoPi), clausen2(1.0)));
}

TEST_CASE("dilogarithm and Li1 on the unit circle") {
  CHECK(close(dilog_unit_circle(0.0).real(), kPi * kPi / 6));
  CHECK(close(dilog_unit_circle(kPi).real(), -kPi * kPi / 12));
  CHECK(close(dilog_unit_circle(kPi / 2).imag(), kCatalan));
  // -ln(1 - (-1)) = -ln 2.
  CHECK(close(log_unit_circle(kPi).real(), -std::log(2.0)));
  CHECK(std::abs(log_unit_circle(kPi).imag()) < 1e-15);
  CHECK_THROWS_AS(log_unit_circle(0.0), isw::PoleError);
  CHECK_THROWS_AS(log_unit_circle(kTwoPi), isw::PoleError);
}

TEST_CASE("specfun matches independent oracles on grids") {
  for (int i = 1; i <= 200; ++i) {
    const double y = 0.25 * i;
    CHECK(close(sine_integral(y), oracle::sine_integral_quad(y)));
    CHECK(close(cosine_integral(y), oracle::cosine_integral_quad(y)));
  }
  for (int i = 1; i < 100; ++i) {
    const double t = kTwoPi * i / 100.0;
    CHECK(close(clausen2(t), oracle::clausen2_quad(t)));
    CHECK(Tolerance(1e-10, 1e-12).accepts(dilog_unit_circle(t), oracle::dilog_quad(t)));
    CHECK(Tolerance(1e-10, 1e-12).accepts(log_unit_circle(t), oracle::log1_direct(t)));
  }
}

TEST_CASE("Lerch transcendent closes the truncation identity") {
  for (long N : {1L, 2L, 10L, 57L, 100L}) {
    for (int s : {1, 2}) {
      for (double t : {1e-3, 0.5, 2.0, kPi, -2.7}) {
        CHECK(std::abs(oracle::lerch_identity_residual(t, s, N)) < 1e-9);
      }
    }
  }
}

TEST_CASE("Lerch domain and refusal radius") {
  CHECK_THROWS_AS(lerch_unit_circle(1.0, 3, 1), isw::DomainError);
  CHECK_THROWS_AS(lerch_unit_circle(1.0, 1, 0), isw::DomainError);
  CHECK_THROWS_AS(lerch_unit_circle(0.5e-6, 1, 5), isw::PoleError);
  // s = 2 converges on the whole circle: Phi(1, 2, 1) = zeta(2).
  CHECK(close(lerch_unit_circle(0.0, 2, 1).real(), kPi * kPi / 6, 1e-12));
  // Phi(-1, 1, 1) = ln 2.
  CHECK(close(lerch_unit_circle(kPi, 1, 1).real(), std::log(2.0), 1e-12));
}

TEST_CASE("truncated polylog") {
  const Complex v = truncated_polylog(0.7, 2, 3);
  Complex want{};
  for (int k = 1; k <= 3; ++k) want += std::polar(1.0, 0.7 * k) / double(k * k);
  CHECK(std::abs(v - want) < 1e-15);
  CHECK_THROWS_AS(truncated_polylog(0.7, 2, 0), isw::DomainError);
}
