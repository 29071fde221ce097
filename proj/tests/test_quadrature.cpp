#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "isw/errors.hpp"
#include "isw/quadrature.hpp"

namespace quad = isw::quad;

TEST_CASE("polynomials are integrated exactly") {
  const auto r = quad::integrate([](double x) { return x * x * x - 2.0 * x; }, -1.0, 2.0);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("oscillatory integrand with pre-split panels") {
  quad::Options opt;
  opt.max_panel = quad::quarter_wavelength(400.0);
  const auto r = quad::integrate(
      [](double x) { return std::pow(std::sin(400.0 * M_PI * x), 2); }, 0.0, 1.0, opt);
  CHECK(r.value == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("complex integrand") {
  const auto r = quad::integrate(
      [](double x) { return std::polar(1.0, 3.0 * x); }, 0.0, 1.0);
  const std::complex<double> want = (std::polar(1.0, 3.0) - 1.0) / std::complex<double>(0, 3);
  CHECK(std::abs(r.value - want) < 1e-14);
}

TEST_CASE("reversed limits flip the sign") {
  auto f = [](double x) { return std::exp(x); };
  CHECK(quad::integrate(f, 1.0, 0.0).value == doctest::Approx(1.0 - M_E).epsilon(1e-14));
  CHECK(quad::integrate(f, 0.5, 0.5).value == 0.0);
}

TEST_CASE("breakpoints tame an interior kink") {
  const std::vector<double> breaks{0.3};
  const auto r = quad::integrate([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, {}, breaks);
  CHECK(r.value == doctest::Approx(0.045 + 0.245).epsilon(1e-14));
  CHECK(r.evaluations == 30);
}

TEST_CASE("endpoint log singularity converges adaptively") {
  const auto r = quad::integrate([](double x) { return std::log(x); }, 0.0, 1.0);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("interval budget exhaustion is reported") {
  quad::Options opt;
  opt.max_intervals = 2;
  auto f = [](double x) { return std::sin(1.0 / (x + 1e-3)); };
  CHECK_FALSE(quad::integrate(f, 0.0, 1.0, opt).converged);
  CHECK_THROWS_AS(quad::integrate_or_throw(f, 0.0, 1.0, opt), isw::AccuracyError);
  CHECK_THROWS_AS(quad::integrate(f, 0.0, INFINITY), isw::DomainError);
}
