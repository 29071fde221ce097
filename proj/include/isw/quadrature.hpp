#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature.
//
// Intervals are kept in a max-heap keyed on their error estimate and the worst
// one is bisected until the summed estimate meets max(abs_tol, rel_tol*|I|).
// Oscillatory integrands should be pre-split with `max_panel` so that each
// starting panel spans at most a quarter wavelength of the fastest mode.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <queue>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "isw/errors.hpp"

namespace isw::quad {

struct Options {
  double rel_tol = 1e-13;
  double abs_tol = 1e-15;
  int max_intervals = 200000;
  // Initial panel width cap; <= 0 disables pre-splitting.
  double max_panel = 0.0;
};

template <class T>
struct Result {
  T value{};
  double error = 0.0;
  long evaluations = 0;
  bool converged = false;
};

namespace detail {

// Abscissae of the 15-point Kronrod rule on [-1,1] (non-negative half); the
// odd-indexed entries are the 7-point Gauss nodes.
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <class T>
struct Panel {
  double a, b;
  T value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class T, class F>
Panel<T> kronrod15(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const T fc = f(c);
  T kronrod = fc * kWgk[7];
  T gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const T f1 = f(c - dx);
    const T f2 = f(c + dx);
    const T s = f1 + f2;
    kronrod += s * kWgk[j];
    if (j % 2 == 1) gauss += s * kWg[j / 2];
  }
  kronrod *= h;
  gauss *= h;
  // Plain |K - G|; the QUADPACK rescaling is too optimistic for the
  // near-cancelling oscillatory integrands used here.
  return {a, b, kronrod, magnitude(kronrod - gauss)};
}

}  // namespace detail

// Integrates f over [a, b]. `breaks` are interior points at which the initial
// partition is split (e.g. known kinks or near-singularities).
template <class F>
auto integrate(F&& f, double a, double b, const Options& opt = {},
               std::span<const double> breaks = {})
    -> Result<std::decay_t<decltype(f(a))>> {
  using T = std::decay_t<decltype(f(a))>;
  Result<T> out;
  if (!(std::isfinite(a) && std::isfinite(b))) {
    throw DomainError("quad::integrate: non-finite limits");
  }
  if (a == b) {
    out.converged = true;
    return out;
  }
  double sign = 1.0;
  if (b < a) {
    std::swap(a, b);
    sign = -1.0;
  }

  std::vector<double> nodes{a};
  for (double x : breaks) {
    if (x > a && x < b) nodes.push_back(x);
  }
  nodes.push_back(b);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  if (opt.max_panel > 0.0) {
    std::vector<double> split{nodes.front()};
    for (std::size_t i = 1; i < nodes.size(); ++i) {
      const double lo = nodes[i - 1], hi = nodes[i];
      const auto pieces =
          static_cast<long>(std::ceil((hi - lo) / opt.max_panel));
      for (long k = 1; k < pieces; ++k) {
        split.push_back(lo + (hi - lo) * static_cast<double>(k) /
                                 static_cast<double>(pieces));
      }
      split.push_back(hi);
    }
    nodes = std::move(split);
  }

  std::vector<detail::Panel<T>> storage;
  storage.reserve(nodes.size() * 2);
  T total{};
  double err = 0.0;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    storage.push_back(detail::kronrod15<T>(f, nodes[i - 1], nodes[i]));
    total += storage.back().value;
    err += storage.back().error;
  }
  std::priority_queue<detail::Panel<T>> heap(std::less<detail::Panel<T>>{},
                                           std::move(storage));
  long intervals = static_cast<long>(heap.size());
  out.evaluations = 15 * intervals;

  auto target = [&] {
    return std::max(opt.abs_tol, opt.rel_tol * detail::magnitude(total));
  };
  while (err > target() && intervals < opt.max_intervals) {
    auto worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // interval at fp resolution
    heap.pop();
    auto left = detail::kronrod15<T>(f, worst.a, mid);
    auto right = detail::kronrod15<T>(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++intervals;
    out.evaluations += 30;
  }
  // Re-sum to shed the drift of the incremental updates.
  T resum{};
  double errsum = 0.0;
  while (!heap.empty()) {
    resum += heap.top().value;
    errsum += heap.top().error;
    heap.pop();
  }
  out.value = resum * sign;
  out.error = errsum;
  out.converged =
      errsum <= std::max(opt.abs_tol, opt.rel_tol * detail::magnitude(resum));
  return out;
}

// Same as integrate() but throws AccuracyError when the tolerance is missed.
template <class F>
auto integrate_or_throw(F&& f, double a, double b, const Options& opt = {},
                        std::span<const double> breaks = {}) {
  auto r = integrate(std::forward<F>(f), a, b, opt, breaks);
  if (!r.converged) {
    throw AccuracyError("quadrature did not converge (error estimate " +
                        std::to_string(r.error) + ")");
  }
  return r.value;
}

// Panel width equal to a quarter wavelength of sin(k*pi*x) on a unit box.
inline double quarter_wavelength(double highest_mode) {
  return highest_mode > 0.0 ? 0.5 / highest_mode : 0.0;
}

}  // namespace isw::quad
