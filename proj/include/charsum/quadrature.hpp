#pragma once

// Gauss-Legendre and adaptive Gauss-Kronrod (G7/K15) quadrature.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <string>
#include <span>
#include <vector>

#include "charsum/errors.hpp"

namespace charsum::quad {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached rule; n in [2, 64].
const GaussLegendre& gauss_legendre(int n);

/// Fixed-order Gauss-Legendre on [a, b].
template <class F>
auto integrate_gl(F&& f, double a, double b, const GaussLegendre& rule) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  decltype(f(mid)) sum{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return sum * half;
}

namespace detail {

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

template <class T>
double magnitude(const T& v) {
  return std::abs(v);
}

}  // namespace detail

template <class T>
struct PanelResult {
  T value{};
  double error = 0.0;
};

/// One G7/K15 panel: Kronrod value and |K15 - G7| as the error estimate.
template <class F>
auto gauss_kronrod15(F&& f, double a, double b) {
  using T = decltype(f(a));
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const T fc = f(mid);
  T kronrod = detail::kWgk[7] * fc;
  T gauss = detail::kWg[3] * fc;
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * detail::kXgk[j];
    const T sum = f(mid - dx) + f(mid + dx);
    kronrod += detail::kWgk[j] * sum;
    if (j % 2 == 1) gauss += detail::kWg[j / 2] * sum;
  }
  return PanelResult<T>{kronrod * half, detail::magnitude((kronrod - gauss) * half)};
}

/// Globally adaptive G7/K15 over [a, b], starting from the given breakpoints
/// (sorted, including a and b) so that known trouble spots become panel
/// edges. Throws ToleranceError when max_panels is exhausted.
template <class F>
auto integrate_adaptive(F&& f, std::span<const double> breakpoints, double abs_tol,
                        std::size_t max_panels = 4000) {
  using T = decltype(f(breakpoints.front()));
  struct Panel {
    double a, b;
    PanelResult<T> r;
    bool operator<(const Panel& o) const { return r.error < o.r.error; }
  };
  std::priority_queue<Panel> heap;
  T total{};
  double err = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double a = breakpoints[i];
    const double b = breakpoints[i + 1];
    if (!(b > a)) continue;
    Panel p{a, b, gauss_kronrod15(f, a, b)};
    total += p.r.value;
    err += p.r.error;
    heap.push(p);
  }
  while (err > abs_tol) {
    if (heap.size() >= max_panels) {
      throw ToleranceError("adaptive quadrature: panel limit reached with error estimate " +
                           std::to_string(err) + " > " + std::to_string(abs_tol));
    }
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw ToleranceError("adaptive quadrature: panel collapsed below machine resolution");
    }
    Panel left{worst.a, mid, gauss_kronrod15(f, worst.a, mid)};
    Panel right{mid, worst.b, gauss_kronrod15(f, mid, worst.b)};
    total += left.r.value + right.r.value - worst.r.value;
    err += left.r.error + right.r.error - worst.r.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed the drift of incremental updates.
  T exact_total{};
  double exact_err = 0.0;
  while (!heap.empty()) {
    exact_total += heap.top().r.value;
    exact_err += heap.top().r.error;
    heap.pop();
  }
  return PanelResult<T>{exact_total, exact_err};
}

template <class F>
auto integrate_adaptive(F&& f, double a, double b, double abs_tol, std::size_t max_panels = 4000) {
  const std::array<double, 2> ends{a, b};
  return integrate_adaptive(std::forward<F>(f), std::span<const double>(ends), abs_tol, max_panels);
}

}  // namespace charsum::quad
