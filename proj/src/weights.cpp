#include "charsum/weights.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "charsum/errors.hpp"
#include "charsum/quadrature.hpp"

namespace charsum {
namespace {

// Beyond v = log 50 the lower band's weight H(e^{-v}) is below 1e-21.
constexpr double kLowerBandLogExtent = 3.912023005428146;
constexpr double kOscillationSwitch = 50.0;

std::vector<double> uniform_breaks(double a, double b, std::size_t pieces) {
  std::vector<double> out(pieces + 1);
  for (std::size_t i = 0; i <= pieces; ++i) {
    out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(pieces);
  }
  out.back() = b;
  return out;
}

// Panels covering `phase_span` radians of oscillation: half-period panels
// once the frequency is high, a handful otherwise.
std::size_t panel_count(double phase_span, double height) {
  if (std::abs(height) <= kOscillationSwitch) return 8;
  return static_cast<std::size_t>(std::ceil(phase_span / kPi)) + 8;
}

}  // namespace

SmoothWeight SmoothWeight::plateau(double U) {
  if (!(U >= 4.0) || !std::isfinite(U)) {
    throw DomainError("SmoothWeight: plateau parameter U must be finite and >= 4, got " +
                      std::to_string(U));
  }
  return SmoothWeight(WeightKind::plateau, U);
}

SmoothWeight SmoothWeight::indicator() {
  return SmoothWeight(WeightKind::indicator, std::numeric_limits<double>::infinity());
}

double smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double g0 = std::exp(-1.0 / t);
  const double g1 = std::exp(-1.0 / (1.0 - t));
  return g0 / (g0 + g1);
}

double SmoothWeight::operator()(double x) const {
  if (!(x > 0.0 && x < 1.0)) return 0.0;
  if (kind_ == WeightKind::indicator) return 1.0;
  return smooth_step(U_ * x) * smooth_step(U_ * (1.0 - x));
}

double weight_eval(const SmoothWeight& w, double x) { return w(x); }

Complex mellin_indicator(Complex s) {
  if (s == Complex{}) throw PoleError("mellin_indicator: pole at s = 0");
  return 1.0 / s;
}

Complex mellin_numeric(const SmoothWeight& w, Complex s, double tol) {
  if (!(s.real() > 0.0)) throw DomainError("mellin_numeric: requires Re s > 0");
  if (!(tol >= 1e-12)) throw DomainError("mellin_numeric: tol must be >= 1e-12");
  if (w.kind() == WeightKind::indicator) return 1.0 / s;

  const double U = w.U();
  const double t = s.imag();

  // Flat middle [1/U, 1 - 1/U] in closed form.
  const double lo = 1.0 / U;
  const double hi = 1.0 - 1.0 / U;
  const Complex middle = (std::exp(s * std::log(hi)) - std::exp(s * std::log(lo))) / s;

  // Lower band, x = e^{-v} / U: U^{-s} int_0^inf H(e^{-v}) e^{-s v} dv.
  const auto lower_f = [s](double v) { return smooth_step(std::exp(-v)) * std::exp(-s * v); };
  const auto lower_breaks = uniform_breaks(
      0.0, kLowerBandLogExtent, panel_count(std::abs(t) * kLowerBandLogExtent, t));
  const auto lower = quad::integrate_adaptive(lower_f, std::span<const double>(lower_breaks),
                                              0.25 * tol, lower_breaks.size() + 4000);

  // Upper band, x = 1 - y/U: (1/U) int_0^1 H(y) (1 - y/U)^{s-1} dy.
  const auto upper_f = [s, U](double y) {
    return smooth_step(y) * std::exp((s - 1.0) * std::log1p(-y / U));
  };
  const auto upper_breaks =
      uniform_breaks(0.0, 1.0, panel_count(std::abs(t * std::log1p(-1.0 / U)), t));
  const auto upper = quad::integrate_adaptive(upper_f, std::span<const double>(upper_breaks),
                                              0.25 * tol * U, upper_breaks.size() + 4000);

  return std::exp(-s * std::log(U)) * lower.value + middle + upper.value / U;
}

}  // namespace charsum
