#include "charsum/oscillatory.hpp"

#include <algorithm>
#include <cmath>

#include "charsum/errors.hpp"
#include "charsum/quadrature.hpp"

namespace charsum::osc {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kAsymptoticStart = 40.0;
constexpr int kPanelOrder = 20;

// int_a^b t^{-p} sin(beta t) dt over half-period panels.
double half_period_panels(double p, double beta, double a, double b) {
  const auto& rule = quad::gauss_legendre(kPanelOrder);
  const double width = kPi / beta;
  const auto f = [p, beta](double t) { return std::pow(t, -p) * std::sin(beta * t); };
  double sum = 0.0;
  for (double left = a; left < b; left += width) {
    sum += quad::integrate_gl(f, left, std::min(left + width, b), rule);
  }
  return sum;
}

// int_x^inf t^{-p} sin(beta t) dt for beta x >= 40, via the unit-frequency series.
double scaled_tail(double p, double beta, double x) {
  return std::pow(beta, p - 1.0) * exp_tail_asymptotic(p, beta * x).imag();
}

}  // namespace

std::complex<double> exp_tail_asymptotic(double a, double z) {
  if (z < kAsymptoticStart) throw DomainError("exp_tail_asymptotic: needs z >= 40");
  // I(a) = i e^{iz} z^{-a} sum_j (a)_j (-i/z)^j
  std::complex<double> sum = 1.0;
  std::complex<double> term = 1.0;
  double last = 1.0;
  for (int j = 0; j < 200; ++j) {
    const std::complex<double> next = term * (a + j) * std::complex<double>{0.0, -1.0 / z};
    const double mag = std::abs(next);
    if (mag > last) break;  // smallest term reached
    sum += next;
    term = next;
    last = mag;
    if (mag < 1e-18 * std::abs(sum)) break;
  }
  const std::complex<double> phase = std::polar(std::pow(z, -a), z);
  return std::complex<double>{0.0, 1.0} * phase * sum;
}

double sine_tail(double a, double z) {
  if (!(a > 1.0) || !(z > 0.0)) throw DomainError("sine_tail: needs a > 1 and z > 0");
  if (z >= kAsymptoticStart) return exp_tail_asymptotic(a, z).imag();

  double total = 0.0;
  double lower = z;
  if (z < 1.0) {
    // int_z^1 s^{-a} sin s ds from the Taylor series of sin.
    double coeff = 1.0;  // (-1)^m / (2m+1)!
    for (int m = 0; m < 30; ++m) {
      const double e = 2.0 * m + 2.0 - a;
      const double piece = e == 0.0 ? -std::log(z) : (1.0 - std::pow(z, e)) / e;
      const double term = coeff * piece;
      total += term;
      if (std::abs(term) < 1e-18 * std::abs(total)) break;
      coeff /= -(2.0 * m + 2.0) * (2.0 * m + 3.0);
    }
    lower = 1.0;
  }
  const auto& rule = quad::gauss_legendre(kPanelOrder);
  const auto f = [a](double s) { return std::pow(s, -a) * std::sin(s); };
  const double width = 0.5 * kPi;
  for (double left = lower; left < kAsymptoticStart; left += width) {
    total += quad::integrate_gl(f, left, std::min(left + width, kAsymptoticStart), rule);
  }
  return total + exp_tail_asymptotic(a, kAsymptoticStart).imag();
}

double sqrt_sine_integral(double beta) {
  if (!(beta > 0.0)) throw DomainError("sqrt_sine_integral: beta must be positive");
  if (beta >= kAsymptoticStart) return scaled_tail(2.5, beta, 1.0);

  if (beta >= 1.0) {
    // Two integrations by parts:
    //   cos(b)/b + 5 sin(b)/(2 b^2) - 35/(4 b^2) int_1^inf t^{-9/2} sin(b t) dt
    const double width = kPi / beta;
    const double end = 1.0 + width * std::ceil((kAsymptoticStart / beta - 1.0) / width);
    const double remainder =
        half_period_panels(4.5, beta, 1.0, end) + scaled_tail(4.5, beta, end);
    return std::cos(beta) / beta + 2.5 * std::sin(beta) / (beta * beta) -
           8.75 / (beta * beta) * remainder;
  }

  // Low frequency: geometric panels while sin(beta t) is non-oscillatory,
  // then half-period panels out to where the asymptotic tail takes over.
  const auto& rule = quad::gauss_legendre(kPanelOrder);
  const auto f = [beta](double t) { return std::pow(t, -2.5) * std::sin(beta * t); };
  double total = 0.0;
  double left = 1.0;
  const double knee = 1.0 / beta;
  while (left < knee) {
    const double right = std::min(2.0 * left, knee);
    total += quad::integrate_gl(f, left, right, rule);
    left = right;
  }
  const double width = kPi / beta;
  const double end = left + width * std::ceil((kAsymptoticStart / beta - left) / width);
  total += half_period_panels(2.5, beta, left, end);
  return total + scaled_tail(2.5, beta, end);
}

double sqrt_sine_integral_rescaled(double beta) {
  if (!(beta > 0.0)) throw DomainError("sqrt_sine_integral_rescaled: beta must be positive");
  return std::pow(beta, 1.5) * sine_tail(2.5, beta);
}

double sqrt_sine_majorant(double beta) { return std::min(2.0 / 3.0, 2.0 / beta); }

}  // namespace charsum::osc
