#include "charsum/special.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "charsum/errors.hpp"

namespace charsum {
namespace {

constexpr double kLogPi = 1.144729885849400174143427351353058712;
constexpr double kLogTwo = 0.693147180559945309417232121458176568;
constexpr double kHalfLogTwoPi = 0.918938533204672741780329736405617639;

// Lanczos coefficients, g = 607/128, 15 terms (Godfrey).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,      57.156235665862923517,
    -59.597960355475491248,      14.136097974741747174,
    -0.49191381609762019978,     .33994649984811888699e-4,
    .46523628927048575665e-4,    -.98374475304879564677e-4,
    .15808870322491248884e-3,    -.21026444172410488319e-3,
    .21743961811521264320e-3,    -.16431810653676389022e-3,
    .84418223983852743293e-4,    -.26190838401581408670e-4,
    .36899182659531622704e-5};

// B_2, B_4, ..., B_30.
constexpr std::array<double, 15> kBernoulli = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0};

std::atomic<double> g_zeta_perturbation{0.0};

bool is_nonpositive_integer(Complex s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::nearbyint(s.real());
}

Complex lanczos_log_gamma(Complex s) {
  const Complex z = s - 1.0;
  Complex x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    x += kLanczos[i] / (z + static_cast<double>(i));
  }
  const Complex t = z + kLanczosG + 0.5;
  return kHalfLogTwoPi + (z + 0.5) * std::log(t) - t + std::log(x);
}

// n^{-s} for n = 1..count-1 (index 0 unused). Primes use exp(); composites
// multiply the values of their smallest prime factor and cofactor.
void fill_inverse_powers(Complex s, std::size_t count, std::vector<Complex>& out,
                         std::vector<std::uint32_t>& spf) {
  out.assign(count, Complex{});
  spf.assign(count, 0);
  if (count > 1) out[1] = 1.0;
  for (std::size_t n = 2; n < count; ++n) {
    if (spf[n] == 0) {
      spf[n] = static_cast<std::uint32_t>(n);
      for (std::size_t k = n * n; k < count; k += n) {
        if (spf[k] == 0) spf[k] = static_cast<std::uint32_t>(n);
      }
      out[n] = std::exp(-s * std::log(static_cast<double>(n)));
    } else {
      out[n] = out[spf[n]] * out[n / spf[n]];
    }
  }
}

// Euler-Maclaurin with N ~ |s|/2 direct terms; valid for Re s >= 0, s != 1.
Complex zeta_euler_maclaurin(Complex s) {
  const double height = std::abs(s);
  const auto n_terms = static_cast<std::size_t>(std::max(20.0, std::ceil(0.5 * height) + 10.0));
  thread_local std::vector<Complex> powers;
  thread_local std::vector<std::uint32_t> spf;
  fill_inverse_powers(s, n_terms + 1, powers, spf);

  Complex head{};
  for (std::size_t n = n_terms - 1; n >= 1; --n) head += powers[n];

  const double big_n = static_cast<double>(n_terms);
  const Complex n_pow = powers[n_terms];  // N^{-s}
  Complex result = head + n_pow * big_n / (s - 1.0) + 0.5 * n_pow;

  // sum_k B_2k / (2k)! * s (s+1) ... (s+2k-2) * N^{-s-2k+1}
  Complex rising = s;               // s (s+1) ... (s+2k-2)
  Complex n_factor = n_pow / big_n;  // N^{-s-2k+1}
  double factorial = 2.0;            // (2k)!
  const double scale = std::abs(result);
  for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
    const Complex term = kBernoulli[k - 1] / factorial * rising * n_factor;
    result += term;
    if (std::abs(term) < 1e-17 * scale) break;
    const double kk = static_cast<double>(k);
    rising *= (s + (2.0 * kk - 1.0)) * (s + 2.0 * kk);
    n_factor /= big_n * big_n;
    factorial *= (2.0 * kk + 1.0) * (2.0 * kk + 2.0);
  }
  return result;
}

Complex zeta_fe_factor_impl(Complex s) {
  if (s.imag() == 0.0 && s.real() == std::nearbyint(s.real())) {
    const double k2 = s.real();
    if (k2 <= 0.0 && std::fmod(k2, 2.0) == 0.0) return 0.0;  // sin(pi s/2) = 0, Gamma(1-s) finite
    if (k2 > 0.0 && std::fmod(k2, 2.0) == 0.0) {
      // limit of sin(pi s/2) Gamma(1-s) at s = 2k is (-1)^k pi / (2 (2k-1)!)
      const double k = k2 / 2.0;
      const double sign = std::fmod(k, 2.0) == 0.0 ? 1.0 : -1.0;
      return sign * std::exp((k2 - 1.0) * kLogTwo + k2 * kLogPi - std::lgamma(k2));
    }
    if (k2 > 0.0) throw PoleError("zeta_fe_factor: pole of Gamma(1-s) at s = " + std::to_string(k2));
  }
  return std::exp(s * kLogTwo + (s - 1.0) * kLogPi + log_sin_pi(0.5 * s) + log_gamma(1.0 - s));
}

Complex zeta_unperturbed(Complex s) {
  if (s == Complex{1.0, 0.0}) throw PoleError("zeta: pole at s = 1");
  if (s.real() < 0.0) return zeta_fe_factor_impl(s) * zeta_euler_maclaurin(1.0 - s);
  return zeta_euler_maclaurin(s);
}

}  // namespace

Complex log_sin_pi(Complex z) {
  // sin is 2-periodic in Re z (times pi); reduce to keep sin() accurate.
  const double x = z.real() - 2.0 * std::nearbyint(0.5 * z.real());
  const double y = z.imag();
  if (y == 0.0 && x == std::nearbyint(x)) {
    throw PoleError("log_sin_pi: sin(pi z) vanishes at integer z");
  }
  if (std::abs(y) < 1.0) return std::log(std::sin(kPi * Complex{x, y}));
  // For y > 0: sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z}).
  const bool upper = y > 0.0;
  const Complex zr{x, std::abs(y)};
  const Complex w = std::exp(Complex{0.0, 2.0 * kPi} * zr);
  const Complex log1m = std::abs(w) < 1e-8 ? -w - 0.5 * w * w : std::log(1.0 - w);
  const Complex val = Complex{0.0, -kPi} * zr + Complex{-kLogTwo, 0.5 * kPi} + log1m;
  return upper ? val : std::conj(val);
}

Complex log_gamma(Complex s) {
  if (is_nonpositive_integer(s)) {
    throw PoleError("gamma: pole at non-positive integer " + std::to_string(s.real()));
  }
  if (s.real() < 0.5) return kLogPi - log_sin_pi(s) - lanczos_log_gamma(1.0 - s);
  return lanczos_log_gamma(s);
}

Complex gamma(Complex s) { return std::exp(log_gamma(s)); }

Complex zeta(Complex s) {
  const double delta = g_zeta_perturbation.load(std::memory_order_relaxed);
  return zeta_unperturbed(s) + delta;
}

Complex zeta2(Complex s) {
  if (s == Complex{1.0, 0.0}) throw PoleError("zeta2: pole at s = 1");
  if (s == Complex{0.0, 0.0}) return 0.0;
  return (1.0 - std::exp(-s * kLogTwo)) * zeta(s);
}

Complex zeta_fe_factor(Complex s) { return zeta_fe_factor_impl(s); }

double gamma_ratio_check(Complex s) {
  const Complex lhs = std::exp(log_gamma(0.5 * (1.0 - s)) - log_gamma(0.5 * s));
  const Complex rhs = std::pow(Complex{2.0, 0.0}, s) * std::sin(0.5 * kPi * s) * gamma(1.0 - s) /
                      std::sqrt(kPi);
  return std::abs(lhs - rhs);
}

void set_zeta_perturbation(double delta) {
  g_zeta_perturbation.store(delta, std::memory_order_relaxed);
}

double zeta_perturbation() { return g_zeta_perturbation.load(std::memory_order_relaxed); }

}  // namespace charsum
