#include "charsum/main_term.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

#include "charsum/errors.hpp"
#include "charsum/oscillatory.hpp"
#include "charsum/quadrature.hpp"

namespace charsum {
namespace {

constexpr double kInitialHeight = 32.0;
constexpr double kPanelWidth = 0.5;
constexpr double kImagCheckHeight = 8.0;
// Fraction of tol granted to quadrature (the rest goes to truncation).
constexpr double kQuadratureShare = 0.02;

const double kTwoOverSqrtPi = 2.0 / std::sqrt(kPi);

using LineFunction = std::function<Complex(double)>;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// W_T: 1 up to T/2, smooth monotone step down to 0 at T.
double taper(double t, double T) {
  const double half = 0.5 * T;
  if (t <= half) return 1.0;
  return 1.0 - smooth_step((t - half) / half);
}

double integrate_real(const LineFunction& f, double a, double b, double abs_tol, double T,
                      bool tapered) {
  if (!(b > a)) return 0.0;
  const auto pieces = static_cast<std::size_t>(std::ceil((b - a) / kPanelWidth));
  std::vector<double> breaks(pieces + 1);
  for (std::size_t i = 0; i <= pieces; ++i) {
    breaks[i] = std::min(b, a + kPanelWidth * static_cast<double>(i));
  }
  const auto g = [&](double t) {
    const double v = f(t).real();
    return tapered ? v * taper(t, T) : v;
  };
  return quad::integrate_adaptive(g, std::span<const double>(breaks), abs_tol, 8 * pieces + 2000)
      .value;
}

// (1/sqrt pi) |Im int_{-L}^{L} F dt|: zero for a conjugate-symmetric integrand.
double imaginary_residual(const LineFunction& f, double tol) {
  const auto g = [&](double t) { return f(t).imag() + f(-t).imag(); };
  const auto r = quad::integrate_adaptive(g, 0.0, kImagCheckHeight, 0.1 * tol, 4000);
  return std::abs(r.value) / std::sqrt(kPi);
}

using TailFunction = std::function<double(double)>;

// Q(T) = (2/sqrt pi) int_0^T W Re f dt + tail(T), doubling T until Q settles.
ContourResult integrate_line(const LineFunction& f, double fixed_T, double tol, bool tapered,
                             const TailFunction& tail) {
  std::vector<double> heights;
  if (fixed_T > 0.0) {
    heights.push_back(fixed_T);
  } else {
    for (double T = kInitialHeight; T <= kMaxContourHeight; T *= 2.0) heights.push_back(T);
  }

  ContourResult out;
  double plain = 0.0;
  double plain_upto = 0.0;
  double previous = std::numeric_limits<double>::quiet_NaN();
  for (const double T : heights) {
    const double quad_tol = kQuadratureShare * tol / kTwoOverSqrtPi;
    const double flat_end = tapered ? 0.5 * T : T;
    plain += integrate_real(f, plain_upto, flat_end, quad_tol * (flat_end - plain_upto) / T, T,
                            false);
    plain_upto = flat_end;
    const double sloped = tapered ? integrate_real(f, flat_end, T, quad_tol * 0.5, T, true) : 0.0;

    out.integral = kTwoOverSqrtPi * (plain + sloped);
    out.tail_correction = tail ? tail(T) : 0.0;
    out.height = T;
    const double q = out.integral + out.tail_correction;
    if (fixed_T > 0.0) break;
    if (!std::isnan(previous)) {
      out.last_increment = std::abs(q - previous);
      if (out.last_increment < 0.5 * tol) break;
    }
    previous = q;
    if (T >= kMaxContourHeight) {
      throw ToleranceError("contour integral: last doubling changed the value by " +
                           sci(out.last_increment) + " at T = 4096, tol " + sci(tol));
    }
  }
  out.imag_residual = imaginary_residual(f, tol);
  if (out.imag_residual > 10.0 * tol) {
    throw ToleranceError("contour integral: imaginary residual " +
                         sci(out.imag_residual) +
                         " exceeds 10 tol; integrand is not conjugate-symmetric");
  }
  return out;
}

// (2/pi) sum_k k^{-2} J(beta_k) (1 - W_T(beta_k)) over beta_k > T/2.
double stationary_tail(double alpha, double T, double tol) {
  const double scale = 8.0 / (kPi * kPi * alpha);  // sum_{k>K} bound = scale / (3 K^3)
  auto k = static_cast<std::int64_t>(std::floor(std::sqrt(T / (kPi * alpha))));
  k = std::max<std::int64_t>(k, 1);
  double sum = 0.0;
  for (;; ++k) {
    const double kk = static_cast<double>(k);
    const double beta = 0.5 * kPi * kk * kk * alpha;
    if (beta > 0.5 * T) {
      sum += osc::sqrt_sine_integral(beta) * (1.0 - taper(beta, T)) / (kk * kk);
    }
    if (beta > T && scale / (3.0 * kk * kk * kk) < 0.01 * tol) break;
  }
  return 2.0 / kPi * sum;
}

Complex d_integrand(double alpha, Complex s) {
  const Complex log_part = s * std::log(alpha / (2.0 * kPi)) + log_gamma(s - 1.5) +
                           log_sin_pi(0.5 * s) - std::log(s);
  return std::exp(log_part) * zeta(2.0 * s - 1.0);
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("alpha must be positive and finite, got " + sci(alpha));
  }
}

void check_off_poles(double sigma) {
  for (const double p : {0.5, 1.0, 1.5}) {
    if (std::abs(sigma - p) < 1e-3) {
      throw PoleError("contour abscissa " + std::to_string(sigma) + " is within 1e-3 of a pole");
    }
  }
}

}  // namespace

TailModel parse_tail_model(const std::string& name) {
  if (name == "none") return TailModel::none;
  if (name == "stationary") return TailModel::stationary_phase;
  throw DomainError("unknown tail model '" + name + "' (none, stationary)");
}

const char* tail_model_name(TailModel m) {
  return m == TailModel::none ? "none" : "stationary";
}

void ContourSpec::validate() const {
  if (!(sigma > 0.5 && sigma < 1.0)) {
    throw DomainError("ContourSpec: sigma must lie in (1/2, 1), got " + std::to_string(sigma));
  }
  check_off_poles(sigma);
  if (!(tol >= 1e-12)) throw DomainError("ContourSpec: tol must be >= 1e-12");
  if (!(T == 0.0 || (T >= 8.0 && T <= 65536.0))) {
    throw DomainError("ContourSpec: T must be 0 (adaptive) or in [8, 65536]");
  }
}

void OscillatorySpec::validate() const {
  if (K < 0) throw DomainError("OscillatorySpec: K must be >= 0");
  if (!(tol >= 1e-10)) throw DomainError("OscillatorySpec: tol must be >= 1e-10");
}

ContourResult D_alpha_detailed(double alpha, const ContourSpec& spec) {
  check_alpha(alpha);
  spec.validate();
  const double sigma = spec.sigma;
  const LineFunction f = [alpha, sigma](double t) { return -d_integrand(alpha, {sigma, t}); };
  TailFunction tail;
  const bool tapered = spec.tail == TailModel::stationary_phase;
  if (tapered) tail = [alpha, &spec](double T) { return stationary_tail(alpha, T, spec.tol); };
  ContourResult r = integrate_line(f, spec.T, spec.tol, tapered, tail);
  r.integral = -r.integral;
  r.value = std::sqrt(alpha) + alpha - r.integral + r.tail_correction;
  return r;
}

double D_alpha(double alpha, const ContourSpec& spec) { return D_alpha_detailed(alpha, spec).value; }

double D_contour_integral(double alpha, double sigma, double T, TailModel model) {
  check_alpha(alpha);
  check_off_poles(sigma);
  if (!(T >= 8.0)) throw DomainError("D_contour_integral: T must be >= 8");
  const LineFunction f = [alpha, sigma](double t) { return d_integrand(alpha, {sigma, t}); };
  return integrate_line(f, T, 1e-10, model == TailModel::stationary_phase, {}).integral;
}

double D_residue_shift_check(double alpha, double T) {
  const double upper = D_contour_integral(alpha, 0.75, T, TailModel::stationary_phase);
  const double lower = D_contour_integral(alpha, 0.25, T, TailModel::stationary_phase);
  return std::abs((upper - lower) - std::sqrt(alpha));
}

int C_alpha_terms(double alpha, double tol) {
  check_alpha(alpha);
  const double target = 0.5 * tol;
  const double by_two_thirds = (4.0 / (3.0 * kPi)) / target;
  const double by_decay = std::cbrt((8.0 / (kPi * kPi * alpha)) / (3.0 * target));
  const double k = std::ceil(std::min(by_two_thirds, by_decay));
  if (k > 1e8) throw ToleranceError("C_alpha: more than 1e8 series terms needed");
  return std::max(1, static_cast<int>(k));
}

double C_alpha(double alpha, const OscillatorySpec& spec) {
  check_alpha(alpha);
  spec.validate();
  const int K = spec.K > 0 ? spec.K : C_alpha_terms(alpha, spec.tol);
  double sum = 0.0;
  for (int k = K; k >= 1; --k) {
    const double kk = static_cast<double>(k);
    sum += osc::sqrt_sine_integral(0.5 * kPi * kk * kk * alpha) / (kk * kk);
  }
  return alpha + 2.0 / kPi * sum;
}

double C_alpha_yform(double alpha, const OscillatorySpec& spec) {
  check_alpha(alpha);
  spec.validate();
  const int K = spec.K > 0 ? spec.K : C_alpha_terms(alpha, spec.tol);
  // int_0^{1/alpha} sqrt(y) sin(c/y) dy = c^{3/2} int_{c alpha}^inf z^{-5/2} sin z dz, c = pi k^2 / 2
  double sum = 0.0;
  for (int k = K; k >= 1; --k) {
    const double kk = static_cast<double>(k);
    const double c = 0.5 * kPi * kk * kk;
    sum += std::pow(c, 1.5) * osc::sine_tail(2.5, c * alpha) / (kk * kk);
  }
  return alpha + std::pow(alpha, 1.5) * 2.0 / kPi * sum;
}

ContourResult D_smoothed_detailed(double alpha, const SmoothWeight& phi, const SmoothWeight& psi,
                                  const ContourSpec& spec) {
  check_alpha(alpha);
  spec.validate();
  const double mellin_tol = std::max(1e-12, 1e-3 * spec.tol);
  const Complex main_part =
      0.5 * (mellin_numeric(phi, 1.0, mellin_tol) * mellin_numeric(psi, 0.5, mellin_tol) *
                 std::sqrt(alpha) +
             mellin_numeric(psi, 1.0, mellin_tol) * mellin_numeric(phi, 0.5, mellin_tol) * alpha);

  const double sigma = spec.sigma;
  const double log_ratio = std::log(alpha / (2.0 * kPi));
  // On sigma = 3/4 with phi = psi, 3/2 - s = conj(s) and phihat(conj s) = conj(phihat(s)).
  const bool mirrored = sigma == 0.75 && phi.kind() == psi.kind() && phi.U() == psi.U();
  const LineFunction f = [&phi, &psi, sigma, log_ratio, mellin_tol, mirrored](double t) {
    const Complex s{sigma, t};
    const Complex log_part = s * log_ratio + log_gamma(s - 0.5) + log_sin_pi(0.5 * s);
    const Complex psi_hat = mellin_numeric(psi, s, mellin_tol);
    const Complex phi_hat = mirrored ? std::conj(psi_hat) : mellin_numeric(phi, 1.5 - s, mellin_tol);
    return std::exp(log_part) * zeta(2.0 * s - 1.0) * phi_hat * psi_hat;
  };
  const bool indicators =
      phi.kind() == WeightKind::indicator && psi.kind() == WeightKind::indicator;
  const bool tapered = indicators && spec.tail == TailModel::stationary_phase;
  TailFunction tail;
  if (tapered) tail = [alpha, &spec](double T) { return stationary_tail(alpha, T, spec.tol); };
  ContourResult r = integrate_line(f, spec.T, spec.tol, tapered, tail);
  r.value = main_part.real() + r.integral + r.tail_correction;
  return r;
}

double D_smoothed(double alpha, const SmoothWeight& phi, const SmoothWeight& psi,
                  const ContourSpec& spec) {
  return D_smoothed_detailed(alpha, phi, psi, spec).value;
}

Complex residue_Z_diagonal(Complex s) {
  return std::sqrt(kPi) * std::sin(0.5 * kPi * s) * gamma(s - 0.5) * zeta(2.0 * s - 1.0) /
         (2.0 * std::exp(s * std::log(2.0 * kPi)));
}

Complex residue_A_diagonal(Complex s) { return residue_Z_diagonal(s) / zeta2(2.0); }

Complex residue_lines_s1_w1(Complex x) { return zeta2(2.0 * x) / (2.0 * zeta2(2.0 * x + 1.0)); }

double asymptotic_small(double alpha) {
  return std::sqrt(alpha) + kPi / 18.0 * std::pow(alpha, 1.5);
}

double asymptotic_large(double alpha) { return alpha; }

double pv_main(double X, double Y) { return 2.0 / (kPi * kPi) * X * std::sqrt(Y); }

double main_term(double X, double Y, const ContourSpec& spec) {
  if (!(X > 0.0) || !(Y > 0.0)) throw DomainError("main_term: X and Y must be positive");
  return 2.0 / (kPi * kPi) * std::pow(X, 1.5) * D_alpha(Y / X, spec);
}

Complex fhat_closed_form(Complex s) {
  if (!(s.real() > 0.0 && s.real() < 1.0)) {
    throw DomainError("fhat_closed_form: requires 0 < Re s < 1");
  }
  return std::exp(s * std::log(2.0 / kPi)) * zeta(2.0 + 2.0 * s) * gamma(s) *
         std::sin(0.5 * kPi * s) / (s + 1.5);
}

double toshow_residual(Complex s) {
  const Complex lhs = -2.0 * std::sqrt(kPi) * std::exp(s * std::log(2.0 * kPi)) *
                      gamma(-s - 1.5) * std::sin(0.5 * kPi * s) * zeta(-2.0 * s - 1.0) / s;
  const Complex rhs = 2.0 / kPi * fhat_closed_form(s);
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  if (scale == 0.0) return 0.0;
  return std::abs(lhs - rhs) / scale;
}

}  // namespace charsum
