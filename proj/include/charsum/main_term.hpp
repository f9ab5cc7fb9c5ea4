#pragma once

// Main-term functions D(alpha), C(alpha), the smoothed D(alpha; phi, psi),
// closed-form residues, asymptotic expansions and identity residuals.
//
// D(alpha) = sqrt(alpha) + alpha - I_sigma(alpha) with
//   I_sigma = 1/(i sqrt(pi)) int_(sigma) (alpha/2pi)^s Gamma(s-3/2) sin(pi s/2) zeta(2s-1) / s ds
//           = (2/sqrt(pi)) int_0^inf Re F(sigma + it) dt.
// The integrand only decays like t^{-3/2} in mean, and its truncation error
// is dominated by stationary points at t = pi k^2 alpha / 2. Two tail
// models are offered:
//   none              plain truncation at T (error ~ 0.3 sqrt(alpha) T^{-3/2});
//   stationary_phase  the contour integrand is tapered smoothly to zero on
//                     [T/2, T] and the missing stationary contributions are
//                     added back from the k-series, (2/pi) sum_k k^{-2} J(beta_k) (1 - W_T(beta_k)).
// The k-series used for the correction is the one C(alpha) is built from,
// so checks that compare C against D use the plain model.

#include <functional>
#include <string>

#include "charsum/special.hpp"
#include "charsum/weights.hpp"

namespace charsum {

enum class TailModel { none, stationary_phase };

TailModel parse_tail_model(const std::string& name);
const char* tail_model_name(TailModel m);

struct ContourSpec {
  double sigma = 0.75;
  /// Truncation height; 0 selects doubling from 32 up to 4096.
  double T = 0.0;
  double tol = 1e-8;
  TailModel tail = TailModel::stationary_phase;

  /// sigma in (1/2, 1) at least 1e-3 away from 1/2 and 1; tol >= 1e-12; T = 0 or T >= 8.
  void validate() const;
};

struct OscillatorySpec {
  /// Number of k terms; 0 selects the analytic tail bound.
  int K = 0;
  double tol = 1e-10;

  /// K >= 0, tol >= 1e-10.
  void validate() const;
};

/// Diagnostics of one vertical-line evaluation.
struct ContourResult {
  double value = 0.0;           ///< the requested quantity (D, or the integral)
  double integral = 0.0;        ///< (2/sqrt pi) int Re F dt, tapered if applicable
  double tail_correction = 0.0;
  double height = 0.0;          ///< final T
  double last_increment = 0.0;  ///< change over the last doubling (0 for fixed T)
  double imag_residual = 0.0;   ///< |Im| of the symmetric integral near t = 0
};

inline constexpr double kMaxContourHeight = 4096.0;

ContourResult D_alpha_detailed(double alpha, const ContourSpec& spec = {});
double D_alpha(double alpha, const ContourSpec& spec = {});

/// I_sigma(alpha) for any sigma avoiding the poles 1/2, 1, 3/2; used by the
/// residue check, which needs sigma = 1/4. Tapered at fixed height T when the
/// spec's model is stationary_phase, otherwise cut sharply; no tail correction.
double D_contour_integral(double alpha, double sigma, double T, TailModel model);

/// |(I_{3/4} - I_{1/4}) - sqrt(alpha)| with both lines at the same height T.
double D_residue_shift_check(double alpha, double T = 1024.0);

/// C(alpha) = alpha + (2/pi) sum_k k^{-2} int_0^1 sqrt(u) sin(pi k^2 alpha / (2u)) du,
/// from real-axis quadrature and elementary functions only.
double C_alpha(double alpha, const OscillatorySpec& spec = {});

/// The same series in the y form alpha^{3/2} (2/pi) sum_k k^{-2} int_0^{1/alpha} sqrt(y) sin(pi k^2/(2y)) dy.
double C_alpha_yform(double alpha, const OscillatorySpec& spec = {});

/// Number of k terms the adaptive rule uses at (alpha, tol).
int C_alpha_terms(double alpha, double tol);

/// [phihat(1) psihat(1/2) alpha^{1/2} + psihat(1) phihat(1/2) alpha] / 2
///   + 1/(i sqrt pi) int_(sigma) (alpha/2pi)^s phihat(3/2-s) psihat(s) Gamma(s-1/2) sin(pi s/2) zeta(2s-1) ds.
/// With two indicator weights the integrand is the D(alpha) integrand and
/// the spec's tail model applies; plateau weights decay fast enough that a
/// plain cut is used.
ContourResult D_smoothed_detailed(double alpha, const SmoothWeight& phi, const SmoothWeight& psi,
                                  const ContourSpec& spec = {});
double D_smoothed(double alpha, const SmoothWeight& phi, const SmoothWeight& psi,
                  const ContourSpec& spec = {});

/// sqrt(pi) sin(pi s/2) Gamma(s-1/2) zeta(2s-1) / (2 (2pi)^s).
Complex residue_Z_diagonal(Complex s);
/// residue_Z_diagonal(s) / zeta2(2).
Complex residue_A_diagonal(Complex s);
/// zeta2(2x) / (2 zeta2(2x+1)).
Complex residue_lines_s1_w1(Complex x);

/// sqrt(alpha) + (pi/18) alpha^{3/2}.
double asymptotic_small(double alpha);
/// alpha.
double asymptotic_large(double alpha);
/// (2/pi^2) X Y^{1/2}.
double pv_main(double X, double Y);
/// (2/pi^2) X^{3/2} D(Y/X).
double main_term(double X, double Y, const ContourSpec& spec = {});

/// 2^s zeta(2+2s) Gamma(s) sin(pi s/2) / (pi^s (s + 3/2)); 0 < Re s < 1.
Complex fhat_closed_form(Complex s);

/// |LHS - RHS| / max(|LHS|, |RHS|) for
///   -2 sqrt(pi) (2pi)^s Gamma(-s-3/2) sin(pi s/2) zeta(-2s-1) / s  =  (2/pi) fhat(s).
double toshow_residual(Complex s);

}  // namespace charsum
