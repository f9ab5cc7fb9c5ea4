#pragma once

// Complex Gamma and Riemann zeta in double precision.
//
// Accuracy budget (downstream contour tolerances assume these):
//   gamma      relative error <= 1e-12 for |Im s| <= 200, -10 <= Re s <= 10
//   zeta       absolute error <= 1e-10 for |Im s| <= 200, -5 <= Re s <= 5
// Both remain usable well beyond those boxes; log_gamma and log_sin_pi keep
// products like Gamma(s) * sin(pi s / 2) finite at heights where the
// individual factors over/underflow.

#include <complex>

namespace charsum {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// log Gamma(s), any branch (only ever exponentiated or differenced).
/// Throws PoleError at s = 0, -1, -2, ...
Complex log_gamma(Complex s);

/// Gamma(s). Throws PoleError at the non-positive integers.
Complex gamma(Complex s);

/// log sin(pi z), stable for large |Im z|. Throws PoleError at integers.
Complex log_sin_pi(Complex z);

/// Riemann zeta via Euler-Maclaurin; reflection for Re s < 0.
/// Throws PoleError at s = 1.
Complex zeta(Complex s);

/// zeta with the Euler factor at 2 removed: (1 - 2^{-s}) zeta(s).
Complex zeta2(Complex s);

/// chi(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s), so zeta(s) = chi(s) zeta(1 - s).
Complex zeta_fe_factor(Complex s);

/// |Gamma((1-s)/2) / Gamma(s/2) - 2^s sin(pi s/2) Gamma(1-s) / sqrt(pi)|.
/// Self-test of the gamma implementation.
double gamma_ratio_check(Complex s);

/// Fault injection for the verification suite: every zeta() result is
/// shifted by `delta` (added to the real part). Zero disables. Process-wide.
void set_zeta_perturbation(double delta);
double zeta_perturbation();

/// RAII guard restoring the previous perturbation on scope exit.
class ZetaPerturbationGuard {
 public:
  explicit ZetaPerturbationGuard(double delta) : saved_(zeta_perturbation()) {
    set_zeta_perturbation(delta);
  }
  ~ZetaPerturbationGuard() { set_zeta_perturbation(saved_); }
  ZetaPerturbationGuard(const ZetaPerturbationGuard&) = delete;
  ZetaPerturbationGuard& operator=(const ZetaPerturbationGuard&) = delete;

 private:
  double saved_;
};

}  // namespace charsum
