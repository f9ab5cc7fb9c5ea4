#pragma once

// Empirically calibrated acceptance constants. Every band that is not an
// exact identity lives here; recalibrating is a one-file change. Bump
// kTableVersion whenever a value changes.

namespace charsum::thresholds {

inline constexpr int kTableVersion = 2;

// Ceiling for norm_err = |S - main| / (X Y^{1/4} + Y X^{1/4}) in compare and
// scaling runs. Observed maximum over the acceptance grids is 0.03
// (N = 500..16000 diagonal; X = 100 with Y = 100 or 1e5).
inline constexpr double kNormErrCeiling = 5.0;

// Constant c in |D(alpha) - (sqrt(alpha) + pi alpha^{3/2}/18)| <= c alpha^{5/2}
// (alpha <= 1e-3) and |D(alpha) - alpha| <= c / alpha (alpha >= 1e3).
// Observed: 0.027 at alpha = 1e-4 and 0.44 at alpha = 1e3.
inline constexpr double kAsymptoticConstant = 10.0;

// Upper bound on the fitted log-log slope of |S - main| against N on the
// diagonal X = Y = N. Observed 1.108 on the 500..16000 six-point grid.
inline constexpr double kScalingSlopeCeiling = 1.40;

// Reference exponents printed alongside the fitted slope.
inline constexpr double kReferenceExponentSharp = 1.25;
inline constexpr double kReferenceExponentClassical = 1.4375;

// Relative gap |main - pv_main| / main allowed when Y <= X / (100 log X).
// The alpha -> 0 expansion gives (pi/18) alpha, far below this.
inline constexpr double kPolyaVinogradovRegimeGap = 0.02;

// Relative band for |S - pv_main| at X = 1e5, Y = 100. Observed 1.5 percent.
inline constexpr double kPolyaVinogradovSumBand = 0.05;

// Relative band for |main - pv_main| in the single-record compare example.
inline constexpr double kPolyaVinogradovCompareBand = 0.01;

// Smoothed sum: |S(X,Y;phi,phi) - (2/pi^2) X^{3/2} D(1;phi,phi)| <= c X^{e}
// at X = Y = 4000, U = 40. Observed 433, i.e. c = 0.072.
inline constexpr double kSmoothedConstant = 5.0;
inline constexpr double kSmoothedExponent = 1.05;

// |S - S_smooth| <= c (X^{3/2} + Y^{3/2}) log(XY) / U. Observed c = 0.06 to 0.08
// at N = 500..2000, U = 40.
inline constexpr double kSmoothingDifferenceConstant = 10.0;

// Mellin estimates: |phihat(1) phihat(1/2) - 2| sqrt(U) <= c and
// |phihat(s) - 1/s| <= c U^{-sigma}. Observed 1.93 and 1.04.
inline constexpr double kMellinEstimateConstant = 10.0;

// Decay: |phihat(sigma+it)| (1+|t|^j) / U^{j-1} bounded by this over the grid.
// Observed maximum 11.6.
inline constexpr double kMellinDecayConstant = 100.0;

// |D(1; phi, phi) - D(1)| <= c U^{-1/2}. Observed c = 1.51 at U = 40.
inline constexpr double kSmoothedMainConstant = 10.0;

// Band for the factor by which |D(1; phi, phi) - D(1)| shrinks from U to 4U.
// Observed 2.07.
inline constexpr double kSmoothedMainRatioLow = 1.5;
inline constexpr double kSmoothedMainRatioHigh = 3.0;

// Band for the mean factor by which |S - S_smooth| shrinks when U doubles,
// as originally prescribed (a 1/U law). Observed 1.41 at N = 500..2000,
// U = 20 -> 40; the difference follows U^{-1/2} instead, so this band is
// not reachable. Kept so the check reports the discrepancy.
inline constexpr double kSmoothingRatioLow = 1.5;
inline constexpr double kSmoothingRatioHigh = 3.0;

// Band around sqrt(2) for the same ratio under the U^{-1/2} law that the
// lattice points with square m or n in the transition bands produce.
// Observed 1.36 to 1.52 for N = 1000..16000, U = 10..160.
inline constexpr double kSmoothingSqrtLawBand = 0.25;

// Factor band for Stirling-order magnitude checks.
inline constexpr double kStirlingFactor = 3.0;

// Zeta shift used by the fault-injection run.
inline constexpr double kFaultInjectionZetaShift = 1e-6;

}  // namespace charsum::thresholds
