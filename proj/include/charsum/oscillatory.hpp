#pragma once

// Elementary-function kernels for the real-axis oscillatory integrals behind
// C(alpha). Nothing here touches zeta or Gamma.

#include <complex>

namespace charsum::osc {

/// int_z^inf s^{-a} e^{is} ds for z >= 40 by repeated integration by parts
/// (asymptotic series truncated at its smallest term). Requires a > 0.
std::complex<double> exp_tail_asymptotic(double a, double z);

/// int_z^inf s^{-a} sin(s) ds, a > 1, z > 0, to absolute error ~1e-15.
double sine_tail(double a, double z);

/// int_0^1 sqrt(u) sin(beta / u) du = int_1^inf t^{-5/2} sin(beta t) dt,
/// evaluated in the t variable at frequency beta. beta > 0.
double sqrt_sine_integral(double beta);

/// The same quantity through the unit-frequency form
/// beta^{3/2} int_beta^inf s^{-5/2} sin(s) ds.
double sqrt_sine_integral_rescaled(double beta);

/// A bound on |sqrt_sine_integral(beta)|: min(2/3, 2/beta).
double sqrt_sine_majorant(double beta);

}  // namespace charsum::osc
