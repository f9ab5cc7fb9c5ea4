#pragma once

// Smooth plateau cutoffs on (0, 1) and their Mellin transforms.

#include "charsum/special.hpp"

namespace charsum {

enum class WeightKind { plateau, indicator };

/// phi_U(x) = H(U x) H(U (1 - x)) for the plateau kind, where
/// H(t) = g(t) / (g(t) + g(1 - t)) and g(t) = exp(-1/t) for t > 0, else 0.
/// Exactly 1 on [1/U, 1 - 1/U]. The indicator kind is 1 on (0, 1).
class SmoothWeight {
 public:
  /// Plateau weight; requires U >= 4.
  static SmoothWeight plateau(double U);
  static SmoothWeight indicator();

  WeightKind kind() const { return kind_; }
  /// Plateau parameter; infinity for the indicator.
  double U() const { return U_; }

  double operator()(double x) const;

 private:
  SmoothWeight(WeightKind kind, double U) : kind_(kind), U_(U) {}
  WeightKind kind_;
  double U_;
};

/// The smooth step H on the real line: 0 for t <= 0, 1 for t >= 1.
double smooth_step(double t);

double weight_eval(const SmoothWeight& w, double x);

/// int_0^1 w(x) x^{s-1} dx to absolute error tol. The indicator kind returns
/// 1/s. For the plateau the flat middle is integrated in closed form and the
/// two transition bands by adaptive Gauss-Kronrod (half-period panels in
/// log x once |Im s| > 50). Requires Re s > 0 and tol >= 1e-12.
Complex mellin_numeric(const SmoothWeight& w, Complex s, double tol = 1e-12);

/// 1/s. Throws PoleError at s = 0.
Complex mellin_indicator(Complex s);

}  // namespace charsum
