#include <cmath>

#include "charsum/errors.hpp"
#include "charsum/weights.hpp"
#include "doctest.h"

using namespace charsum;

TEST_CASE("plateau values") {
  const auto w = SmoothWeight::plateau(10);
  CHECK(w(0.5) == 1.0);
  CHECK(w(-0.2) == 0.0);
  CHECK(w(1.3) == 0.0);
  CHECK(w(0.05) > 0.0);
  CHECK(w(0.05) < 1.0);
  CHECK(w(0.1) == 1.0);
  CHECK(w(0.9) == 1.0);
  CHECK(w(0.02) == doctest::Approx(w(0.98)).epsilon(1e-12));
  CHECK_THROWS_AS(SmoothWeight::plateau(3.0), DomainError);
}

TEST_CASE("indicator weight") {
  const auto w = SmoothWeight::indicator();
  CHECK(w.kind() == WeightKind::indicator);
  CHECK(std::isinf(w.U()));
  CHECK(w(0.5) == 1.0);
  CHECK(w(0.0) == 0.0);
}

TEST_CASE("smooth step") {
  CHECK(smooth_step(-1.0) == 0.0);
  CHECK(smooth_step(0.0) == 0.0);
  CHECK(smooth_step(1.0) == 1.0);
  CHECK(smooth_step(0.5) == doctest::Approx(0.5).epsilon(1e-15));
  for (double t = 0.01; t < 1.0; t += 0.01) {
    REQUIRE(smooth_step(t) + smooth_step(1.0 - t) == doctest::Approx(1.0).epsilon(1e-14));
    REQUIRE(smooth_step(t) <= smooth_step(t + 0.01));
  }
}

TEST_CASE("Mellin transform of the indicator") {
  CHECK(std::abs(mellin_numeric(SmoothWeight::indicator(), Complex(2.0)) - 0.5) <= 1e-15);
  const Complex s(0.75, 5.0);
  CHECK(std::abs(mellin_numeric(SmoothWeight::indicator(), s) - 1.0 / s) <= 1e-15);
  CHECK(std::abs(mellin_indicator(Complex(1.0)) - 1.0) <= 1e-15);
  CHECK(std::abs(mellin_indicator(Complex(0.5)) - 2.0) <= 1e-15);
  CHECK(std::abs(mellin_indicator(Complex(0.75, 1.0)) - 1.0 / Complex(0.75, 1.0)) <= 1e-15);
  CHECK_THROWS_AS(mellin_indicator(Complex(0.0)), PoleError);
}

TEST_CASE("Mellin transform of the plateau at s = 1") {
  const auto w = SmoothWeight::plateau(20);
  const Complex fine = mellin_numeric(w, Complex(1.0), 1e-12);
  const Complex coarse = mellin_numeric(w, Complex(1.0), 1e-8);
  CHECK(std::abs(fine.imag()) <= 1e-14);
  CHECK(fine.real() <= 1.0);
  CHECK(fine.real() >= 1.0 - 2.0 / 20.0);
  CHECK(std::abs(fine - coarse) <= 1e-8);
  // Symmetry of the two bands: the transition correction is exactly 1/U.
  CHECK(fine.real() == doctest::Approx(1.0 - 1.0 / 20.0).epsilon(1e-12));
}

TEST_CASE("Mellin transform against brute-force quadrature") {
  const auto w = SmoothWeight::plateau(8);
  for (const Complex s : {Complex(0.5), Complex(0.75, 3.0), Complex(1.5, -20.0)}) {
    // Midpoint rule in x on a fine grid; the integrand is smooth and bounded.
    const int n = 400000;
    Complex brute = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = (i + 0.5) / n;
      brute += w(x) * std::pow(x, s - 1.0);
    }
    brute /= static_cast<double>(n);
    REQUIRE(std::abs(mellin_numeric(w, s) - brute) <= 1e-8);
  }
}

TEST_CASE("Mellin transform conjugate symmetry and decay (property)") {
  const auto w = SmoothWeight::plateau(16);
  for (double t = 0.0; t <= 200.0; t += 25.0) {
    const Complex s(0.75, t);
    const Complex a = mellin_numeric(w, s);
    const Complex b = mellin_numeric(w, std::conj(s));
    REQUIRE(std::abs(a - std::conj(b)) <= 1e-11);
    REQUIRE(std::abs(a) <= 1.0 / 0.75 + 1e-12);
  }
  CHECK(std::abs(mellin_numeric(w, Complex(0.75, 400.0))) < 1e-3);
}

TEST_CASE("Mellin transform domain") {
  const auto w = SmoothWeight::plateau(16);
  CHECK_THROWS_AS(mellin_numeric(w, Complex(0.0, 1.0)), DomainError);
  CHECK_THROWS_AS(mellin_numeric(w, Complex(1.0), 1e-14), DomainError);
}
