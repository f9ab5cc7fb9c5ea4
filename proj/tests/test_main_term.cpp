#include <cmath>

#include "charsum/errors.hpp"
#include "charsum/main_term.hpp"
#include "doctest.h"

using namespace charsum;

namespace {

// C(alpha) from an independent 30-digit evaluation of the k-series.
struct Reference {
  double alpha;
  double value;
};
constexpr Reference kC[] = {
    {0.125, 0.36141066066478227935}, {0.25, 0.52258450159711124949}, {0.5, 0.77260917190867769915},
    {0.7, 0.93689223633845124114},   {1.0, 1.190265442264915544},    {2.0, 1.8785516771507593737},
    {4.0, 4.0943951023930955563},    {8.0, 8.0523586464070952796},
};
constexpr double kZeta3 = 1.2020569031595942854;

ContourSpec fixed(double sigma, double T, TailModel tail) {
  ContourSpec spec;
  spec.sigma = sigma;
  spec.T = T;
  spec.tail = tail;
  return spec;
}

}  // namespace

TEST_CASE("C(alpha) matches frozen reference values") {
  for (const auto& r : kC) {
    CAPTURE(r.alpha);
    CHECK(std::abs(C_alpha(r.alpha) - r.value) <= 1e-9);
  }
}

TEST_CASE("C(alpha): both integral forms agree") {
  OscillatorySpec spec;
  spec.K = 50;
  CHECK(std::abs(C_alpha(0.7, spec) - C_alpha_yform(0.7, spec)) <= 1e-10);
  for (const double a : {0.01, 0.3, 3.0, 30.0})
    CHECK(std::abs(C_alpha(a) - C_alpha_yform(a)) <= 1e-9);
}

TEST_CASE("C(alpha) asymptotics and term counts") {
  CHECK(std::abs(C_alpha(1e3) - 1e3) <= 10.0 / 1e3);
  CHECK(std::abs(C_alpha(1e-4) - asymptotic_small(1e-4)) <= 10.0 * std::pow(1e-4, 2.5));
  CHECK(C_alpha_terms(1e-3, 1e-10) > C_alpha_terms(1.0, 1e-10));
  OscillatorySpec bad;
  bad.tol = 1e-12;
  CHECK_THROWS_AS(C_alpha(1.0, bad), DomainError);
  CHECK_THROWS_AS(C_alpha(-1.0), DomainError);
}

TEST_CASE("D(alpha) at the default tolerance matches C(alpha)") {
  for (const double a : {0.25, 1.0}) {
    CAPTURE(a);
    const auto r = D_alpha_detailed(a);
    CHECK(std::abs(r.value - (a == 1.0 ? kC[4].value : kC[1].value)) <= 1e-8);
    CHECK(r.imag_residual <= 1e-7);
    CHECK(r.height >= 32.0);
    CHECK(r.height <= kMaxContourHeight);
  }
}

TEST_CASE("D(alpha) tail models agree at a common height") {
  const double plain = D_alpha(1.0, fixed(0.75, 2048, TailModel::none));
  const double tapered = D_alpha(1.0, fixed(0.75, 2048, TailModel::stationary_phase));
  CHECK(std::abs(plain - kC[4].value) <= 1e-5);
  CHECK(std::abs(tapered - kC[4].value) <= 1e-8);
}

TEST_CASE("contour shift invariance and residue capture") {
  const double a = D_alpha(1.0, fixed(0.6, 1024, TailModel::stationary_phase));
  const double b = D_alpha(1.0, fixed(0.9, 1024, TailModel::stationary_phase));
  CHECK(std::abs(a - b) <= 1e-8);
  for (const double alpha : {0.25, 1.0, 4.0}) {
    CAPTURE(alpha);
    CHECK(D_residue_shift_check(alpha, 1024) <= 1e-7);
  }
}

TEST_CASE("D(alpha) asymptotics") {
  ContourSpec tight;
  tight.tol = 1e-11;
  CHECK(std::abs(D_alpha(1e-4, tight) - asymptotic_small(1e-4)) <= 10.0 * std::pow(1e-4, 2.5));
  ContourSpec loose;
  loose.tol = 1e-6;
  CHECK(std::abs(D_alpha(1e3, loose) - 1e3) <= 1e-2);
}

TEST_CASE("contour spec validation") {
  CHECK_THROWS_AS(D_alpha(1.0, fixed(0.5, 64, TailModel::none)), DomainError);
  CHECK_THROWS_AS(D_alpha(1.0, fixed(1.2, 64, TailModel::none)), DomainError);
  CHECK_THROWS_AS(D_alpha(1.0, fixed(0.75, 4, TailModel::none)), DomainError);
  ContourSpec spec;
  spec.tol = 1e-13;
  CHECK_THROWS_AS(D_alpha(1.0, spec), DomainError);
  CHECK_THROWS_AS(D_alpha(0.0), DomainError);
  CHECK(parse_tail_model("none") == TailModel::none);
  CHECK(std::string(tail_model_name(TailModel::stationary_phase)) == "stationary");
  CHECK_THROWS_AS(parse_tail_model("filon"), DomainError);
}

TEST_CASE("smoothed main term") {
  const auto ind = SmoothWeight::indicator();
  for (const double a : {0.5, 2.0}) {
    const auto spec = fixed(0.75, 512, TailModel::stationary_phase);
    CHECK(std::abs(D_smoothed(a, ind, ind, spec) - D_alpha(a, spec)) <= 1e-8);
  }
  ContourSpec loose;
  loose.tol = 1e-4;
  const auto w = SmoothWeight::plateau(40);
  const double dev = std::abs(D_smoothed(1.0, w, w, loose) - kC[4].value);
  CHECK(dev <= 10.0 / std::sqrt(40.0));
  CHECK(dev > 0.0);
}

TEST_CASE("diagonal residues") {
  const Complex s(0.75);
  const Complex expected = std::sqrt(kPi) * std::sin(3.0 * kPi / 8.0) * charsum::gamma(Complex(0.25)) *
                           charsum::zeta(Complex(0.5)) / (2.0 * std::pow(2.0 * kPi, 0.75));
  CHECK(std::abs(residue_Z_diagonal(s) - expected) <= 1e-12);
  CHECK(std::abs(residue_A_diagonal(s) - residue_Z_diagonal(s) * 8.0 / (kPi * kPi)) <= 1e-12);
  CHECK_THROWS_AS(residue_Z_diagonal(Complex(0.5)), PoleError);
  CHECK_THROWS_AS(residue_A_diagonal(Complex(1.0)), PoleError);
  CHECK(std::isfinite(std::abs(residue_A_diagonal(Complex(0.6, 1.0)))));
  CHECK_THROWS_AS(residue_lines_s1_w1(Complex(0.5)), PoleError);
  CHECK(std::abs(residue_lines_s1_w1(Complex(1.0)) - (kPi * kPi / 8.0) / (2.0 * 0.875 * kZeta3)) <= 1e-12);
}

TEST_CASE("closed-form helpers") {
  CHECK(asymptotic_small(0.0) == 0.0);
  CHECK(asymptotic_small(1.0) == doctest::Approx(1.0 + kPi / 18.0).epsilon(1e-15));
  CHECK(asymptotic_large(5.0) == 5.0);
  CHECK(pv_main(100, 0) == 0.0);
  CHECK(pv_main(kPi * kPi, 4) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(pv_main(1e5, 1e2) == doctest::Approx(2e6 / (kPi * kPi)).epsilon(1e-15));
  CHECK_THROWS_AS(main_term(0.0, 10.0), DomainError);
}

TEST_CASE("fhat and the contour identity") {
  CHECK(std::abs(fhat_closed_form(Complex(0.5)) - kZeta3 / 2.0) <= 1e-12);
  CHECK(std::isfinite(std::abs(fhat_closed_form(Complex(0.25)))));
  CHECK_THROWS_AS(fhat_closed_form(Complex(1.5)), DomainError);
  CHECK(toshow_residual(Complex(0.25)) <= 1e-9);
  CHECK(toshow_residual(Complex(0.25, 1.0)) <= 1e-9);
  CHECK(toshow_residual(Complex(0.25, 5.0)) <= 1e-8);
  for (double t = 0.0; t <= 30.0; t += 3.0) REQUIRE(toshow_residual(Complex(0.25, t)) <= 1e-8);
}
