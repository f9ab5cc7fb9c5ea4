#include <cmath>
#include <cstdlib>
#include <random>

#include "charsum/errors.hpp"
#include "charsum/exact_sum.hpp"
#include "charsum/parallel.hpp"
#include "doctest.h"

using namespace charsum;

namespace {

std::int64_t brute(std::int64_t X, std::int64_t Y) {
  std::int64_t s = 0;
  for (std::int64_t m = 1; m <= X; m += 2)
    for (std::int64_t n = 1; n <= Y; n += 2) s += kronecker(m, n).value();
  return s;
}

}  // namespace

TEST_CASE("double sums: frozen values") {
  CHECK(double_char_sum(3, 3) == 3);
  CHECK(double_char_sum(1, 9) == 5);
  CHECK(double_char_sum(1, 1) == 1);
  CHECK(double_char_sum(3, 3, SumAlgorithm::naive) == 3);
  CHECK(double_char_sum(3, 3, SumAlgorithm::periodic) == 3);
  CHECK(double_char_sum(1000, 1000) == brute(1000, 1000));
}

TEST_CASE("real bounds are inclusive and floor-based") {
  CHECK(double_char_sum(3.0, 3.0) == double_char_sum(3.9, 3.9));
  CHECK(double_char_sum(2.99, 3.0) == double_char_sum(1.0, 3.0));
  CHECK(double_char_sum(99.5, 99.5) == double_char_sum(99, 99));
}

TEST_CASE("naive and periodic agree (property)") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dist(1, 3000);
  for (int i = 0; i < 40; ++i) {
    const double X = dist(rng);
    const double Y = dist(rng);
    REQUIRE(double_char_sum(X, Y, SumAlgorithm::naive) == double_char_sum(X, Y, SumAlgorithm::periodic));
  }
  for (const double X : {10.0, 31.0, 100.0, 317.0})
    for (const double Y : {10.0, 31.0, 100.0, 317.0})
      REQUIRE(double_char_sum(X, Y) == brute(static_cast<std::int64_t>(X), static_cast<std::int64_t>(Y)));
}

TEST_CASE("rows over squares count every coprime m") {
  for (std::int64_t k = 1; k <= 21; k += 2) {
    const std::int64_t n = k * k;
    std::int64_t coprime = 0;
    for (std::int64_t m = 1; m <= 500; m += 2) coprime += std::gcd(m, k) == 1 ? 1 : 0;
    REQUIRE(row_sum(n, 500, SumAlgorithm::periodic) == coprime);
    REQUIRE(row_sum(n, 500, SumAlgorithm::naive) == coprime);
  }
}

TEST_CASE("automatic algorithm choice") {
  CHECK(resolve_algorithm(1000, 10, SumAlgorithm::automatic) == SumAlgorithm::periodic);
  CHECK(resolve_algorithm(10, 1000, SumAlgorithm::automatic) == SumAlgorithm::naive);
  CHECK(resolve_algorithm(100, 100, SumAlgorithm::automatic) == SumAlgorithm::naive);
  CHECK(resolve_algorithm(1000, 10, SumAlgorithm::naive) == SumAlgorithm::naive);
  CHECK(parse_algorithm("auto") == SumAlgorithm::automatic);
  CHECK(std::string(algorithm_name(SumAlgorithm::periodic)) == "periodic");
  CHECK_THROWS_AS(parse_algorithm("fft"), DomainError);
}

TEST_CASE("request validation and overflow guard") {
  CHECK_THROWS_AS(double_char_sum(0.5, 10), DomainError);
  SumRequest req;
  req.X = 10;
  req.Y = 10;
  req.weight_m = SmoothWeight::plateau(10);
  CHECK_THROWS_AS(req.validate(), DomainError);
  CHECK_THROWS_AS(double_char_sum(1e10, 1e10), OverflowError);
}

TEST_CASE("thread count does not change the result") {
  const std::int64_t reference = double_char_sum(4000, 3000);
  ::setenv("CHARSUM_THREADS", "1", 1);
  CHECK(worker_count() == 1);
  CHECK(double_char_sum(4000, 3000) == reference);
  ::setenv("CHARSUM_THREADS", "3", 1);
  CHECK(worker_count() == 3);
  CHECK(double_char_sum(4000, 3000) == reference);
  ::unsetenv("CHARSUM_THREADS");
}

TEST_CASE("smoothed sums") {
  SumRequest req;
  req.X = 3;
  req.Y = 3;
  req.weight_m = SmoothWeight::plateau(10);
  req.weight_n = SmoothWeight::plateau(10);
  const double s = smoothed_char_sum(req);
  CHECK(s >= 0.0);
  CHECK(s <= 3.0);

  // Every odd lattice point below 100 sits on the plateau when U = 200.
  req.X = 100;
  req.Y = 100;
  req.weight_m = SmoothWeight::plateau(200);
  req.weight_n = SmoothWeight::plateau(200);
  CHECK(smoothed_char_sum(req) == static_cast<double>(double_char_sum(99.5, 99.5)));

  req.X = 2000;
  req.Y = 2000;
  req.weight_m = SmoothWeight::plateau(40);
  req.weight_n = SmoothWeight::plateau(40);
  const double diff = std::abs(smoothed_char_sum(req) - double_char_sum(2000, 2000));
  const double bound = 10.0 * 2.0 * std::pow(2000.0, 1.5) * std::log(2000.0 * 2000.0) / 40.0;
  CHECK(diff <= bound);
}

TEST_CASE("truncated double Dirichlet series") {
  CHECK(std::abs(truncated_A(4.0, 4.0, {1, 1}) - 1.0) <= 1e-15);
  const auto small = truncated_A(3.0, 3.0, {2001, 2001});
  const auto large = truncated_A(3.0, 3.0, {4001, 4001});
  CHECK(std::abs(large - small) <= truncated_A_tail_bound(3.0, 3.0, {2001, 2001}));
  CHECK_THROWS_AS(truncated_A(1.5, 3.0, {10, 10}), DomainError);

  const auto p1 = Mod8Character::principal;
  const Complex s(3.0, 0.0);
  CHECK(std::abs(truncated_Z_forward(s, s, p1, p1, {1, 1}) - zeta2(2.0 * s + 2.0 * s - 1.0)) <= 1e-15);
  CHECK(std::abs(truncated_Z_forward(s, s, p1, p1, {101, 101}) -
                 truncated_Z_reordered(s, s, p1, p1, {101, 101})) <= 1e-13);
  const Complex w(4.0, 0.0);
  CHECK(std::abs(truncated_Z_forward(s, w, Mod8Character::minus_one, Mod8Character::two, {501, 501}) -
                 truncated_Z_reordered(s, w, Mod8Character::minus_one, Mod8Character::two, {501, 501})) <=
        1e-12);
  const Complex sc(2.5, 7.0);
  const Complex wc(3.0, -2.0);
  CHECK(std::abs(truncated_Z_forward(sc, wc, Mod8Character::minus_two, p1, {301, 201}) -
                 truncated_Z_reordered(sc, wc, Mod8Character::minus_two, p1, {301, 201})) <= 1e-12);
}
