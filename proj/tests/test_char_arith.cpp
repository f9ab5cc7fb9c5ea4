#include <cstdint>
#include <random>

#include "charsum/char_arith.hpp"
#include "charsum/errors.hpp"
#include "doctest.h"

using namespace charsum;

namespace {

// Euler's criterion, for an independent oracle at odd primes.
int legendre_by_power(std::int64_t a, std::int64_t p) {
  std::int64_t r = ((a % p) + p) % p;
  if (r == 0) return 0;
  std::int64_t result = 1;
  std::int64_t base = r;
  for (std::int64_t e = (p - 1) / 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result == 1 ? 1 : -1;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("kronecker: frozen values") {
  CHECK(kronecker(1, 7).value() == 1);
  CHECK(kronecker(3, 3).value() == 0);
  CHECK(kronecker(3, 5).value() == -1);
  CHECK(kronecker(2, 7).value() == 1);
  CHECK(kronecker(2, 3).value() == -1);
  CHECK(kronecker(-1, 3).value() == -1);
  CHECK(kronecker(-1, 5).value() == 1);
  CHECK(kronecker(0, 1).value() == 1);
  CHECK(kronecker(0, 3).value() == 0);
  CHECK(kronecker(5, 1).value() == 1);
  CHECK(kronecker(1001, 9907).value() == -1);
}

TEST_CASE("kronecker: lower argument must be positive") {
  CHECK_THROWS_AS(kronecker(3, 0), DomainError);
  CHECK_THROWS_AS(kronecker(3, -5), DomainError);
}

TEST_CASE("kronecker: even lower argument uses the (m/2) rule") {
  CHECK(kronecker(1, 2).value() == 1);
  CHECK(kronecker(7, 2).value() == 1);
  CHECK(kronecker(3, 2).value() == -1);
  CHECK(kronecker(5, 2).value() == -1);
  CHECK(kronecker(4, 2).value() == 0);
  CHECK(kronecker(3, 10).value() == kronecker(3, 2).value() * kronecker(3, 5).value());
}

TEST_CASE("kronecker agrees with Euler's criterion at odd primes") {
  for (std::int64_t p = 3; p < 400; p += 2) {
    if (!is_prime(p)) continue;
    for (std::int64_t a = -50; a <= 50; ++a) {
      REQUIRE_MESSAGE(kronecker(a, p).value() == legendre_by_power(a, p), "a=" << a << " p=" << p);
    }
  }
}

TEST_CASE("jacobi_odd matches kronecker for non-negative tops") {
  for (std::uint64_t n = 1; n < 200; n += 2)
    for (std::uint64_t a = 0; a < 200; ++a)
      REQUIRE(jacobi_odd(a, n) == kronecker(static_cast<std::int64_t>(a), static_cast<std::int64_t>(n)).value());
}

TEST_CASE("psi characters") {
  CHECK(psi_character(Mod8Character::principal, 5).value() == 1);
  CHECK(psi_character(Mod8Character::minus_one, 3).value() == -1);
  CHECK(psi_character(Mod8Character::two, 7).value() == 1);
  CHECK(psi_character(Mod8Character::minus_two, 3).value() == 1);
  CHECK(psi_character(Mod8Character::minus_two, 5).value() == -1);
  CHECK_THROWS_AS(psi_character(Mod8Character::two, 4), DomainError);
  CHECK(mod8_character_from_int(-2) == Mod8Character::minus_two);
  CHECK_THROWS_AS(mod8_character_from_int(3), DomainError);
}

TEST_CASE("psi characters depend only on n mod 8") {
  for (const int j : {1, -1, 2, -2}) {
    const auto c = mod8_character_from_int(j);
    for (std::int64_t n = 1; n < 400; n += 2)
      REQUIRE(psi_character(c, n).value() == psi_character(c, n + 8).value());
  }
}

TEST_CASE("chi_tilde: frozen values and domain") {
  CHECK(chi_tilde(5, 3).value() == -1);
  CHECK(chi_tilde(3, 3).value() == 0);
  for (std::int64_t m = 1; m < 50; ++m) CHECK(chi_tilde(1, m).value() == 1);
  CHECK_THROWS_AS(chi_tilde(4, 3), DomainError);
  CHECK_THROWS_AS(chi_tilde(5, 0), DomainError);
  CHECK_THROWS_AS(chi_tilde(-5, 3), DomainError);
}

TEST_CASE("reciprocity over odd m, n <= 301") {
  for (std::int64_t m = 1; m <= 301; m += 2)
    for (std::int64_t n = 1; n <= 301; n += 2)
      REQUIRE(kronecker(m, n).value() == chi_tilde(n, m).value());
}

TEST_CASE("kronecker is multiplicative in the top argument (property)") {
  std::mt19937_64 rng(20261018);
  std::uniform_int_distribution<std::int64_t> top(-100000, 100000);
  std::uniform_int_distribution<std::int64_t> bottom(0, 50000);
  for (int i = 0; i < 5000; ++i) {
    const std::int64_t a = top(rng);
    const std::int64_t b = top(rng);
    const std::int64_t n = 2 * bottom(rng) + 1;
    REQUIRE(kronecker(a * b, n).value() == kronecker(a, n).value() * kronecker(b, n).value());
  }
}

TEST_CASE("squarefree decomposition") {
  auto d = squarefree_decompose(1);
  CHECK(d.m0 == 1);
  CHECK(d.m1 == 1);
  d = squarefree_decompose(12);
  CHECK(d.m0 == 3);
  CHECK(d.m1 == 2);
  d = squarefree_decompose(45);
  CHECK(d.m0 == 5);
  CHECK(d.m1 == 3);
  d = squarefree_decompose(1024);
  CHECK(d.m0 == 1);
  CHECK(d.m1 == 32);
  CHECK_THROWS_AS(squarefree_decompose(0), DomainError);
}

TEST_CASE("sieve decomposition agrees with trial division") {
  const SmallestPrimeFactorSieve sieve(20000);
  CHECK(sieve.smallest_factor(1) == 1);
  CHECK(sieve.smallest_factor(91) == 7);
  for (std::uint32_t m = 1; m <= 20000; ++m) {
    const auto a = sieve.decompose(m);
    const auto b = squarefree_decompose(m);
    REQUIRE(a.m0 == b.m0);
    REQUIRE(a.m1 == b.m1);
    REQUIRE(a.m0 * a.m1 * a.m1 == m);
  }
}
