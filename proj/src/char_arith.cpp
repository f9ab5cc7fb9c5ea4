#include "charsum/char_arith.hpp"

#include <bit>
#include <string>
#include <utility>

#include "charsum/errors.hpp"

namespace charsum {

int jacobi_odd(std::uint64_t a, std::uint64_t n) {
  // Binary Jacobi: strip factors of two with (2/n), swap with reciprocity,
  // reduce by subtraction instead of division.
  int sign = 1;
  if (a >= n) a %= n;
  while (a != 0) {
    const int twos = std::countr_zero(a);
    a >>= twos;
    const std::uint64_t r8 = n & 7u;
    if ((twos & 1) && (r8 == 3 || r8 == 5)) sign = -sign;
    if (a < n) {
      if ((a & n & 3u) == 3u) sign = -sign;
      std::swap(a, n);
    }
    a -= n;  // both odd, a >= n: difference is even
  }
  return n == 1 ? sign : 0;
}

Mod8Character mod8_character_from_int(int j) {
  switch (j) {
    case 1: return Mod8Character::principal;
    case -1: return Mod8Character::minus_one;
    case 2: return Mod8Character::two;
    case -2: return Mod8Character::minus_two;
    default: throw DomainError("character label must be one of 1, -1, 2, -2; got " + std::to_string(j));
  }
}

SymbolValue kronecker(std::int64_t m, std::int64_t n) {
  if (n <= 0) throw DomainError("kronecker: lower argument must be >= 1, got " + std::to_string(n));
  int sign = 1;
  // Even part of n: (m/2) is 0 for even m, +1 for m = +-1 mod 8, -1 for m = +-3 mod 8.
  const int twos = std::countr_zero(static_cast<std::uint64_t>(n));
  if (twos > 0) {
    if ((m & 1) == 0) return SymbolValue(0);
    const std::int64_t r8 = ((m % 8) + 8) % 8;
    if ((twos & 1) && (r8 == 3 || r8 == 5)) sign = -sign;
  }
  const auto odd_n = static_cast<std::uint64_t>(n) >> twos;
  // (m/n) for m < 0: (-1/n) (|m|/n), and (-1/n) = -1 iff n = 3 mod 4.
  std::uint64_t a;
  if (m < 0) {
    if ((odd_n & 3u) == 3u) sign = -sign;
    a = static_cast<std::uint64_t>(-(m + 1)) + 1u;
  } else {
    a = static_cast<std::uint64_t>(m);
  }
  return SymbolValue(sign * jacobi_odd(a % odd_n, odd_n));
}

SymbolValue psi_character(Mod8Character j, std::int64_t n) {
  if ((n & 1) == 0) throw DomainError("psi_character: n must be odd, got " + std::to_string(n));
  const std::int64_t r = ((n % 8) + 8) % 8;
  const int minus_one = (r % 4 == 1) ? 1 : -1;
  const int two = (r == 1 || r == 7) ? 1 : -1;
  switch (j) {
    case Mod8Character::principal: return SymbolValue(1);
    case Mod8Character::minus_one: return SymbolValue(minus_one);
    case Mod8Character::two: return SymbolValue(two);
    case Mod8Character::minus_two: return SymbolValue(minus_one * two);
  }
  throw DomainError("psi_character: invalid character label");
}

SymbolValue chi_tilde(std::int64_t n, std::int64_t m) {
  if (n <= 0 || (n & 1) == 0) {
    throw DomainError("chi_tilde: n must be odd and positive, got " + std::to_string(n));
  }
  if (m <= 0) throw DomainError("chi_tilde: m must be >= 1, got " + std::to_string(m));
  return (n & 3) == 1 ? kronecker(n, m) : kronecker(-n, m);
}

SquarefreeDecomposition squarefree_decompose(std::int64_t m) {
  if (m <= 0) throw DomainError("squarefree_decompose: m must be >= 1, got " + std::to_string(m));
  auto rest = static_cast<std::uint64_t>(m);
  SquarefreeDecomposition d;
  for (std::uint64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) d.m1 *= p;
    if (e & 1) d.m0 *= p;
  }
  d.m0 *= rest;
  return d;
}

SmallestPrimeFactorSieve::SmallestPrimeFactorSieve(std::uint32_t limit)
    : limit_(limit), spf_(static_cast<std::size_t>(limit) + 1, 0) {
  if (limit >= 1) spf_[1] = 1;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    spf_[i] = static_cast<std::uint32_t>(i);
    for (std::uint64_t k = i * i; k <= limit; k += i) {
      if (spf_[k] == 0) spf_[k] = static_cast<std::uint32_t>(i);
    }
  }
}

SquarefreeDecomposition SmallestPrimeFactorSieve::decompose(std::uint32_t m) const {
  if (m == 0 || m > limit_) {
    throw DomainError("SmallestPrimeFactorSieve::decompose: argument outside 1.." +
                      std::to_string(limit_));
  }
  SquarefreeDecomposition d;
  while (m > 1) {
    const std::uint32_t p = spf_[m];
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) d.m1 *= p;
    if (e & 1) d.m0 *= p;
  }
  return d;
}

}  // namespace charsum
