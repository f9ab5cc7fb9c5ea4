#pragma once

// Exact integer arithmetic for Kronecker symbols, the four real characters
// modulo 8, the reciprocity-adjusted character tilde-chi, and squarefree
// decomposition.
//
// Domain: the lower argument of every symbol is restricted to n >= 1. The
// exact sums only ever need positive odd lower arguments; non-positive
// lower arguments are rejected with DomainError rather than extended.

#include <cstdint>
#include <vector>

namespace charsum {

/// A value of a real character: always -1, 0 or +1.
class SymbolValue {
 public:
  constexpr SymbolValue() = default;
  constexpr explicit SymbolValue(int v) : value_(v < 0 ? -1 : (v > 0 ? 1 : 0)) {}
  constexpr int value() const { return value_; }
  constexpr operator int() const { return value_; }  // NOLINT: arithmetic use is the point
  friend constexpr bool operator==(SymbolValue a, SymbolValue b) = default;

 private:
  int value_ = 0;
};

/// Labels of the characters psi_j(n) = (j/n) of conductor dividing 8.
enum class Mod8Character : int { principal = 1, minus_one = -1, two = 2, minus_two = -2 };

/// Parses 1, -1, 2, -2; anything else is a DomainError.
Mod8Character mod8_character_from_int(int j);

/// Kronecker symbol (m/n) for n >= 1. Binary (division-light) Jacobi
/// algorithm plus the (m/2) convention for even n.
SymbolValue kronecker(std::int64_t m, std::int64_t n);

/// Jacobi symbol (a/n) for odd n >= 1 and a >= 0; no argument checking.
/// Hot-path kernel behind kronecker().
int jacobi_odd(std::uint64_t a, std::uint64_t n);

/// psi_j(n) = (j/n) for odd n >= 1; depends only on n mod 8.
SymbolValue psi_character(Mod8Character j, std::int64_t n);

/// tilde-chi_n(m): chi_n(m) if n = 1 mod 4, chi_{-n}(m) if n = 3 mod 4,
/// where chi_k(m) = (k/m). Requires n odd positive and m >= 1.
SymbolValue chi_tilde(std::int64_t n, std::int64_t m);

/// m = m0 * m1^2 with m0 squarefree.
struct SquarefreeDecomposition {
  std::uint64_t m0 = 1;
  std::uint64_t m1 = 1;
};

/// Trial division up to sqrt(m). Requires m >= 1.
SquarefreeDecomposition squarefree_decompose(std::int64_t m);

/// Smallest-prime-factor table for bulk decomposition of 1..limit.
class SmallestPrimeFactorSieve {
 public:
  explicit SmallestPrimeFactorSieve(std::uint32_t limit);

  std::uint32_t limit() const { return limit_; }
  /// spf(1) == 1.
  std::uint32_t smallest_factor(std::uint32_t n) const { return spf_.at(n); }
  SquarefreeDecomposition decompose(std::uint32_t m) const;

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
};

}  // namespace charsum
