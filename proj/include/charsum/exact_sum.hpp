#pragma once

// Exact and smoothed double character sums over odd m <= X, n <= Y, and
// finite truncations of the associated double Dirichlet series.
//
// X and Y may be real: "m <= X" is a real comparison, so an odd integer X
// contributes m = X itself.

#include <cstdint>
#include <optional>

#include "charsum/char_arith.hpp"
#include "charsum/special.hpp"
#include "charsum/weights.hpp"

namespace charsum {

enum class SumAlgorithm { naive, periodic, automatic };

/// "naive", "periodic", "auto".
SumAlgorithm parse_algorithm(const char* name);
const char* algorithm_name(SumAlgorithm a);

struct SumRequest {
  double X = 1.0;
  double Y = 1.0;
  SumAlgorithm algorithm = SumAlgorithm::automatic;
  std::optional<SmoothWeight> weight_m;
  std::optional<SmoothWeight> weight_n;

  /// X, Y >= 1; both weights or neither.
  void validate() const;
};

struct TruncationBox {
  std::int64_t M = 1;
  std::int64_t N = 1;
};

/// periodic when Y < X, otherwise naive.
SumAlgorithm resolve_algorithm(double X, double Y, SumAlgorithm requested);

/// sum_{m <= X odd} sum_{n <= Y odd} (m/n), exactly. Rows are evaluated in
/// parallel (CHARSUM_THREADS) and combined in index order.
std::int64_t double_char_sum(const SumRequest& req);
std::int64_t double_char_sum(double X, double Y, SumAlgorithm algorithm = SumAlgorithm::automatic);

/// One row: sum_{m <= X odd} (m/n) for odd n >= 1.
std::int64_t row_sum(std::int64_t n, double X, SumAlgorithm algorithm);

/// sum (m/n) phi(m/X) psi(n/Y) over odd m, n with compensated summation.
double smoothed_char_sum(const SumRequest& req);

/// sum_{m <= M odd} sum_{n <= N odd} (m/n) m^{-w} n^{-s}; Re s, Re w >= 2.
Complex truncated_A(Complex s, Complex w, TruncationBox box);

/// Majorant for |A(s, w) - truncated_A(s, w, box)|:
///   sum_{m > M} m^{-a} zeta(b) + zeta(a) sum_{n > N} n^{-b},  a = Re w, b = Re s,
/// with the tails bounded by the integral test.
double truncated_A_tail_bound(double re_s, double re_w, TruncationBox box);

/// zeta2(2s + 2w - 1) sum_{m <= M} sum_{n <= N} chi_m(n) psi(n) psi'(m) m^{-w} n^{-s},
/// odd m, n, outer loop over m.
Complex truncated_Z_forward(Complex s, Complex w, Mod8Character psi, Mod8Character psi_prime,
                            TruncationBox box);

/// The same box summed the other way round with tilde-chi_n(m) in place of
/// chi_m(n) (equal term by term by reciprocity), outer loop over n.
Complex truncated_Z_reordered(Complex s, Complex w, Mod8Character psi, Mod8Character psi_prime,
                              TruncationBox box);

}  // namespace charsum
