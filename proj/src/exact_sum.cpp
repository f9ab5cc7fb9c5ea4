#include "charsum/exact_sum.hpp"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "charsum/errors.hpp"
#include "charsum/parallel.hpp"

namespace charsum {
namespace {

// Sums of at most this many terms cannot leave the int64 range.
constexpr double kOverflowGuard = 9e18;

std::int64_t odd_count_upto(double X) {
  const auto top = static_cast<std::int64_t>(std::floor(X));
  return top <= 0 ? 0 : (top + 1) / 2;
}

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// Values of m -> (m/n) at m = 1, 3, ..., 2*len - 1, stored at index (m-1)/2.
// Completely multiplicative in m, so only primes need a Jacobi evaluation.
class RowCharacter {
 public:
  explicit RowCharacter(std::uint64_t limit) : spf_(limit + 1, 0) {
    for (std::uint64_t i = 3; i <= limit; i += 2) {
      if (spf_[i] != 0) continue;
      spf_[i] = static_cast<std::uint32_t>(i);
      for (std::uint64_t k = i * i; k <= limit; k += 2 * i) {
        if (spf_[k] == 0) spf_[k] = static_cast<std::uint32_t>(i);
      }
    }
  }

  void fill(std::uint64_t n, std::size_t len, std::vector<std::int8_t>& out) const {
    out.resize(len);
    if (len == 0) return;
    out[0] = 1;
    for (std::size_t j = 1; j < len; ++j) {
      const std::uint64_t m = 2 * j + 1;
      const std::uint32_t p = spf_[m];
      if (p == m) {
        out[j] = static_cast<std::int8_t>(jacobi_odd(m % n, n));
      } else {
        out[j] = static_cast<std::int8_t>(out[(p - 1) / 2] * out[(m / p - 1) / 2]);
      }
    }
  }

 private:
  std::vector<std::uint32_t> spf_;
};

std::int64_t totient(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

bool is_square(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

std::int64_t naive_row(std::int64_t n, std::int64_t odd_count) {
  std::int64_t sum = 0;
  for (std::int64_t j = 0; j < odd_count; ++j) sum += kronecker(2 * j + 1, n);
  return sum;
}

// A full period of n odd m's sums to phi(n) if n is a square, else 0.
std::int64_t periodic_row(std::int64_t n, std::int64_t odd_count, const RowCharacter& chars,
                          std::vector<std::int8_t>& buffer) {
  const std::int64_t periods = odd_count / n;
  const std::int64_t rest = odd_count % n;
  std::int64_t sum = periods == 0 ? 0 : periods * (is_square(n) ? totient(n) : 0);
  chars.fill(static_cast<std::uint64_t>(n), static_cast<std::size_t>(rest), buffer);
  for (std::int64_t j = 0; j < rest; ++j) sum += buffer[static_cast<std::size_t>(j)];
  return sum;
}

void check_character_exponents(Complex s, Complex w, const char* what) {
  if (s.real() < 2.0 || w.real() < 2.0) {
    throw DomainError(std::string(what) + ": requires Re s >= 2 and Re w >= 2");
  }
}

void check_box(TruncationBox box) {
  if (box.M < 1 || box.N < 1) throw DomainError("TruncationBox: M and N must be >= 1");
}

std::vector<Complex> odd_inverse_powers(Complex s, std::int64_t upto) {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>((upto + 1) / 2));
  for (std::int64_t k = 1; k <= upto; k += 2) {
    out.push_back(std::exp(-s * std::log(static_cast<double>(k))));
  }
  return out;
}

}  // namespace

SumAlgorithm parse_algorithm(const char* name) {
  if (std::strcmp(name, "naive") == 0) return SumAlgorithm::naive;
  if (std::strcmp(name, "periodic") == 0) return SumAlgorithm::periodic;
  if (std::strcmp(name, "auto") == 0) return SumAlgorithm::automatic;
  throw DomainError(std::string("unknown algorithm '") + name + "' (naive, periodic, auto)");
}

const char* algorithm_name(SumAlgorithm a) {
  switch (a) {
    case SumAlgorithm::naive: return "naive";
    case SumAlgorithm::periodic: return "periodic";
    case SumAlgorithm::automatic: return "auto";
  }
  return "?";
}

void SumRequest::validate() const {
  if (!(X >= 1.0) || !(Y >= 1.0) || !std::isfinite(X) || !std::isfinite(Y)) {
    throw DomainError("SumRequest: X and Y must be finite and >= 1");
  }
  if (weight_m.has_value() != weight_n.has_value()) {
    throw DomainError("SumRequest: supply both weights or neither");
  }
}

SumAlgorithm resolve_algorithm(double X, double Y, SumAlgorithm requested) {
  if (requested != SumAlgorithm::automatic) return requested;
  return Y < X ? SumAlgorithm::periodic : SumAlgorithm::naive;
}

std::int64_t row_sum(std::int64_t n, double X, SumAlgorithm algorithm) {
  if (n < 1 || n % 2 == 0) throw DomainError("row_sum: n must be odd and positive");
  const std::int64_t count = odd_count_upto(X);
  if (resolve_algorithm(X, static_cast<double>(n), algorithm) == SumAlgorithm::naive) {
    return naive_row(n, count);
  }
  const RowCharacter chars(static_cast<std::uint64_t>(std::min(2 * n, 2 * count + 1)));
  std::vector<std::int8_t> buffer;
  return periodic_row(n, count, chars, buffer);
}

std::int64_t double_char_sum(const SumRequest& req) {
  req.validate();
  if (req.weight_m) throw DomainError("double_char_sum: request carries weights");
  if (req.X * req.Y >= kOverflowGuard) {
    throw OverflowError("double_char_sum: X*Y >= 9e18 may overflow 64-bit accumulation");
  }
  const SumAlgorithm algo = resolve_algorithm(req.X, req.Y, req.algorithm);
  const std::int64_t m_count = odd_count_upto(req.X);
  const std::int64_t n_count = odd_count_upto(req.Y);

  std::vector<std::int64_t> rows;
  if (algo == SumAlgorithm::naive) {
    // Rows indexed by m.
    rows = parallel_map<std::int64_t>(static_cast<std::size_t>(m_count), [&](std::size_t j) {
      const auto m = static_cast<std::int64_t>(2 * j + 1);
      std::int64_t sum = 0;
      for (std::int64_t n = 1; n <= 2 * n_count - 1; n += 2) sum += kronecker(m, n);
      return sum;
    });
  } else {
    const auto limit = static_cast<std::uint64_t>(std::min(2 * (2 * n_count - 1), 2 * m_count + 1));
    const RowCharacter chars(limit);
    rows = parallel_map<std::int64_t>(static_cast<std::size_t>(n_count), [&](std::size_t i) {
      thread_local std::vector<std::int8_t> buffer;
      return periodic_row(static_cast<std::int64_t>(2 * i + 1), m_count, chars, buffer);
    });
  }
  std::int64_t total = 0;
  for (const std::int64_t r : rows) total += r;
  return total;
}

std::int64_t double_char_sum(double X, double Y, SumAlgorithm algorithm) {
  SumRequest req;
  req.X = X;
  req.Y = Y;
  req.algorithm = algorithm;
  return double_char_sum(req);
}

double smoothed_char_sum(const SumRequest& req) {
  req.validate();
  if (!req.weight_m) throw DomainError("smoothed_char_sum: both weights are required");
  const SmoothWeight& phi = *req.weight_m;
  const SmoothWeight& psi = *req.weight_n;

  // Support is (0, 1): only m < X and n < Y contribute.
  std::vector<double> phi_m;
  for (std::int64_t m = 1; static_cast<double>(m) < req.X; m += 2) {
    phi_m.push_back(phi(static_cast<double>(m) / req.X));
  }
  std::vector<double> psi_n;
  for (std::int64_t n = 1; static_cast<double>(n) < req.Y; n += 2) {
    psi_n.push_back(psi(static_cast<double>(n) / req.Y));
  }
  const auto m_count = static_cast<std::int64_t>(phi_m.size());
  const std::int64_t max_n = 2 * static_cast<std::int64_t>(psi_n.size()) - 1;
  const RowCharacter chars(
      static_cast<std::uint64_t>(std::max<std::int64_t>(1, std::min(2 * max_n, 2 * m_count + 1))));

  const auto rows = parallel_map<double>(psi_n.size(), [&](std::size_t i) {
    if (psi_n[i] == 0.0) return 0.0;
    const auto n = static_cast<std::int64_t>(2 * i + 1);
    thread_local std::vector<std::int8_t> period;
    chars.fill(static_cast<std::uint64_t>(n), static_cast<std::size_t>(std::min(n, m_count)),
               period);
    KahanSum row;
    std::size_t k = 0;
    for (std::size_t j = 0; j < phi_m.size(); ++j) {
      if (period[k] != 0 && phi_m[j] != 0.0) row.add(period[k] * phi_m[j]);
      if (++k == static_cast<std::size_t>(n)) k = 0;
    }
    return psi_n[i] * row.sum;
  });
  KahanSum total;
  for (const double r : rows) total.add(r);
  return total.sum;
}

Complex truncated_A(Complex s, Complex w, TruncationBox box) {
  check_character_exponents(s, w, "truncated_A");
  check_box(box);
  const auto m_pow = odd_inverse_powers(w, box.M);
  const auto n_pow = odd_inverse_powers(s, box.N);
  Complex total{};
  for (std::size_t i = 0; i < m_pow.size(); ++i) {
    const auto m = static_cast<std::int64_t>(2 * i + 1);
    Complex row{};
    for (std::size_t j = 0; j < n_pow.size(); ++j) {
      const int chi = kronecker(m, static_cast<std::int64_t>(2 * j + 1));
      if (chi != 0) row += static_cast<double>(chi) * n_pow[j];
    }
    total += m_pow[i] * row;
  }
  return total;
}

double truncated_A_tail_bound(double re_s, double re_w, TruncationBox box) {
  if (re_s < 2.0 || re_w < 2.0) throw DomainError("truncated_A_tail_bound: requires Re >= 2");
  check_box(box);
  const auto tail = [](double a, double M) { return std::pow(M, 1.0 - a) / (a - 1.0); };
  const double zeta_s = zeta(re_s).real();
  const double zeta_w = zeta(re_w).real();
  return tail(re_w, static_cast<double>(box.M)) * zeta_s +
         zeta_w * tail(re_s, static_cast<double>(box.N));
}

Complex truncated_Z_forward(Complex s, Complex w, Mod8Character psi, Mod8Character psi_prime,
                            TruncationBox box) {
  check_character_exponents(s, w, "truncated_Z_forward");
  check_box(box);
  const auto m_pow = odd_inverse_powers(w, box.M);
  const auto n_pow = odd_inverse_powers(s, box.N);
  Complex total{};
  for (std::size_t i = 0; i < m_pow.size(); ++i) {
    const auto m = static_cast<std::int64_t>(2 * i + 1);
    Complex row{};
    for (std::size_t j = 0; j < n_pow.size(); ++j) {
      const auto n = static_cast<std::int64_t>(2 * j + 1);
      const int c = kronecker(m, n) * psi_character(psi, n);
      if (c != 0) row += static_cast<double>(c) * n_pow[j];
    }
    total += static_cast<double>(psi_character(psi_prime, m)) * m_pow[i] * row;
  }
  return zeta2(2.0 * s + 2.0 * w - 1.0) * total;
}

Complex truncated_Z_reordered(Complex s, Complex w, Mod8Character psi, Mod8Character psi_prime,
                              TruncationBox box) {
  check_character_exponents(s, w, "truncated_Z_reordered");
  check_box(box);
  const auto m_pow = odd_inverse_powers(w, box.M);
  const auto n_pow = odd_inverse_powers(s, box.N);
  Complex total{};
  for (std::size_t j = 0; j < n_pow.size(); ++j) {
    const auto n = static_cast<std::int64_t>(2 * j + 1);
    Complex row{};
    for (std::size_t i = 0; i < m_pow.size(); ++i) {
      const auto m = static_cast<std::int64_t>(2 * i + 1);
      const int c = chi_tilde(n, m) * psi_character(psi_prime, m);
      if (c != 0) row += static_cast<double>(c) * m_pow[i];
    }
    total += static_cast<double>(psi_character(psi, n)) * n_pow[j] * row;
  }
  return zeta2(2.0 * s + 2.0 * w - 1.0) * total;
}

}  // namespace charsum
