#pragma once

// Experiment orchestration: exact-vs-main comparisons, diagonal scaling
// fits, CSV output and the aggregated verification suite.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "charsum/exact_sum.hpp"
#include "charsum/main_term.hpp"

namespace charsum {

struct SumRecord {
  double X = 0.0;
  double Y = 0.0;
  double alpha = 0.0;
  double exact = 0.0;  ///< integer-valued for sharp sums
  double main = 0.0;
  double abs_err = 0.0;
  double norm_err = 0.0;  ///< abs_err / (X Y^{1/4} + Y X^{1/4})
};

/// Fills alpha, abs_err and norm_err from X, Y, exact, main.
SumRecord make_record(double X, double Y, double exact, double main);

/// D(alpha) memoized per (alpha, spec) for the lifetime of the process.
double cached_D(double alpha, const ContourSpec& spec);

/// One record per (X, Y) pair, zipped (equal lengths) or crossed. X, Y >= 10.
std::vector<SumRecord> run_compare(const std::vector<double>& Xs, const std::vector<double>& Ys,
                                   const ContourSpec& spec, bool cross = false,
                                   SumAlgorithm algorithm = SumAlgorithm::automatic);

struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<std::pair<double, double>> points;  ///< (log N, log abs_err)
  std::vector<SumRecord> records;
  std::vector<std::string> warnings;
};

/// Geometric grid of N in [Nmin, Nmax] with X = Y = N; least-squares fit of
/// log |S - main| on log N. 100 <= Nmin < Nmax <= 50000, steps >= 4.
ScalingFit run_scaling(std::int64_t Nmin, std::int64_t Nmax, int steps, const ContourSpec& spec,
                       SumAlgorithm algorithm = SumAlgorithm::automatic);

/// Header X,Y,alpha,exact,main,abs_err,norm_err; 17 significant digits.
void emit_csv(const std::vector<SumRecord>& records, const std::string& path);
std::string format_csv(const std::vector<SumRecord>& records);
std::vector<SumRecord> parse_csv(const std::string& text);

/// key=value sidecar describing how the CSV was produced (written to path).
void emit_metadata(const std::string& path, const std::vector<std::pair<std::string, std::string>>& extra);

/// gnuplot script plotting norm_err (compare) or log-log abs_err (scaling).
void emit_gnuplot(const std::string& csv_path, const std::string& script_path, bool scaling);

// ---------------------------------------------------------------------------
// Verification

struct VerificationEntry {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationEntry> entries;
  bool overall = true;

  void add(VerificationEntry e);
  const VerificationEntry* find(const std::string& name) const;
};

enum class VerifyLevel { fast, full };
VerifyLevel parse_level(const std::string& name);

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::fast;
  /// Nonzero shifts every zeta value for the duration of the run.
  double zeta_shift = 0.0;
  /// Called after each entry (progress output).
  std::function<void(const VerificationEntry&)> on_entry;
};

/// Runs a named check, timing it and turning exceptions into failed entries.
VerificationEntry run_check(const std::string& name, const std::function<VerificationEntry()>& body);

VerificationReport run_verify(const VerifyOptions& options);

/// Individual checks, shared by run_verify and the acceptance driver. Each
/// returns residual and threshold; pass is residual <= threshold.
namespace checks {

VerificationEntry reciprocity(std::int64_t limit);
VerificationEntry multiplicativity(int samples, std::uint64_t seed);
VerificationEntry periodicity(std::int64_t limit);
VerificationEntry legendre_oracle(std::int64_t prime_limit);
VerificationEntry squarefree_reconstruction(std::int64_t limit);

VerificationEntry zeta_two();
VerificationEntry zeta_zero();
VerificationEntry gamma_half();
VerificationEntry zeta_functional_equation();
VerificationEntry gamma_ratio();
VerificationEntry gamma_recurrence();
VerificationEntry gamma_reflection();
VerificationEntry zeta_direct_sum();
VerificationEntry zeta_first_zero();

VerificationEntry plateau_reproduction();
VerificationEntry mellin_estimate_product(const std::vector<double>& Us);
VerificationEntry mellin_estimate_line();
VerificationEntry mellin_decay();

VerificationEntry algorithm_equivalence(const std::vector<double>& grid);
VerificationEntry square_rows();
VerificationEntry z_reordering();
VerificationEntry truncation_tail(std::int64_t small_box, std::int64_t large_box);
VerificationEntry smoothing_difference(double N, double U);
/// Ratio band for |S - S_smooth| when U doubles, as prescribed (1/U law).
VerificationEntry smoothing_u_scaling(const std::vector<double>& sizes, double U);
/// The same ratio against sqrt 2, the U^{-1/2} law actually observed.
VerificationEntry smoothing_sqrt_law(const std::vector<double>& sizes, double U);

VerificationEntry c_equals_d(const std::vector<double>& alphas, double T);
VerificationEntry c_forms();
VerificationEntry toshow(const std::vector<double>& heights);
VerificationEntry contour_independence(const std::vector<double>& alphas, double T);
VerificationEntry residue_capture(const std::vector<double>& alphas, double T);
VerificationEntry asymptotic_small_alpha();
VerificationEntry asymptotic_large_alpha();
VerificationEntry indicator_consistency(const std::vector<double>& alphas, const ContourSpec& spec);
VerificationEntry smoothed_main_scaling(double U_small, double U_large);

VerificationEntry polya_vinogradov(double X, double Y);
VerificationEntry compare_diagonal(double N);
VerificationEntry scaling_slope(std::int64_t Nmin, std::int64_t Nmax, int steps);
VerificationEntry smoothed_sum_vs_main(double N, double U);

}  // namespace checks

}  // namespace charsum
