// Acceptance driver: one PASS/FAIL line per criterion. A criterion passes
// when every check in it passes and its wall time stays within budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "charsum/harness.hpp"
#include "charsum/special.hpp"

using namespace charsum;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void absorb(Outcome& o, const VerificationEntry& e) {
  o.pass = o.pass && e.pass;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s%s %.3g/%.3g", o.detail.empty() ? "" : "; ", e.name.c_str(),
                e.residual, e.threshold);
  o.detail += buf;
}

Outcome all_of(std::vector<std::pair<std::string, std::function<VerificationEntry()>>> parts) {
  Outcome o;
  for (auto& [name, body] : parts) absorb(o, run_check(name, body));
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

Outcome c_equals_d() {
  return all_of({{"c=d", [] { return checks::c_equals_d({0.125, 0.5, 1.0, 2.0, 8.0}, kMaxContourHeight); }}});
}

Outcome toshow() {
  return all_of({{"toshow", [] { return checks::toshow({0, 1, 2, 5, 10}); }}});
}

std::vector<Criterion> criteria() {
  return {
      {1, "reciprocity sweep, odd m, n <= 2001", 5,
       [] { return all_of({{"reciprocity", [] { return checks::reciprocity(2001); }}}); }},
      {2, "naive vs periodic on the 6x6 grid", 10,
       [] {
         return all_of({{"algorithms",
                         [] { return checks::algorithm_equivalence({10, 31, 100, 317, 500, 1000}); }}});
       }},
      {3, "special-function anchors", 1,
       [] {
         return all_of({{"zeta(2)", checks::zeta_two},
                        {"zeta(0)", checks::zeta_zero},
                        {"gamma(1/2)", checks::gamma_half},
                        {"functional-eq", checks::zeta_functional_equation},
                        {"gamma-ratio", checks::gamma_ratio}});
       }},
      {4, "C(alpha) = D(alpha) at alpha in {1/8, 1/2, 1, 2, 8}", 60, c_equals_d},
      {5, "contour identity on Re s = 1/4", 1, toshow},
      {6, "contour-shift invariance and residue capture", 30,
       [] {
         return all_of({{"sigma-invariance", [] { return checks::contour_independence({0.5, 1.0, 2.0}, 1024); }},
                        {"residue", [] { return checks::residue_capture({0.25, 1.0, 4.0}, 1024); }}});
       }},
      {7, "small and large alpha asymptotics", 10,
       [] {
         return all_of({{"small", checks::asymptotic_small_alpha}, {"large", checks::asymptotic_large_alpha}});
       }},
      {8, "diagonal scaling slope, N in [500, 16000]", 180,
       [] { return all_of({{"slope", [] { return checks::scaling_slope(500, 16000, 6); }}}); }},
      {9, "Polya-Vinogradov regime X = 1e5, Y = 100", 30,
       [] { return all_of({{"pv", [] { return checks::polya_vinogradov(1e5, 100); }}}); }},
      {10, "smoothed sum at X = Y = 4000, U = 40; indicator consistency", 120,
       [] {
         return all_of({{"smoothed", [] { return checks::smoothed_sum_vs_main(4000, 40); }},
                        {"indicator", [] { return checks::indicator_consistency({0.5, 1.0, 2.0}, ContourSpec{}); }}});
       }},
      {11, "Mellin product estimate, U in {16, 64, 256, 1024}", 10,
       [] {
         return all_of({{"mellin", [] { return checks::mellin_estimate_product({16, 64, 256, 1024}); }}});
       }},
      {12, "zeta shifted by 1e-6 makes criteria 4 and 5 fail", 90,
       [] {
         ZetaPerturbationGuard guard(1e-6);
         const Outcome four = c_equals_d();
         const Outcome five = toshow();
         Outcome o;
         o.pass = !four.pass && !five.pass;
         o.detail = std::string("criterion 4 ") + (four.pass ? "still passes" : "fails") + " (" + four.detail +
                    "); criterion 5 " + (five.pass ? "still passes" : "fails") + " (" + five.detail + ")";
         return o;
       }},
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> only;
  std::vector<int> unattainable;
  app.add_option("--only", only, "Run only these criteria");
  app.add_option("--known-unattainable", unattainable,
                 "Criteria that are evaluated and reported but do not affect the exit status");
  CLI11_PARSE(app, argc, argv);
  const std::set<int> selected(only.begin(), only.end());
  const std::set<int> excused(unattainable.begin(), unattainable.end());

  int failures = 0;
  int excused_failures = 0;
  for (const auto& c : criteria()) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = c.run();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.budget_seconds;
    const bool pass = o.pass && in_time;
    std::printf("%s  %2d  %-62s %7.2fs / %3.0fs%s  [%s]\n", pass ? "PASS" : "FAIL", c.id, c.title, seconds,
                c.budget_seconds, in_time ? "" : " over budget", o.detail.c_str());
    std::fflush(stdout);
    if (!pass) (excused.count(c.id) ? excused_failures : failures) += 1;
  }
  if (excused_failures > 0) {
    std::printf("%d failure(s) in criteria marked unattainable (reported, not counted)\n", excused_failures);
  }
  std::printf("%s\n", failures == 0 ? "acceptance: PASS" : "acceptance: FAIL");
  return failures == 0 ? 0 : 1;
}
