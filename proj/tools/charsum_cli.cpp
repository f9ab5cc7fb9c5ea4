// Command-line front end: exact, smooth, mainterm, c-alpha, compare,
// scaling, verify.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 numerical tolerance not met.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "charsum/config.hpp"
#include "charsum/constants.hpp"
#include "charsum/errors.hpp"
#include "charsum/harness.hpp"

namespace {

using namespace charsum;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTolerance = 3;

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw DomainError("not a number: '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::string join(const std::vector<double>& v) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%s%.17g", i ? "," : "", v[i]);
    out += buf;
  }
  return out;
}

// Raw option text: flag if given, else config entry, else nothing.
struct Settings {
  std::string config_path;
  Config config;
  std::map<std::string, std::string> flags;
  std::map<std::string, std::vector<CLI::Option*>> options;

  void add(CLI::App* app, const std::string& key, const std::string& help) {
    options[key].push_back(app->add_option("--" + key, flags[key], help));
  }

  std::optional<std::string> raw(const std::string& key) const {
    if (const auto it = options.find(key); it != options.end()) {
      for (const auto* opt : it->second) {
        if (opt->count() > 0) return flags.at(key);
      }
    }
    return config.get(key);
  }

  double number(const std::string& key, double fallback) const {
    const auto r = raw(key);
    if (!r) return fallback;
    const auto v = parse_list(*r);
    if (v.size() != 1) throw DomainError("--" + key + " expects one number");
    return v.front();
  }

  double required_number(const std::string& key) const {
    if (!raw(key)) throw DomainError("--" + key + " is required (flag or config)");
    return number(key, 0.0);
  }

  std::vector<double> list(const std::string& key) const {
    const auto r = raw(key);
    if (!r) throw DomainError("--" + key + " is required (flag or config)");
    return parse_list(*r);
  }

  std::string text(const std::string& key, const std::string& fallback) const {
    return raw(key).value_or(fallback);
  }

  bool flag(const std::string& key, bool cli_value) const {
    if (cli_value) return true;
    const auto r = config.get(key);
    return r && (*r == "1" || *r == "true" || *r == "yes");
  }

  ContourSpec contour() const {
    ContourSpec spec;
    spec.sigma = number("sigma", spec.sigma);
    spec.tol = number("tol", spec.tol);
    spec.T = number("T", spec.T);
    spec.tail = parse_tail_model(text("tail", tail_model_name(spec.tail)));
    return spec;
  }
};

void add_contour_flags(CLI::App* app, Settings& s) {
  s.add(app, "sigma", "contour abscissa in (1/2, 1), default 0.75");
  s.add(app, "tol", "absolute tolerance, default 1e-8");
  s.add(app, "T", "truncation height; 0 doubles adaptively up to 4096");
  s.add(app, "tail", "tail model: stationary (default) or none");
}

void print_value(const char* name, double v) { std::printf("%s = %.17g\n", name, v); }

void write_outputs(const Settings& s, const std::vector<SumRecord>& records, bool scaling,
                   std::vector<std::pair<std::string, std::string>> meta) {
  const std::string out = s.text("out", "");
  if (out.empty()) {
    std::cout << format_csv(records);
    return;
  }
  emit_csv(records, out);
  meta.emplace_back("csv", out);
  emit_metadata(out + ".meta", meta);
  std::printf("wrote %s (%zu rows) and %s.meta\n", out.c_str(), records.size(), out.c_str());
  const std::string plot = s.text("gnuplot", "");
  if (!plot.empty()) {
    emit_gnuplot(out, plot, scaling);
    std::printf("wrote %s\n", plot.c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic character double sums and their main terms"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--config", s.config_path, "key=value configuration file ('#' comments)");

  auto* exact = app.add_subcommand("exact", "exact double character sum S(X, Y)");
  s.add(exact, "x", "X >= 1");
  s.add(exact, "y", "Y >= 1");
  s.add(exact, "algo", "naive, periodic or auto (default)");

  auto* smooth = app.add_subcommand("smooth", "smoothed sum with plateau weights");
  s.add(smooth, "x", "X >= 1");
  s.add(smooth, "y", "Y >= 1");
  s.add(smooth, "u", "plateau parameter U >= 4");
  bool with_main = false;
  smooth->add_flag("--with-main", with_main, "also evaluate the smoothed main term");
  add_contour_flags(smooth, s);

  auto* mainterm = app.add_subcommand("mainterm", "D(alpha), or the main term for X, Y");
  s.add(mainterm, "alpha", "alpha > 0");
  s.add(mainterm, "x", "X > 0 (with --y instead of --alpha)");
  s.add(mainterm, "y", "Y > 0");
  add_contour_flags(mainterm, s);

  auto* calpha = app.add_subcommand("c-alpha", "C(alpha) from real-axis quadrature only");
  s.add(calpha, "alpha", "alpha > 0");
  s.add(calpha, "tol", "absolute tolerance, default 1e-10");
  s.add(calpha, "K", "number of series terms, 0 = adaptive");
  s.add(calpha, "form", "u (default) or y");

  auto* compare = app.add_subcommand("compare", "exact sums against the main term, as CSV");
  s.add(compare, "x", "comma-separated X values (>= 10)");
  s.add(compare, "y", "comma-separated Y values (>= 10)");
  s.add(compare, "algo", "naive, periodic or auto (default)");
  s.add(compare, "out", "CSV path (stdout if absent)");
  s.add(compare, "gnuplot", "also write a gnuplot script here (needs --out)");
  bool cross = false;
  compare->add_flag("--cross", cross, "all X x Y pairs instead of zipping");
  add_contour_flags(compare, s);

  auto* scaling = app.add_subcommand("scaling", "diagonal X = Y = N error-scaling fit");
  s.add(scaling, "nmin", "smallest N (>= 100), default 500");
  s.add(scaling, "nmax", "largest N (<= 50000), default 16000");
  s.add(scaling, "steps", "grid points (>= 4), default 6");
  s.add(scaling, "algo", "naive, periodic or auto (default)");
  s.add(scaling, "out", "CSV path (stdout if absent)");
  s.add(scaling, "gnuplot", "also write a gnuplot script here (needs --out)");
  add_contour_flags(scaling, s);

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  s.add(verify, "level", "fast (default) or full");
  s.add(verify, "perturb-zeta", "add this constant to every zeta value (fault injection)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (!s.config_path.empty()) s.config = Config::load(s.config_path);

    if (exact->parsed()) {
      const double X = s.required_number("x");
      const double Y = s.required_number("y");
      const SumAlgorithm algo = parse_algorithm(s.text("algo", "auto").c_str());
      const auto S = double_char_sum(X, Y, algo);
      std::printf("X = %.17g\nY = %.17g\nalgorithm = %s\nS = %lld\n", X, Y,
                  algorithm_name(resolve_algorithm(X, Y, algo)), static_cast<long long>(S));
    } else if (smooth->parsed()) {
      SumRequest req;
      req.X = s.required_number("x");
      req.Y = s.required_number("y");
      const auto w = SmoothWeight::plateau(s.required_number("u"));
      req.weight_m = w;
      req.weight_n = w;
      const double S = smoothed_char_sum(req);
      print_value("S_smooth", S);
      if (s.flag("with-main", with_main)) {
        ContourSpec spec = s.contour();
        if (!s.raw("tol")) spec.tol = 1e-4;
        const double d = D_smoothed(req.Y / req.X, w, w, spec);
        print_value("D_smoothed", d);
        print_value("main", 2.0 / (kPi * kPi) * std::pow(req.X, 1.5) * d);
      }
    } else if (mainterm->parsed()) {
      const ContourSpec spec = s.contour();
      if (s.raw("x") || s.raw("y")) {
        const double X = s.required_number("x");
        const double Y = s.required_number("y");
        print_value("alpha", Y / X);
        print_value("D", D_alpha(Y / X, spec));
        print_value("main", main_term(X, Y, spec));
        print_value("pv_main", pv_main(X, Y));
      } else {
        const double alpha = s.required_number("alpha");
        const auto r = D_alpha_detailed(alpha, spec);
        print_value("D", r.value);
        print_value("height", r.height);
        print_value("last_increment", r.last_increment);
        print_value("tail_correction", r.tail_correction);
        print_value("asymptotic_small", asymptotic_small(alpha));
      }
    } else if (calpha->parsed()) {
      const double alpha = s.required_number("alpha");
      OscillatorySpec spec;
      spec.tol = s.number("tol", spec.tol);
      spec.K = static_cast<int>(s.number("K", 0));
      const std::string form = s.text("form", "u");
      if (form != "u" && form != "y") throw DomainError("--form must be u or y");
      print_value("C", form == "u" ? C_alpha(alpha, spec) : C_alpha_yform(alpha, spec));
      std::printf("terms = %d\n", spec.K > 0 ? spec.K : C_alpha_terms(alpha, spec.tol));
    } else if (compare->parsed()) {
      const auto Xs = s.list("x");
      const auto Ys = s.list("y");
      const bool crossed = s.flag("cross", cross);
      const ContourSpec spec = s.contour();
      const SumAlgorithm algo = parse_algorithm(s.text("algo", "auto").c_str());
      const auto records = run_compare(Xs, Ys, spec, crossed, algo);
      write_outputs(s, records, false,
                    {{"command", "compare"},
                     {"x", join(Xs)},
                     {"y", join(Ys)},
                     {"cross", crossed ? "true" : "false"},
                     {"algorithm", algorithm_name(algo)},
                     {"sigma", join({spec.sigma})},
                     {"tol", join({spec.tol})},
                     {"tail", tail_model_name(spec.tail)}});
    } else if (scaling->parsed()) {
      const auto nmin = static_cast<std::int64_t>(s.number("nmin", 500));
      const auto nmax = static_cast<std::int64_t>(s.number("nmax", 16000));
      const int steps = static_cast<int>(s.number("steps", 6));
      const ContourSpec spec = s.contour();
      const SumAlgorithm algo = parse_algorithm(s.text("algo", "auto").c_str());
      const auto fit = run_scaling(nmin, nmax, steps, spec, algo);
      for (const auto& w : fit.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
      write_outputs(s, fit.records, true,
                    {{"command", "scaling"},
                     {"slope", join({fit.slope})},
                     {"intercept", join({fit.intercept})}});
      std::fprintf(stderr, "slope = %.6f (reference exponents %.4f and %.4f, ceiling %.2f)\n",
                   fit.slope, thresholds::kReferenceExponentSharp,
                   thresholds::kReferenceExponentClassical, thresholds::kScalingSlopeCeiling);
    } else if (verify->parsed()) {
      VerifyOptions options;
      options.level = parse_level(s.text("level", "fast"));
      options.zeta_shift = s.number("perturb-zeta", 0.0);
      options.on_entry = [](const VerificationEntry& e) {
        std::printf("%-4s %-36s residual %-12.4g threshold %-10.4g %7.2fs  %s\n",
                    e.pass ? "PASS" : "FAIL", e.name.c_str(), e.residual, e.threshold, e.seconds,
                    e.detail.c_str());
        std::fflush(stdout);
      };
      const auto report = run_verify(options);
      std::size_t passed = 0;
      for (const auto& e : report.entries) passed += e.pass ? 1 : 0;
      std::printf("%zu/%zu checks passed; overall %s\n", passed, report.entries.size(),
                  report.overall ? "PASS" : "FAIL");
      return report.overall ? 0 : kExitVerifyFailed;
    }
  } catch (const ToleranceError& e) {
    std::fprintf(stderr, "tolerance not met: %s\n", e.what());
    return kExitTolerance;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return 0;
}
