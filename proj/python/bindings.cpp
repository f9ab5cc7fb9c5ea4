#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "charsum/char_arith.hpp"
#include "charsum/errors.hpp"
#include "charsum/exact_sum.hpp"
#include "charsum/harness.hpp"
#include "charsum/main_term.hpp"
#include "charsum/special.hpp"
#include "charsum/weights.hpp"

namespace py = pybind11;
using namespace charsum;

namespace {

SumAlgorithm algo(const std::string& name) { return parse_algorithm(name.c_str()); }

ContourSpec contour(double sigma, double T, double tol, const std::string& tail) {
  ContourSpec spec;
  spec.sigma = sigma;
  spec.T = T;
  spec.tol = tol;
  spec.tail = parse_tail_model(tail);
  return spec;
}

}  // namespace

PYBIND11_MODULE(_charsum, m) {
  m.doc() = "Quadratic character double sums, their main terms and verification checks";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PoleError>(m, "PoleError", PyExc_ArithmeticError);
  py::register_exception<ToleranceError>(m, "ToleranceError", PyExc_RuntimeError);
  py::register_exception<OverflowError>(m, "OverflowError", PyExc_OverflowError);

  py::class_<SquarefreeDecomposition>(m, "SquarefreeDecomposition")
      .def_readonly("m0", &SquarefreeDecomposition::m0)
      .def_readonly("m1", &SquarefreeDecomposition::m1)
      .def("__repr__", [](const SquarefreeDecomposition& d) {
        return "SquarefreeDecomposition(m0=" + std::to_string(d.m0) + ", m1=" + std::to_string(d.m1) + ")";
      });

  m.def("kronecker", [](std::int64_t a, std::int64_t n) { return kronecker(a, n).value(); },
        py::arg("m"), py::arg("n"));
  m.def("psi_character",
        [](int j, std::int64_t n) { return psi_character(mod8_character_from_int(j), n).value(); },
        py::arg("j"), py::arg("n"));
  m.def("chi_tilde", [](std::int64_t n, std::int64_t a) { return chi_tilde(n, a).value(); },
        py::arg("n"), py::arg("m"));
  m.def("squarefree_decompose", &squarefree_decompose, py::arg("m"));

  m.def("gamma", &charsum::gamma, py::arg("s"));
  m.def("log_gamma", &charsum::log_gamma, py::arg("s"));
  m.def("zeta", &charsum::zeta, py::arg("s"));
  m.def("zeta2", &zeta2, py::arg("s"));
  m.def("zeta_fe_factor", &zeta_fe_factor, py::arg("s"));
  m.def("gamma_ratio_check", &gamma_ratio_check, py::arg("s"));

  py::class_<SmoothWeight>(m, "SmoothWeight")
      .def_static("plateau", &SmoothWeight::plateau, py::arg("U"))
      .def_static("indicator", &SmoothWeight::indicator)
      .def_property_readonly("U", &SmoothWeight::U)
      .def_property_readonly("is_indicator",
                             [](const SmoothWeight& w) { return w.kind() == WeightKind::indicator; })
      .def("__call__", &SmoothWeight::operator(), py::arg("x"));
  m.def("mellin_numeric", &mellin_numeric, py::arg("w"), py::arg("s"), py::arg("tol") = 1e-12);
  m.def("mellin_indicator", &mellin_indicator, py::arg("s"));

  m.def("double_char_sum",
        [](double X, double Y, const std::string& a) { return double_char_sum(X, Y, algo(a)); },
        py::arg("X"), py::arg("Y"), py::arg("algorithm") = "auto",
        py::call_guard<py::gil_scoped_release>());
  m.def("smoothed_char_sum",
        [](double X, double Y, const SmoothWeight& phi, const SmoothWeight& psi) {
          SumRequest req;
          req.X = X;
          req.Y = Y;
          req.weight_m = phi;
          req.weight_n = psi;
          return smoothed_char_sum(req);
        },
        py::arg("X"), py::arg("Y"), py::arg("phi"), py::arg("psi"),
        py::call_guard<py::gil_scoped_release>());
  m.def("truncated_A",
        [](Complex s, Complex w, std::int64_t M, std::int64_t N) { return truncated_A(s, w, {M, N}); },
        py::arg("s"), py::arg("w"), py::arg("M"), py::arg("N"));
  m.def("truncated_Z_forward",
        [](Complex s, Complex w, int psi, int psi_prime, std::int64_t M, std::int64_t N) {
          return truncated_Z_forward(s, w, mod8_character_from_int(psi),
                                     mod8_character_from_int(psi_prime), {M, N});
        },
        py::arg("s"), py::arg("w"), py::arg("psi"), py::arg("psi_prime"), py::arg("M"), py::arg("N"));
  m.def("truncated_Z_reordered",
        [](Complex s, Complex w, int psi, int psi_prime, std::int64_t M, std::int64_t N) {
          return truncated_Z_reordered(s, w, mod8_character_from_int(psi),
                                       mod8_character_from_int(psi_prime), {M, N});
        },
        py::arg("s"), py::arg("w"), py::arg("psi"), py::arg("psi_prime"), py::arg("M"), py::arg("N"));

  m.def("D_alpha",
        [](double alpha, double sigma, double T, double tol, const std::string& tail) {
          return D_alpha(alpha, contour(sigma, T, tol, tail));
        },
        py::arg("alpha"), py::arg("sigma") = 0.75, py::arg("T") = 0.0, py::arg("tol") = 1e-8,
        py::arg("tail") = "stationary", py::call_guard<py::gil_scoped_release>());
  m.def("C_alpha",
        [](double alpha, int K, double tol) {
          OscillatorySpec spec;
          spec.K = K;
          spec.tol = tol;
          return C_alpha(alpha, spec);
        },
        py::arg("alpha"), py::arg("K") = 0, py::arg("tol") = 1e-10);
  m.def("D_smoothed",
        [](double alpha, const SmoothWeight& phi, const SmoothWeight& psi, double sigma, double T,
           double tol) { return D_smoothed(alpha, phi, psi, contour(sigma, T, tol, "stationary")); },
        py::arg("alpha"), py::arg("phi"), py::arg("psi"), py::arg("sigma") = 0.75,
        py::arg("T") = 0.0, py::arg("tol") = 1e-8, py::call_guard<py::gil_scoped_release>());
  m.def("D_residue_shift_check", &D_residue_shift_check, py::arg("alpha"), py::arg("T") = 1024.0);
  m.def("residue_Z_diagonal", &residue_Z_diagonal, py::arg("s"));
  m.def("residue_A_diagonal", &residue_A_diagonal, py::arg("s"));
  m.def("residue_lines_s1_w1", &residue_lines_s1_w1, py::arg("x"));
  m.def("asymptotic_small", &asymptotic_small, py::arg("alpha"));
  m.def("asymptotic_large", &asymptotic_large, py::arg("alpha"));
  m.def("pv_main", &pv_main, py::arg("X"), py::arg("Y"));
  m.def("main_term",
        [](double X, double Y, double tol) {
          ContourSpec spec;
          spec.tol = tol;
          return main_term(X, Y, spec);
        },
        py::arg("X"), py::arg("Y"), py::arg("tol") = 1e-8);
  m.def("fhat_closed_form", &fhat_closed_form, py::arg("s"));
  m.def("toshow_residual", &toshow_residual, py::arg("s"));

  py::class_<SumRecord>(m, "SumRecord")
      .def_readonly("X", &SumRecord::X)
      .def_readonly("Y", &SumRecord::Y)
      .def_readonly("alpha", &SumRecord::alpha)
      .def_readonly("exact", &SumRecord::exact)
      .def_readonly("main", &SumRecord::main)
      .def_readonly("abs_err", &SumRecord::abs_err)
      .def_readonly("norm_err", &SumRecord::norm_err);
  m.def("run_compare",
        [](const std::vector<double>& Xs, const std::vector<double>& Ys, bool cross, double tol) {
          ContourSpec spec;
          spec.tol = tol;
          return run_compare(Xs, Ys, spec, cross);
        },
        py::arg("Xs"), py::arg("Ys"), py::arg("cross") = false, py::arg("tol") = 1e-8,
        py::call_guard<py::gil_scoped_release>());
  m.def("format_csv", &format_csv, py::arg("records"));
  m.def("emit_csv", &emit_csv, py::arg("records"), py::arg("path"));

  py::class_<VerificationEntry>(m, "VerificationEntry")
      .def_readonly("name", &VerificationEntry::name)
      .def_readonly("residual", &VerificationEntry::residual)
      .def_readonly("threshold", &VerificationEntry::threshold)
      .def_readonly("passed", &VerificationEntry::pass)
      .def_readonly("seconds", &VerificationEntry::seconds)
      .def_readonly("detail", &VerificationEntry::detail);
  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("entries", &VerificationReport::entries)
      .def_readonly("overall", &VerificationReport::overall);
  m.def("run_verify",
        [](const std::string& level, double zeta_shift) {
          VerifyOptions options;
          options.level = parse_level(level);
          options.zeta_shift = zeta_shift;
          return run_verify(options);
        },
        py::arg("level") = "fast", py::arg("zeta_shift") = 0.0,
        py::call_guard<py::gil_scoped_release>());
}
