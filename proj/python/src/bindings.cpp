#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "ratint/corpus.hpp"
#include "ratint/numeric.hpp"
#include "ratint/parser.hpp"
#include "ratint/symmetry.hpp"

namespace py = pybind11;
using namespace ratint;

namespace {

py::dict integrate_py(const std::string& expr, const std::string& var, py::object lo,
                      py::object hi, int digits) {
    ExprPtr input = parse_expr_text(expr);
    py::dict out;
    if (lo.is_none() != hi.is_none())
        throw error(errc::domain_error, "lo and hi must be given together");
    if (lo.is_none()) {
        RatFun<QuadExt> f = expr_to_ratfun<QuadExt>(input, var);
        AntiDeriv F = integrate_rational(f);
        out["status"] = "ok";
        out["antiderivative"] = print_expr(F.to_expr(var));
        return out;
    }
    Bound blo = parse_bound(py::cast<std::string>(py::str(lo)));
    Bound bhi = parse_bound(py::cast<std::string>(py::str(hi)));
    ConstExpr value;
    try {
        RatFun<QuadExt> f = expr_to_ratfun<QuadExt>(input, var);
        if (blo.pi_multiple || bhi.pi_multiple)
            throw error(errc::unsupported_shape, "pi bounds with a rational integrand");
        value = definite_integrate(f, Interval(blo.value, bhi.value));
    } catch (const error& e) {
        if (e.code() != errc::not_rational_in_var) throw;
        PiMultiple plo{blo.pi_multiple ? blo.value : Rat(0)};
        PiMultiple phi{bhi.pi_multiple ? bhi.value : Rat(0)};
        value = evaluate_trig_definite(input, var, plo, phi);
    }
    out["status"] = "ok";
    out["value"] = const_to_string(value);
    out["numeric"] = const_eval(value, digits).str(digits);
    return out;
}

std::string check_equal_py(const std::string& e1, const std::string& e2) {
    ConstExpr a = const_from_expr(parse_expr_text(e1));
    ConstExpr b = const_from_expr(parse_expr_text(e2));
    EqVerdict v = const_equal(a, b);
    if (v.result == Eq::equal) return "Equal";
    if (v.result == Eq::not_equal) return "NotEqual";
    return v.numeric_agrees ? "Undecided(numeric-equal)" : "Undecided(numeric-differs)";
}

py::dict oracle_py(const std::string& expr, const std::string& var, double lo, double hi,
                   double tol) {
    QuadResult q = quad_oracle(parse_expr_text(expr), var, lo, hi, tol);
    py::dict out;
    out["value"] = q.value;
    out["error_estimate"] = q.error_estimate;
    out["subdivisions"] = q.subdivisions;
    return out;
}

std::string differentiate_py(const std::string& expr, const std::string& var) {
    return print_expr(differentiate(parse_expr_text(expr), var));
}

py::dict corpus_py(const std::string& path, double tol) {
    CorpusReport rep = run_corpus(path, tol);
    py::dict out;
    out["passed"] = rep.passed;
    out["failed"] = rep.failed;
    py::list entries;
    for (const auto& e : rep.entries) {
        py::dict je;
        je["id"] = e.id;
        je["pass"] = e.pass;
        je["detail"] = e.detail;
        entries.append(je);
    }
    out["entries"] = entries;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact symbolic integration of rational functions";

    static py::exception<error> exc(m, "RatintError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const error& e) {
            exc(e.what());
        }
    });

    m.def("integrate", &integrate_py, py::arg("expr"), py::arg("var") = "x",
          py::arg("lo") = py::none(), py::arg("hi") = py::none(), py::arg("digits") = 10,
          "Integrate a rational function exactly; definite form returns the exact "
          "closed-form constant and its numeric value.");
    m.def("check_equal", &check_equal_py, py::arg("expr1"), py::arg("expr2"),
          "Decide equality of closed-form constants (Equal / NotEqual / Undecided).");
    m.def("oracle", &oracle_py, py::arg("expr"), py::arg("var"), py::arg("lo"), py::arg("hi"),
          py::arg("tol") = 1e-9, "Adaptive numeric quadrature cross-check.");
    m.def("differentiate", &differentiate_py, py::arg("expr"), py::arg("var") = "x");
    m.def("run_corpus", &corpus_py, py::arg("path"), py::arg("tol") = 1e-6);
    m.def("parse_roundtrip",
          [](const std::string& s) { return print_expr(parse_expr_text(s)); });
}
