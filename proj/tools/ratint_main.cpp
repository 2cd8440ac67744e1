#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <json.hpp>

#include "ratint/corpus.hpp"
#include "ratint/numeric.hpp"
#include "ratint/parser.hpp"
#include "ratint/symmetry.hpp"

using namespace ratint;
using nlohmann::json;

namespace {

// Exit codes are a stable contract: 0 ok, 2 parse error, 3 unsupported,
// 4 improper integral, 5 corpus failure.
int exit_code_for(const error& e) {
    switch (e.code()) {
        case errc::parse_error: return 2;
        case errc::not_rational_in_var:
        case errc::mixed_radicand:
        case errc::unsupported_algebraic_degree:
        case errc::unsupported_shape:
        case errc::not_representable:
        case errc::no_convergence: return 3;
        case errc::improper_integral: return 4;
        default: return 1;
    }
}

struct IntegrateArgs {
    std::string expr;
    std::string var = "x";
    std::string from, to;
    std::string antiderivative;
    int digits = 10;
    double tol = 1e-6;
    bool json_out = false;
    bool naive_splitting = false;
};

int do_integrate(const IntegrateArgs& a) {
    json doc;
    json diagnostics = json::array();
    ExprPtr input = parse_expr_text(a.expr);

    bool definite = !a.from.empty() || !a.to.empty();
    if (definite && (a.from.empty() || a.to.empty()))
        throw error(errc::domain_error, "--from and --to must be given together");

    bool rational_integrand = true;
    RatFun<QuadExt> f;
    try {
        f = expr_to_ratfun<QuadExt>(input, a.var);
    } catch (const error& err) {
        if (err.code() != errc::not_rational_in_var) throw;
        rational_integrand = false;
    }

    if (!definite) {
        if (!rational_integrand)
            throw error(errc::not_rational_in_var,
                        "indefinite integration supports rational integrands");
        AntiDeriv F = integrate_rational(f);
        std::string text = print_expr(F.to_expr(a.var));
        if (a.json_out) {
            doc["status"] = "ok";
            doc["antiderivative"] = text;
            doc["diagnostics"] = diagnostics;
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << text << "\n";
        }
        return 0;
    }

    Bound blo = parse_bound(a.from), bhi = parse_bound(a.to);
    ConstExpr value;
    double oracle_lo, oracle_hi;
    if (rational_integrand) {
        if (blo.pi_multiple || bhi.pi_multiple)
            throw error(errc::unsupported_shape,
                        "pi bounds with a rational integrand are not supported");
        Interval I(blo.value, bhi.value);
        if (!a.antiderivative.empty()) {
            ExprPtr F = parse_expr_text(a.antiderivative);
            value = definite_from_antiderivative(F, a.var, f, I, !a.naive_splitting);
        } else {
            value = definite_integrate(f, I);
        }
        oracle_lo = I.lo.to_double();
        oracle_hi = I.hi.to_double();
    } else {
        PiMultiple lo{blo.pi_multiple ? blo.value : Rat(0)};
        PiMultiple hi{bhi.pi_multiple ? bhi.value : Rat(0)};
        if (!blo.pi_multiple && !blo.value.is_zero())
            throw error(errc::unsupported_shape, "trig integrand needs pi-multiple bounds");
        if (!bhi.pi_multiple && !bhi.value.is_zero())
            throw error(errc::unsupported_shape, "trig integrand needs pi-multiple bounds");
        value = evaluate_trig_definite(input, a.var, lo, hi);
        oracle_lo = lo.q.to_double() * M_PI;
        oracle_hi = hi.q.to_double() * M_PI;
    }

    std::string exact = const_to_string(value);
    std::string numeric = const_eval(value, a.digits).str(a.digits);

    // cross-check against the numeric oracle; a mismatch is flagged, which is
    // the point of the naive-splitting diagnostic mode
    try {
        QuadResult q = rational_integrand
                           ? quad_oracle(f, Interval(blo.value, bhi.value), 1e-10)
                           : quad_oracle(input, a.var, oracle_lo, oracle_hi, 1e-10);
        double ours = const_eval(value, 20).to_double();
        double delta = ours - q.value;
        if (std::fabs(delta) > std::max(1e-6, 10.0 * q.error_estimate)) {
            double pi_units = delta / M_PI;
            std::ostringstream os;
            os << "result differs from the numeric oracle by " << delta;
            double rounded = std::round(pi_units);
            if (std::fabs(pi_units - rounded) < 1e-6 && rounded != 0.0)
                os << " (= " << static_cast<long>(rounded) << "*pi)";
            diagnostics.push_back(os.str());
        }
    } catch (const error& e) {
        diagnostics.push_back(std::string("oracle unavailable: ") + e.what());
    }

    if (a.json_out) {
        doc["status"] = "ok";
        doc["value"] = exact;
        doc["numeric"] = numeric;
        doc["diagnostics"] = diagnostics;
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << exact << "\n";
        std::cout << "~ " << numeric << "\n";
        for (const auto& d : diagnostics) std::cout << "note: " << d.get<std::string>() << "\n";
    }
    return 0;
}

int do_check_equal(const std::string& e1, const std::string& e2, int digits, bool json_out) {
    ConstExpr a = const_from_expr(parse_expr_text(e1));
    ConstExpr b = const_from_expr(parse_expr_text(e2));
    EqVerdict v = const_equal(a, b);
    std::string verdict = v.result == Eq::equal      ? "Equal"
                          : v.result == Eq::not_equal ? "NotEqual"
                                                      : "Undecided";
    if (json_out) {
        json doc;
        doc["verdict"] = verdict;
        doc["numeric_agrees"] = v.numeric_agrees;
        doc["abs_delta"] = v.abs_delta;
        if (digits > 0) {
            doc["lhs"] = const_eval(a, digits).str(digits);
            doc["rhs"] = const_eval(b, digits).str(digits);
        }
        std::cout << doc.dump() << "\n";
    } else {
        if (v.result == Eq::undecided)
            std::cout << verdict << " (numeric " << (v.numeric_agrees ? "agrees" : "disagrees")
                      << ", |delta| = " << v.abs_delta << ")\n";
        else
            std::cout << verdict << "\n";
    }
    return v.result == Eq::equal ? 0 : (v.result == Eq::not_equal ? 1 : 3);
}

int do_corpus(const std::string& path, double tol, bool json_out) {
    CorpusReport rep = run_corpus(path, tol);
    if (json_out) {
        json doc;
        doc["passed"] = rep.passed;
        doc["failed"] = rep.failed;
        json entries = json::array();
        for (const auto& e : rep.entries) {
            json je;
            je["id"] = e.id;
            je["pass"] = e.pass;
            if (!e.detail.empty()) je["detail"] = e.detail;
            entries.push_back(je);
        }
        doc["entries"] = entries;
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << rep.text();
    }
    return rep.failed == 0 ? 0 : 5;
}

int do_oracle(const std::string& expr, const std::string& var, const std::string& from,
              const std::string& to, double tol) {
    ExprPtr input = parse_expr_text(expr);
    Bound blo = parse_bound(from), bhi = parse_bound(to);
    double lo = blo.pi_multiple ? blo.value.to_double() * M_PI : blo.value.to_double();
    double hi = bhi.pi_multiple ? bhi.value.to_double() * M_PI : bhi.value.to_double();
    QuadResult q = quad_oracle(input, var, lo, hi, tol);
    std::cout << q.value << " (error estimate " << q.error_estimate << ", "
              << q.subdivisions << " panels)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic integration of rational functions"};
    app.require_subcommand(1);

    IntegrateArgs ia;
    auto* integrate = app.add_subcommand("integrate", "integrate an expression");
    integrate->add_option("expr", ia.expr, "expression to integrate")->required();
    integrate->add_option("--var", ia.var, "integration variable (default x)");
    integrate->add_option("--from", ia.from, "lower bound");
    integrate->add_option("--to", ia.to, "upper bound");
    integrate->add_option("--digits", ia.digits, "numeric display digits (max 200)")
        ->check(CLI::Range(1, 200));
    integrate->add_option("--tol", ia.tol, "numeric tolerance");
    integrate->add_flag("--json", ia.json_out, "machine-readable output");
    integrate->add_option("--antiderivative", ia.antiderivative,
                          "use this antiderivative expression instead of the internal engine");
    integrate->add_flag("--naive-splitting", ia.naive_splitting,
                        "diagnostic: skip discontinuity splitting when evaluating a supplied "
                        "antiderivative");

    std::string e1, e2;
    int ce_digits = 0;
    bool ce_json = false;
    auto* check = app.add_subcommand("check-equal", "decide equality of closed-form constants");
    check->add_option("expr1", e1)->required();
    check->add_option("expr2", e2)->required();
    check->add_option("--digits", ce_digits, "also print numeric values");
    check->add_flag("--json", ce_json);

    std::string corpus_path;
    double corpus_tol = 1e-6;
    bool corpus_json = false;
    auto* corpus = app.add_subcommand("corpus", "run a golden corpus file");
    corpus->add_option("path", corpus_path)->required();
    corpus->add_option("--tol", corpus_tol, "numeric tolerance (default 1e-6)");
    corpus->add_flag("--json", corpus_json);

    std::string o_expr, o_var = "x", o_from, o_to;
    double o_tol = 1e-9;
    auto* oracle = app.add_subcommand("oracle", "adaptive numeric quadrature");
    oracle->add_option("expr", o_expr)->required();
    oracle->add_option("--var", o_var);
    oracle->add_option("--from", o_from)->required();
    oracle->add_option("--to", o_to)->required();
    oracle->add_option("--tol", o_tol);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(integrate)) return do_integrate(ia);
        if (app.got_subcommand(check)) return do_check_equal(e1, e2, ce_digits, ce_json);
        if (app.got_subcommand(corpus)) return do_corpus(corpus_path, corpus_tol, corpus_json);
        if (app.got_subcommand(oracle)) return do_oracle(o_expr, o_var, o_from, o_to, o_tol);
    } catch (const error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
