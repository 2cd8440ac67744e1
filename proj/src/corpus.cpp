#include "ratint/corpus.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ratint/numeric.hpp"
#include "ratint/parser.hpp"
#include "ratint/symmetry.hpp"

namespace ratint {

std::string CorpusReport::text() const {
    std::ostringstream os;
    for (const auto& e : entries) {
        if (e.pass)
            os << "PASS " << e.id << "\n";
        else
            os << "FAIL " << e.id << ": " << e.detail << "\n";
    }
    os << passed << " passed, " << failed << " failed, " << entries.size() << " total\n";
    return os.str();
}

CorpusEntry corpus_entry_from_json(const std::string& line, int lineno) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& ex) {
        throw error(errc::parse_error,
                    "corpus line " + std::to_string(lineno) + ": " + ex.what());
    }
    CorpusEntry e;
    auto str_field = [&](const char* k) -> std::optional<std::string> {
        if (!j.contains(k) || j[k].is_null()) return std::nullopt;
        if (!j[k].is_string())
            throw error(errc::parse_error, "corpus line " + std::to_string(lineno) +
                                               ": field '" + k + "' must be a string");
        return j[k].get<std::string>();
    };
    e.id = str_field("id").value_or("line" + std::to_string(lineno));
    e.op = str_field("op").value_or("integrate");
    auto input = str_field("input");
    if (!input)
        throw error(errc::parse_error,
                    "corpus line " + std::to_string(lineno) + ": missing 'input'");
    e.input = *input;
    e.var = str_field("var").value_or("x");
    e.lo = str_field("lo");
    e.hi = str_field("hi");
    e.expect = str_field("expect");
    e.expect_value = str_field("expect_value");
    e.source = str_field("source").value_or("");
    if (e.lo.has_value() != e.hi.has_value())
        throw error(errc::parse_error, "corpus line " + std::to_string(lineno) +
                                           ": definite entries need both lo and hi");
    return e;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::domain_error, "cannot open corpus file " + path);
    std::vector<CorpusEntry> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        bool blank = line.find_first_not_of(" \t\r\n") == std::string::npos;
        if (blank || line[line.find_first_not_of(" \t")] == '#') continue;
        out.push_back(corpus_entry_from_json(line, lineno));
    }
    return out;
}

Bound parse_bound(const std::string& text) {
    ExprPtr e = parse_expr_text(text);
    try {
        QuadExt v = expr_const_value(e);
        if (v.is_rational()) return {false, v.rat_part()};
        throw error(errc::unsupported_shape, "irrational bound");
    } catch (const error&) {
    }
    ConstExpr c = const_from_expr(e);
    if (c.is_pi_and_rational_only() && c.rational_part.is_zero()) return {true, c.pi_coeff};
    throw error(errc::unsupported_shape,
                "bound must be rational or a rational multiple of pi: " + text);
}

namespace {

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

// sample points dodging the poles of the supplied denominators
std::vector<Rat> sample_points(const std::vector<Poly<QuadExt>>& dens, int count) {
    std::vector<Rat> pts;
    Rat x(3, 7);
    while (static_cast<int>(pts.size()) < count) {
        bool ok = true;
        for (const auto& d : dens)
            if (!d.is_zero() && d.eval(QuadExt(x)).is_zero()) ok = false;
        if (ok) pts.push_back(x);
        x += Rat(5, 9);
    }
    return pts;
}

// Indefinite golden check: our result and the expected form must differ by a
// constant: same difference (50 digits) at every sample point.
std::string check_constant_difference(const AntiDeriv& ours, const ExprPtr& expected,
                                      const std::string& var,
                                      const std::vector<Poly<QuadExt>>& dens) {
    std::vector<Rat> pts = sample_points(dens, 10);
    BigFloat lo_diff(8), hi_diff(8);
    bool first = true;
    for (const auto& x : pts) {
        BigFloat d = eval_at(ours, x, 50) - eval_at(expected, var, x, 50);
        if (first) {
            lo_diff = d;
            hi_diff = d;
            first = false;
        } else {
            if (d.cmp(lo_diff) < 0) lo_diff = d;
            if (hi_diff.cmp(d) < 0) hi_diff = d;
        }
    }
    BigFloat spread = hi_diff - lo_diff;
    BigFloat limit = BigFloat::pow10(-40, BigFloat::bits_for_digits(60));
    if (!(spread.abs() < limit))
        return "difference from expected form is not constant (spread " + spread.str(3) + ")";
    return "";
}

std::string run_integrate(const CorpusEntry& e, double tol) {
    ExprPtr input = parse_expr_text(e.input);

    bool rational_integrand = true;
    RatFun<QuadExt> f;
    try {
        f = expr_to_ratfun<QuadExt>(input, e.var);
    } catch (const error& err) {
        if (err.code() != errc::not_rational_in_var) throw;
        rational_integrand = false;
    }

    if (!e.lo) {  // indefinite
        if (!rational_integrand) return "indefinite integration needs a rational integrand";
        AntiDeriv F = integrate_rational(f);
        if (!verify_antiderivative(F, f)) return "derivative identity failed";
        if (e.expect) {
            ExprPtr expected = parse_expr_text(*e.expect);
            RatFun<QuadExt> dexp = expr_to_ratfun<QuadExt>(differentiate(expected, e.var), e.var);
            if (dexp != f) return "expected form does not differentiate to the integrand";
            std::vector<Poly<QuadExt>> dens{f.den()};
            for (const auto& at : F.atans) dens.push_back(at.arg.den());
            if (!F.rat_part.is_zero()) dens.push_back(F.rat_part.den());
            std::string msg = check_constant_difference(F, expected, e.var, dens);
            if (!msg.empty()) return msg;
        }
        return "";
    }

    Bound blo = parse_bound(*e.lo), bhi = parse_bound(*e.hi);
    ConstExpr value;
    double numeric_lo, numeric_hi;
    if (rational_integrand) {
        if (blo.pi_multiple || bhi.pi_multiple)
            return "rational integrand with pi bounds is unsupported";
        Interval I(blo.value, bhi.value);
        value = definite_integrate(f, I);
        AntiDeriv F = integrate_rational(f);
        if (!verify_antiderivative(F, f)) return "derivative identity failed";
        numeric_lo = I.lo.to_double();
        numeric_hi = I.hi.to_double();
    } else {
        if (!blo.pi_multiple && !blo.value.is_zero())
            return "trig integrand needs pi-multiple bounds";
        if (!bhi.pi_multiple && !bhi.value.is_zero())
            return "trig integrand needs pi-multiple bounds";
        PiMultiple lo{blo.pi_multiple ? blo.value : Rat(0)};
        PiMultiple hi{bhi.pi_multiple ? bhi.value : Rat(0)};
        value = evaluate_trig_definite(input, e.var, lo, hi);
        numeric_lo = lo.q.to_double() * M_PI;
        numeric_hi = hi.q.to_double() * M_PI;
    }

    double ours = const_eval(value, 30).to_double();
    if (e.expect) {
        ConstExpr expected = const_from_expr(parse_expr_text(*e.expect));
        EqVerdict v = const_equal(value, expected);
        if (v.result == Eq::not_equal) return "exact value differs from expected closed form";
        if (v.result == Eq::undecided && !v.numeric_agrees)
            return "numeric check against expected closed form failed (|delta| = " +
                   v.abs_delta + ")";
    }
    if (e.expect_value) {
        double want = std::stod(*e.expect_value);
        if (!close(ours, want, tol))
            return "numeric value " + std::to_string(ours) + " differs from expected " +
                   *e.expect_value;
    }
    QuadResult q = rational_integrand
                       ? quad_oracle(f, Interval(blo.value, bhi.value), 1e-10)
                       : quad_oracle(input, e.var, numeric_lo, numeric_hi, 1e-10);
    if (!close(ours, q.value, 1e-8))
        return "disagrees with the numeric oracle by " + std::to_string(ours - q.value);
    return "";
}

std::string run_diff(const CorpusEntry& e) {
    if (!e.expect) return "diff entries need an expected derivative";
    ExprPtr input = parse_expr_text(e.input);
    ExprPtr expected = parse_expr_text(*e.expect);
    ExprPtr d = differentiate(input, e.var);
    // exact route when both sides are rational in the variable
    try {
        if (expr_equal_as_ratfun(d, expected, e.var)) return "";
        return "derivative differs from the expected form";
    } catch (const error& err) {
        if (err.code() != errc::not_rational_in_var) throw;
    }
    // transcendental: 50-digit agreement at sample points
    BigFloat limit = BigFloat::pow10(-40, BigFloat::bits_for_digits(60));
    Rat x(-31, 10);
    int checked = 0;
    for (int i = 0; i < 40 && checked < 20; ++i, x += Rat(3, 10)) {
        try {
            BigFloat delta = eval_at(d, e.var, x, 50) - eval_at(expected, e.var, x, 50);
            if (!(delta.abs() < limit))
                return "derivative differs numerically at x = " + x.str();
            ++checked;
        } catch (const error&) {
            // pole or domain edge; skip the point
        }
    }
    if (checked < 10) return "could not sample enough points";
    return "";
}

std::string run_equal(const CorpusEntry& e) {
    if (!e.expect) return "equal entries need 'expect'";
    ConstExpr a = const_from_expr(parse_expr_text(e.input));
    ConstExpr b = const_from_expr(parse_expr_text(*e.expect));
    EqVerdict v = const_equal(a, b);
    if (v.result == Eq::equal) return "";
    if (v.result == Eq::undecided && v.numeric_agrees) return "";
    return std::string("expected Equal, got ") +
           (v.result == Eq::not_equal ? "NotEqual" : "Undecided") + " (|delta| = " +
           v.abs_delta + ")";
}

}  // namespace

EntryOutcome run_corpus_entry(const CorpusEntry& e, double value_tol) {
    EntryOutcome out;
    out.id = e.id;
    try {
        std::string detail;
        if (e.op == "integrate")
            detail = run_integrate(e, value_tol);
        else if (e.op == "diff")
            detail = run_diff(e);
        else if (e.op == "equal")
            detail = run_equal(e);
        else
            detail = "unknown op '" + e.op + "'";
        out.pass = detail.empty();
        out.detail = detail;
    } catch (const error& err) {
        out.pass = false;
        out.detail = err.what();
    }
    return out;
}

CorpusReport run_corpus(const std::string& path, double value_tol) {
    CorpusReport rep;
    for (const auto& e : load_corpus(path)) {
        rep.entries.push_back(run_corpus_entry(e, value_tol));
        if (rep.entries.back().pass)
            ++rep.passed;
        else
            ++rep.failed;
    }
    return rep;
}

}  // namespace ratint
