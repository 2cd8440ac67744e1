#include "ratint/constant.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "ratint/antideriv.hpp"
#include "ratint/parser.hpp"

namespace ratint {

ConstExpr ConstExpr::rational(const Rat& r) {
    ConstExpr c;
    c.rational_part = r;
    return c;
}

ConstExpr ConstExpr::pi_times(const Rat& q) {
    ConstExpr c;
    c.pi_coeff = q;
    return c;
}

ConstExpr ConstExpr::atan_of(const Rat& coeff, const QuadExt& arg) {
    ConstExpr c;
    if (arg.is_zero()) return c;
    c.atan_terms.push_back({coeff, arg});
    return c;
}

ConstExpr ConstExpr::log_of(const Rat& coeff, const QuadExt& arg) {
    if (arg.sign() <= 0)
        throw error(errc::domain_error, "log of a non-positive constant");
    ConstExpr c;
    c.log_terms.push_back({coeff, arg});
    return c;
}

bool ConstExpr::is_zero_literal() const {
    return rational_part.is_zero() && pi_coeff.is_zero() && pi2_coeff.is_zero() &&
           atan_terms.empty() && log_terms.empty();
}

bool ConstExpr::is_rational_only() const {
    return pi_coeff.is_zero() && pi2_coeff.is_zero() && atan_terms.empty() && log_terms.empty();
}

bool ConstExpr::is_pi_and_rational_only() const {
    return pi2_coeff.is_zero() && atan_terms.empty() && log_terms.empty();
}

ConstExpr ConstExpr::operator-() const { return scaled(Rat(-1)); }

ConstExpr operator+(const ConstExpr& a, const ConstExpr& b) {
    ConstExpr c = a;
    c.rational_part += b.rational_part;
    c.pi_coeff += b.pi_coeff;
    c.pi2_coeff += b.pi2_coeff;
    c.atan_terms.insert(c.atan_terms.end(), b.atan_terms.begin(), b.atan_terms.end());
    c.log_terms.insert(c.log_terms.end(), b.log_terms.begin(), b.log_terms.end());
    return c;
}

ConstExpr operator-(const ConstExpr& a, const ConstExpr& b) { return a + (-b); }

ConstExpr ConstExpr::scaled(const Rat& k) const {
    ConstExpr c = *this;
    c.rational_part *= k;
    c.pi_coeff *= k;
    c.pi2_coeff *= k;
    for (auto& t : c.atan_terms) t.coeff *= k;
    for (auto& t : c.log_terms) t.coeff *= k;
    if (k.is_zero()) {
        c.atan_terms.clear();
        c.log_terms.clear();
    }
    return c;
}

ConstExpr ConstExpr::times_pi(const Rat& q) const {
    if (!pi2_coeff.is_zero() || !atan_terms.empty() || !log_terms.empty())
        throw error(errc::not_representable,
                    "product with pi leaves the closed-form constant representation");
    ConstExpr c;
    c.pi_coeff = rational_part * q;
    c.pi2_coeff = pi_coeff * q;
    return c;
}

namespace {

// Deterministic key (not value order) used for sorting and merging.
std::tuple<long long, Rat, Rat> quadext_key(const QuadExt& q) {
    return {q.radicand(), q.rat_part(), q.rad_coeff()};
}

bool key_less(const QuadExt& a, const QuadExt& b) { return quadext_key(a) < quadext_key(b); }

}  // namespace

ConstExpr const_normalize(const ConstExpr& c) {
    ConstExpr out;
    out.rational_part = c.rational_part;
    out.pi_coeff = c.pi_coeff;
    out.pi2_coeff = c.pi2_coeff;
    for (const auto& t : c.atan_terms) {
        if (t.coeff.is_zero() || t.arg.is_zero()) continue;
        Rat coeff = t.coeff;
        QuadExt arg = t.arg;
        if (arg.sign() < 0) {
            coeff = -coeff;
            arg = -arg;
        }
        QuadExt one(Rat(1));
        if (arg == one) {
            out.pi_coeff += coeff / Rat(4);
            continue;
        }
        if ((arg - one).sign() > 0) {  // atan(x) = pi/2 - atan(1/x), x > 1
            out.pi_coeff += coeff / Rat(2);
            coeff = -coeff;
            arg = arg.inverse();
        }
        out.atan_terms.push_back({coeff, arg});
    }
    for (const auto& t : c.log_terms) {
        if (t.coeff.is_zero()) continue;
        if (t.arg.sign() <= 0)
            throw error(errc::domain_error, "log of a non-positive constant");
        if (t.arg.is_one()) continue;
        out.log_terms.push_back(t);
    }
    auto merge_atans = [](std::vector<ConstAtan>& ts) {
        std::sort(ts.begin(), ts.end(), [](const ConstAtan& x, const ConstAtan& y) {
            return key_less(x.arg, y.arg);
        });
        std::vector<ConstAtan> m;
        for (auto& t : ts) {
            if (!m.empty() && m.back().arg == t.arg)
                m.back().coeff += t.coeff;
            else
                m.push_back(t);
        }
        std::erase_if(m, [](const ConstAtan& t) { return t.coeff.is_zero(); });
        ts = std::move(m);
    };
    auto merge_logs = [](std::vector<ConstLog>& ts) {
        std::sort(ts.begin(), ts.end(), [](const ConstLog& x, const ConstLog& y) {
            return key_less(x.arg, y.arg);
        });
        std::vector<ConstLog> m;
        for (auto& t : ts) {
            if (!m.empty() && m.back().arg == t.arg)
                m.back().coeff += t.coeff;
            else
                m.push_back(t);
        }
        std::erase_if(m, [](const ConstLog& t) { return t.coeff.is_zero(); });
        ts = std::move(m);
    };
    merge_atans(out.atan_terms);
    merge_logs(out.log_terms);
    return out;
}

ConstExpr arctan_add(const Rat& a, const Rat& b) {
    Rat ab = a * b;
    if (ab == Rat(1)) return ConstExpr::pi_times(Rat(a.sign(), 2));
    ConstExpr r = ConstExpr::atan_of(Rat(1), QuadExt((a + b) / (Rat(1) - ab)));
    if (ab > Rat(1)) r.pi_coeff += Rat(a.sign());
    return const_normalize(r);
}

BigFloat const_eval(const ConstExpr& c, int digits) {
    long bits = BigFloat::bits_for_digits(digits + 12);
    BigFloat acc = BigFloat::from_rat(c.rational_part, bits);
    if (!c.pi_coeff.is_zero() || !c.pi2_coeff.is_zero()) {
        BigFloat pi = BigFloat::pi(bits);
        if (!c.pi_coeff.is_zero()) acc = acc + BigFloat::from_rat(c.pi_coeff, bits) * pi;
        if (!c.pi2_coeff.is_zero())
            acc = acc + BigFloat::from_rat(c.pi2_coeff, bits) * pi * pi;
    }
    for (const auto& t : c.atan_terms)
        acc = acc + BigFloat::from_rat(t.coeff, bits) * BigFloat::from_quadext(t.arg, bits).atan();
    for (const auto& t : c.log_terms)
        acc = acc + BigFloat::from_rat(t.coeff, bits) * BigFloat::from_quadext(t.arg, bits).log();
    return acc;
}

namespace {

mpz_class lcm_dens(const ConstExpr& d) {
    mpz_class l = d.pi_coeff.den();
    for (const auto& t : d.atan_terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.den().get_mpz_t());
    return l;
}

// Exact test of  sum n_i * atan(p_i/q_i) + M*pi == 0  via the angle of the
// Gaussian product prod (q_i + p_i*i)^(n_i); a coarse double-precision bound
// resolves the residual 2*pi winding.
bool atan_pi_combination_is_zero(const std::vector<std::pair<long, Rat>>& terms, long M) {
    ComplexK<Rat> z(Rat(1), Rat(0));
    double S = 0.0;
    for (const auto& [n, r] : terms) {
        if (n == 0) continue;
        ComplexK<Rat> g(Rat(r.den()), Rat(r.num()));  // q + p*i, q > 0
        long e = n < 0 ? -n : n;
        ComplexK<Rat> p = n < 0 ? g.conj() * (g * g.conj()).inverse() : g;
        // p^e by squaring
        ComplexK<Rat> acc(Rat(1), Rat(0));
        while (e > 0) {
            if (e & 1) acc *= p;
            p *= p;
            e >>= 1;
        }
        z *= acc;
        S += static_cast<double>(n) * std::atan(r.to_double());
    }
    S += static_cast<double>(M) * M_PI;
    if (!z.im().is_zero()) return false;
    bool even = (M % 2) == 0;
    if (even && z.re().sign() <= 0) return false;
    if (!even && z.re().sign() >= 0) return false;
    return std::fabs(S) < 3.0;  // nonzero candidates are multiples of 2*pi
}

}  // namespace

EqVerdict const_equal(const ConstExpr& c1, const ConstExpr& c2) {
    ConstExpr d = const_normalize(c1 - c2);

    EqVerdict v;
    BigFloat delta = const_eval(d, 150).abs();
    BigFloat thresh = BigFloat::pow10(-100, BigFloat::bits_for_digits(150));
    v.numeric_agrees = delta.cmp(thresh) < 0;
    v.abs_delta = delta.str(3);

    bool exact_domain = true;
    for (const auto& t : d.atan_terms)
        if (!t.arg.is_rational()) exact_domain = false;
    for (const auto& t : d.log_terms)
        if (!t.arg.is_rational()) exact_domain = false;
    if (!exact_domain) {
        v.result = Eq::undecided;
        return v;
    }

    // pi^2 and the bare rational must vanish on their own
    if (!d.pi2_coeff.is_zero() || !d.rational_part.is_zero()) {
        v.result = Eq::not_equal;
        return v;
    }
    // log part: sum d_i log(s_i) = 0  iff  prod s_i^(d_i) = 1, exactly
    if (!d.log_terms.empty()) {
        mpz_class l = 1;
        for (const auto& t : d.log_terms)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.den().get_mpz_t());
        Rat prod(1);
        for (const auto& t : d.log_terms) {
            mpz_class n = t.coeff.num() * (l / t.coeff.den());
            long e = static_cast<long>(n.get_si());
            prod *= rat_pow(t.arg.rat_part(), e);
        }
        if (prod != Rat(1)) {
            v.result = Eq::not_equal;
            return v;
        }
    }
    // atan + pi part
    mpz_class N = lcm_dens(d);
    std::vector<std::pair<long, Rat>> terms;
    for (const auto& t : d.atan_terms) {
        mpz_class n = t.coeff.num() * (N / t.coeff.den());
        Rat arg = t.arg.rat_part();
        if (arg.sign() < 0)
            throw error(errc::internal, "normalized atan argument must be positive");
        terms.emplace_back(static_cast<long>(n.get_si()), arg);
    }
    mpz_class M = d.pi_coeff.num() * (N / d.pi_coeff.den());
    v.result = atan_pi_combination_is_zero(terms, static_cast<long>(M.get_si()))
                   ? Eq::equal
                   : Eq::not_equal;
    return v;
}

// --- conversion to and from expressions --------------------------------------

namespace {

void accumulate_term(ExprPtr& acc, ExprPtr term, bool positive) {
    if (!acc) {
        acc = positive ? term : expr_neg(term);
        return;
    }
    acc = positive ? expr_add(acc, term) : expr_sub(acc, term);
}

// coeff * unit with pretty folding: 1/4 * pi prints as pi/4, 5/4 * pi as
// 5/4*pi.
ExprPtr coeff_unit_expr(const Rat& mag, ExprPtr unit) {
    if (mag.is_one()) return unit;
    if (mag.num() == 1) return expr_div(unit, expr_num(Rat(mag.den())));
    return expr_mul(expr_num(mag), unit);
}

}  // namespace

ExprPtr const_to_expr(const ConstExpr& c_in) {
    ConstExpr c = const_normalize(c_in);
    ExprPtr acc;
    if (!c.rational_part.is_zero()) acc = expr_num(c.rational_part);
    if (!c.pi_coeff.is_zero())
        accumulate_term(acc, coeff_unit_expr(c.pi_coeff.abs(), expr_pi()),
                        c.pi_coeff.sign() > 0);
    if (!c.pi2_coeff.is_zero())
        accumulate_term(acc, coeff_unit_expr(c.pi2_coeff.abs(), expr_pow(expr_pi(), 2)),
                        c.pi2_coeff.sign() > 0);
    for (const auto& t : c.atan_terms)
        accumulate_term(acc,
                        coeff_unit_expr(t.coeff.abs(),
                                        expr_fun(FunKind::atan, quadext_to_expr(t.arg))),
                        t.coeff.sign() > 0);
    for (const auto& t : c.log_terms)
        accumulate_term(acc,
                        coeff_unit_expr(t.coeff.abs(),
                                        expr_fun(FunKind::log, quadext_to_expr(t.arg))),
                        t.coeff.sign() > 0);
    return acc ? acc : expr_int(0);
}

std::string const_to_string(const ConstExpr& c) { return print_expr(const_to_expr(c)); }

ConstExpr const_from_expr(const ExprPtr& e) {
    switch (e->kind) {
        case ExprKind::num: return ConstExpr::rational(e->value);
        case ExprKind::pi: return ConstExpr::pi_times(Rat(1));
        case ExprKind::var:
            throw error(errc::not_rational_in_var,
                        "variable in a constant expression: " + e->name);
        case ExprKind::add: return const_from_expr(e->lhs) + const_from_expr(e->rhs);
        case ExprKind::sub: return const_from_expr(e->lhs) - const_from_expr(e->rhs);
        case ExprKind::neg: return -const_from_expr(e->lhs);
        case ExprKind::mul: {
            ConstExpr a = const_from_expr(e->lhs);
            ConstExpr b = const_from_expr(e->rhs);
            if (a.is_rational_only()) return b.scaled(a.rational_part);
            if (b.is_rational_only()) return a.scaled(b.rational_part);
            if (a.is_pi_and_rational_only() && b.is_pi_and_rational_only() &&
                a.rational_part.is_zero())
                return b.times_pi(a.pi_coeff);
            if (a.is_pi_and_rational_only() && b.is_pi_and_rational_only() &&
                b.rational_part.is_zero())
                return a.times_pi(b.pi_coeff);
            throw error(errc::not_representable,
                        "product of transcendental constants is not representable");
        }
        case ExprKind::div: {
            ConstExpr b = const_from_expr(e->rhs);
            if (!b.is_rational_only() || b.rational_part.is_zero())
                throw error(errc::not_representable, "division by a non-rational constant");
            return const_from_expr(e->lhs).scaled(b.rational_part.inverse());
        }
        case ExprKind::pow: {
            if (e->lhs->kind == ExprKind::pi) {
                if (e->exponent == 1) return ConstExpr::pi_times(Rat(1));
                if (e->exponent == 2) {
                    ConstExpr c;
                    c.pi2_coeff = Rat(1);
                    return c;
                }
                throw error(errc::not_representable, "unsupported power of pi");
            }
            ConstExpr b = const_from_expr(e->lhs);
            if (!b.is_rational_only())
                throw error(errc::not_representable, "power of a transcendental constant");
            return ConstExpr::rational(rat_pow(b.rational_part, e->exponent));
        }
        case ExprKind::fun: {
            if (e->fn == FunKind::atan)
                return ConstExpr::atan_of(Rat(1), expr_const_value(e->lhs));
            if (e->fn == FunKind::log)
                return ConstExpr::log_of(Rat(1), expr_const_value(e->lhs));
            if (e->fn == FunKind::sqrt) {
                QuadExt v = expr_const_value(e);
                if (v.is_rational()) return ConstExpr::rational(v.rat_part());
                throw error(errc::not_representable,
                            "bare quadratic irrational outside atan/log");
            }
            throw error(errc::unsupported_shape,
                        std::string(fun_name(e->fn)) + " in a constant expression");
        }
    }
    throw error(errc::internal, "unsupported node kind");
}

}  // namespace ratint
