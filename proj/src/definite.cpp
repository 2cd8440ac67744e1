#include "ratint/definite.hpp"

namespace ratint {

std::vector<RootInterval> real_roots_in_interval(const Poly<QuadExt>& p, const Interval& I) {
    return isolate_real_roots(p, I.lo, I.hi);
}

std::vector<RootInterval> real_roots_in_interval(const Poly<Rat>& p, const Interval& I) {
    return isolate_real_roots(p, I.lo, I.hi);
}

namespace {

Rat rat_or_throw(const QuadExt& v, const char* what) {
    if (!v.is_rational())
        throw error(errc::not_representable,
                    std::string(what) + " is a quadratic irrational; the closed-form "
                                        "constant type holds rational coefficients only");
    return v.rat_part();
}

QuadExt abs_value(const QuadExt& v) { return v.sign() < 0 ? -v : v; }

}  // namespace

ConstExpr eval_antideriv_at(const AntiDeriv& F, const Rat& x, int side) {
    ConstExpr out;
    QuadExt qx(x);
    QuadExt rat_value = F.poly_part.eval(qx);
    if (!F.rat_part.is_zero()) rat_value += F.rat_part.eval(qx);
    out.rational_part = rat_or_throw(rat_value, "antiderivative value");
    for (const auto& lt : F.logs) {
        QuadExt val = lt.arg.eval(qx);
        if (val.is_zero())
            throw error(errc::pole_at_point, "logarithmic singularity at evaluation point");
        out = out + ConstExpr::log_of(rat_or_throw(lt.coeff, "log coefficient"), abs_value(val));
    }
    for (const auto& at : F.atans) {
        Rat coeff = rat_or_throw(at.coeff, "atan coefficient");
        QuadExt dv = at.arg.den().eval(qx);
        if (dv.is_zero()) {
            if (side == 0)
                throw error(errc::pole_at_point, "atan argument pole at evaluation point");
            // one-sided limit: sign of num(x) * (sign of den approaching from `side`)
            if (!poly_is_rational(at.arg.den()) || !poly_is_rational(at.arg.num()))
                throw error(errc::not_representable, "irrational atan argument pole");
            Poly<Rat> D = demote_poly(at.arg.den());
            Poly<Rat> N = demote_poly(at.arg.num());
            RootInterval here{x, x, true};
            int s = sign_beside_root(N, D, here, side) * sign_beside_root(D, D, here, side);
            out.pi_coeff += coeff * Rat(s, 2);
        } else {
            out = out + ConstExpr::atan_of(coeff, at.arg.num().eval(qx) / dv);
        }
    }
    return out;
}

ConstExpr definite_integrate(const RatFun<QuadExt>& f, const Interval& I) {
    if (f.is_zero()) return {};
    if (f.den().degree() > 0) {
        auto poles = real_roots_in_interval(f.den(), I);
        if (!poles.empty())
            throw error(errc::improper_integral,
                        "integrand has a real pole inside or at the boundary of the interval");
    }
    AntiDeriv F = integrate_rational(f);
    ConstExpr hi = eval_antideriv_at(F, I.hi, -1);
    ConstExpr lo = eval_antideriv_at(F, I.lo, +1);
    return const_normalize(hi - lo);
}

ConstExpr definite_integrate(const RatFun<Rat>& f, const Interval& I) {
    return definite_integrate(lift_ratfun(f), I);
}

// --- evaluation of general closed-form antiderivatives ------------------------

namespace {

// A Fun node whose argument involves the variable, or a pi constant, blocks
// treating a subtree as a plain rational function of the variable.
bool plain_rational_subtree(const ExprPtr& e, const std::string& var) {
    switch (e->kind) {
        case ExprKind::pi: return false;
        case ExprKind::num:
        case ExprKind::var: return true;
        case ExprKind::fun:
            if (contains_var(e->lhs, var)) return false;
            return e->fn == FunKind::sqrt && plain_rational_subtree(e->lhs, var);
        default:
            if (e->lhs && !plain_rational_subtree(e->lhs, var)) return false;
            return !e->rhs || plain_rational_subtree(e->rhs, var);
    }
}

struct AtanOccurrence {
    Rat multiplier;
    RatFun<QuadExt> arg;
};

// Walks a linear combination of rational-in-var chunks, atan(...) and log(...)
// applications, collecting the atan occurrences with their scalar multipliers.
void collect_atans(const ExprPtr& e, const std::string& var, const Rat& mult,
                   std::vector<AtanOccurrence>& out) {
    if (!contains_var(e, var)) return;
    if (plain_rational_subtree(e, var)) return;
    switch (e->kind) {
        case ExprKind::add:
        case ExprKind::sub:
            collect_atans(e->lhs, var, mult, out);
            collect_atans(e->rhs, var, e->kind == ExprKind::sub ? -mult : mult, out);
            return;
        case ExprKind::neg:
            collect_atans(e->lhs, var, -mult, out);
            return;
        case ExprKind::mul: {
            if (!contains_var(e->lhs, var)) {
                QuadExt c = expr_const_value(e->lhs);
                collect_atans(e->rhs, var, mult * rat_or_throw(c, "coefficient"), out);
                return;
            }
            if (!contains_var(e->rhs, var)) {
                QuadExt c = expr_const_value(e->rhs);
                collect_atans(e->lhs, var, mult * rat_or_throw(c, "coefficient"), out);
                return;
            }
            throw error(errc::unsupported_shape,
                        "antiderivative is not a linear combination of closed-form terms");
        }
        case ExprKind::div: {
            if (!contains_var(e->rhs, var)) {
                QuadExt c = expr_const_value(e->rhs);
                Rat rc = rat_or_throw(c, "denominator");
                if (rc.is_zero()) throw error(errc::division_by_zero, "division by zero");
                collect_atans(e->lhs, var, mult / rc, out);
                return;
            }
            throw error(errc::unsupported_shape, "variable denominator around atan/log terms");
        }
        case ExprKind::fun:
            if (e->fn == FunKind::atan) {
                out.push_back({mult, expr_to_ratfun<QuadExt>(e->lhs, var)});
                return;
            }
            if (e->fn == FunKind::log) return;  // handled by the evaluator
            throw error(errc::unsupported_shape,
                        std::string(fun_name(e->fn)) + " inside an antiderivative");
        default:
            throw error(errc::unsupported_shape,
                        "antiderivative is not a linear combination of closed-form terms");
    }
}

void eval_walk(const ExprPtr& e, const std::string& var, const Rat& mult, const Rat& x,
               int side, ConstExpr& acc) {
    if (mult.is_zero()) return;
    if (plain_rational_subtree(e, var)) {
        RatFun<QuadExt> r = expr_to_ratfun<QuadExt>(e, var);
        QuadExt val = r.eval(QuadExt(x));
        acc.rational_part += mult * rat_or_throw(val, "rational chunk value");
        return;
    }
    switch (e->kind) {
        case ExprKind::pi:
            acc.pi_coeff += mult;
            return;
        case ExprKind::add:
        case ExprKind::sub:
            eval_walk(e->lhs, var, mult, x, side, acc);
            eval_walk(e->rhs, var, e->kind == ExprKind::sub ? -mult : mult, x, side, acc);
            return;
        case ExprKind::neg:
            eval_walk(e->lhs, var, -mult, x, side, acc);
            return;
        case ExprKind::mul: {
            if (!contains_var(e->lhs, var) && e->lhs->kind != ExprKind::pi) {
                QuadExt c = expr_const_value(e->lhs);
                eval_walk(e->rhs, var, mult * rat_or_throw(c, "coefficient"), x, side, acc);
                return;
            }
            if (!contains_var(e->rhs, var) && e->rhs->kind != ExprKind::pi) {
                QuadExt c = expr_const_value(e->rhs);
                eval_walk(e->lhs, var, mult * rat_or_throw(c, "coefficient"), x, side, acc);
                return;
            }
            throw error(errc::unsupported_shape, "nonlinear combination in antiderivative");
        }
        case ExprKind::div: {
            if (!contains_var(e->rhs, var)) {
                QuadExt c = expr_const_value(e->rhs);
                Rat rc = rat_or_throw(c, "denominator");
                if (rc.is_zero()) throw error(errc::division_by_zero, "division by zero");
                eval_walk(e->lhs, var, mult / rc, x, side, acc);
                return;
            }
            throw error(errc::unsupported_shape, "variable denominator around atan/log terms");
        }
        case ExprKind::fun: {
            if (contains_var(e->lhs, var)) {
                RatFun<QuadExt> arg = expr_to_ratfun<QuadExt>(e->lhs, var);
                QuadExt qx(x);
                if (e->fn == FunKind::atan) {
                    QuadExt dv = arg.den().eval(qx);
                    if (dv.is_zero()) {
                        if (side == 0)
                            throw error(errc::pole_at_point, "atan argument pole at endpoint");
                        Poly<Rat> D = demote_poly(arg.den());
                        Poly<Rat> N = demote_poly(arg.num());
                        RootInterval here{x, x, true};
                        int s = sign_beside_root(N, D, here, side) *
                                sign_beside_root(D, D, here, side);
                        acc.pi_coeff += mult * Rat(s, 2);
                    } else {
                        acc = acc + ConstExpr::atan_of(mult, arg.num().eval(qx) / dv);
                    }
                    return;
                }
                if (e->fn == FunKind::log) {
                    QuadExt val = arg.eval(qx);
                    if (val.is_zero())
                        throw error(errc::pole_at_point, "log singularity at endpoint");
                    acc = acc + ConstExpr::log_of(mult, abs_value(val));
                    return;
                }
                throw error(errc::unsupported_shape,
                            std::string(fun_name(e->fn)) + " of the variable");
            }
            // constant transcendental term
            if (e->fn == FunKind::atan) {
                acc = acc + ConstExpr::atan_of(mult, expr_const_value(e->lhs));
                return;
            }
            if (e->fn == FunKind::log) {
                acc = acc + ConstExpr::log_of(mult, expr_const_value(e->lhs));
                return;
            }
            throw error(errc::unsupported_shape, "unsupported constant term");
        }
        default:
            throw error(errc::unsupported_shape, "antiderivative shape not supported");
    }
}

}  // namespace

ConstExpr eval_antideriv_expr_at(const ExprPtr& F, const std::string& var, const Rat& x,
                                 int side) {
    ConstExpr acc;
    eval_walk(F, var, Rat(1), x, side, acc);
    return acc;
}

ConstExpr definite_from_antiderivative(const ExprPtr& F, const std::string& var,
                                       const RatFun<QuadExt>& f, const Interval& I,
                                       bool split_at_discontinuities) {
    // the contract: F must actually differentiate to f
    RatFun<QuadExt> dF;
    try {
        dF = expr_to_ratfun<QuadExt>(differentiate(F, var), var);
    } catch (const error& e) {
        throw error(errc::invalid_antiderivative,
                    std::string("cannot verify derivative: ") + e.what());
    }
    if (dF != f)
        throw error(errc::invalid_antiderivative,
                    "supplied expression does not differentiate to the integrand");

    if (f.den().degree() > 0 && !real_roots_in_interval(f.den(), I).empty())
        throw error(errc::improper_integral, "integrand has a real pole in the interval");

    ConstExpr hi = eval_antideriv_expr_at(F, var, I.hi, -1);
    ConstExpr lo = eval_antideriv_expr_at(F, var, I.lo, +1);
    ConstExpr result = hi - lo;

    if (split_at_discontinuities) {
        std::vector<AtanOccurrence> occs;
        collect_atans(F, var, Rat(1), occs);
        for (const auto& occ : occs) {
            if (occ.arg.den().degree() < 1) continue;
            if (!poly_is_rational(occ.arg.den()) || !poly_is_rational(occ.arg.num()))
                throw error(errc::not_representable, "irrational atan argument");
            Poly<Rat> D = demote_poly(occ.arg.den());
            Poly<Rat> N = demote_poly(occ.arg.num());
            for (const RootInterval& iv : isolate_real_roots(D, I.lo, I.hi)) {
                if (iv.exact && (iv.lo == I.lo || iv.lo == I.hi)) continue;  // endpoint pole
                // jump of atan(N/D) across the zero of D: (pi/2)(s+ - s-)
                int sl = sign_beside_root(N, D, iv, -1) * sign_beside_root(D, D, iv, -1);
                int sr = sign_beside_root(N, D, iv, +1) * sign_beside_root(D, D, iv, +1);
                if (sl != sr) result.pi_coeff -= occ.multiplier * Rat(sr - sl, 2);
            }
        }
    }
    return const_normalize(result);
}

}  // namespace ratint
