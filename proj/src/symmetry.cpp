#include "ratint/symmetry.hpp"

namespace ratint {

TrigPoly TrigPoly::constant(const Rat& c) {
    TrigPoly p;
    if (!c.is_zero()) p.terms[{0, 0, 0}] = c;
    return p;
}

TrigPoly TrigPoly::var() {
    TrigPoly p;
    p.terms[{1, 0, 0}] = Rat(1);
    return p;
}

TrigPoly TrigPoly::sin_x() {
    TrigPoly p;
    p.terms[{0, 1, 0}] = Rat(1);
    return p;
}

TrigPoly TrigPoly::cos_x() {
    TrigPoly p;
    p.terms[{0, 0, 1}] = Rat(1);
    return p;
}

TrigPoly TrigPoly::operator-() const {
    TrigPoly p;
    for (const auto& [k, c] : terms) p.terms[k] = -c;
    return p;
}

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
    TrigPoly p = a;
    for (const auto& [k, c] : b.terms) {
        auto it = p.terms.find(k);
        if (it == p.terms.end())
            p.terms[k] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) p.terms.erase(it);
        }
    }
    return p;
}

TrigPoly operator-(const TrigPoly& a, const TrigPoly& b) { return a + (-b); }

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
    TrigPoly p;
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            TrigPoly::Key k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]};
            Rat c = ca * cb;
            auto it = p.terms.find(k);
            if (it == p.terms.end())
                p.terms[k] = c;
            else {
                it->second += c;
                if (it->second.is_zero()) p.terms.erase(it);
            }
        }
    return p;
}

TrigPoly TrigPoly::reduce_cos2() const {
    TrigPoly out;
    for (const auto& [k, c] : terms) {
        if (k[2] < 2) {
            out = out + [&] {
                TrigPoly t;
                t.terms[k] = c;
                return t;
            }();
            continue;
        }
        // cos^2 = 1 - sin^2
        TrigPoly rest;
        rest.terms[{k[0], k[1], k[2] - 2}] = c;
        TrigPoly one_minus_s2 = TrigPoly::constant(Rat(1)) - TrigPoly::sin_x() * TrigPoly::sin_x();
        out = out + (rest * one_minus_s2).reduce_cos2();
    }
    return out;
}

TrigPoly TrigPoly::reduce_sin2() const {
    TrigPoly out;
    for (const auto& [k, c] : terms) {
        if (k[1] < 2) {
            TrigPoly t;
            t.terms[k] = c;
            out = out + t;
            continue;
        }
        TrigPoly rest;
        rest.terms[{k[0], k[1] - 2, k[2]}] = c;
        TrigPoly one_minus_c2 = TrigPoly::constant(Rat(1)) - TrigPoly::cos_x() * TrigPoly::cos_x();
        out = out + (rest * one_minus_c2).reduce_sin2();
    }
    return out;
}

TrigPoly TrigPoly::substitute_neg_x() const {
    TrigPoly p;
    for (const auto& [k, c] : terms)
        p.terms[k] = ((k[0] + k[1]) % 2) ? -c : c;
    return p;
}

int TrigPoly::max_x_degree() const {
    int d = 0;
    for (const auto& [k, c] : terms) d = std::max(d, k[0]);
    return d;
}

// --- conversion ---------------------------------------------------------------

namespace {

TrigRat tr_constant(const Rat& c) { return {TrigPoly::constant(c), TrigPoly::constant(Rat(1))}; }

TrigRat tr_add(const TrigRat& a, const TrigRat& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

TrigRat tr_mul(const TrigRat& a, const TrigRat& b) { return {a.num * b.num, a.den * b.den}; }

TrigRat tr_div(const TrigRat& a, const TrigRat& b) {
    if (b.num.reduce_cos2().is_zero())
        throw error(errc::division_by_zero, "division by an identically zero expression");
    return {a.num * b.den, a.den * b.num};
}

TrigRat tr_neg(const TrigRat& a) { return {-a.num, a.den}; }

}  // namespace

TrigRat expr_to_trigrat(const ExprPtr& e, const std::string& var) {
    switch (e->kind) {
        case ExprKind::num: return tr_constant(e->value);
        case ExprKind::pi:
            throw error(errc::unsupported_shape, "pi inside a trig-rational integrand");
        case ExprKind::var:
            if (e->name != var)
                throw error(errc::unsupported_shape, "unbound variable " + e->name);
            return {TrigPoly::var(), TrigPoly::constant(Rat(1))};
        case ExprKind::add:
            return tr_add(expr_to_trigrat(e->lhs, var), expr_to_trigrat(e->rhs, var));
        case ExprKind::sub:
            return tr_add(expr_to_trigrat(e->lhs, var), tr_neg(expr_to_trigrat(e->rhs, var)));
        case ExprKind::mul:
            return tr_mul(expr_to_trigrat(e->lhs, var), expr_to_trigrat(e->rhs, var));
        case ExprKind::div:
            return tr_div(expr_to_trigrat(e->lhs, var), expr_to_trigrat(e->rhs, var));
        case ExprKind::neg: return tr_neg(expr_to_trigrat(e->lhs, var));
        case ExprKind::pow: {
            long n = e->exponent;
            TrigRat b = expr_to_trigrat(e->lhs, var);
            if (n < 0) {
                b = tr_div(tr_constant(Rat(1)), b);
                n = -n;
            }
            TrigRat acc = tr_constant(Rat(1));
            for (long i = 0; i < n; ++i) acc = tr_mul(acc, b);
            return acc;
        }
        case ExprKind::fun: {
            if ((e->fn == FunKind::sin || e->fn == FunKind::cos) &&
                e->lhs->kind == ExprKind::var && e->lhs->name == var) {
                return {e->fn == FunKind::sin ? TrigPoly::sin_x() : TrigPoly::cos_x(),
                        TrigPoly::constant(Rat(1))};
            }
            if (!contains_var(e->lhs, var)) {
                QuadExt v = expr_const_value(e);
                if (v.is_rational()) return tr_constant(v.rat_part());
            }
            throw error(errc::unsupported_shape,
                        "only sin/cos of the bare variable are supported here");
        }
    }
    throw error(errc::internal, "unsupported node kind");
}

// --- parity -------------------------------------------------------------------

namespace {

Parity trigrat_parity(const TrigRat& t) {
    TrigPoly n2 = t.num.substitute_neg_x();
    TrigPoly d2 = t.den.substitute_neg_x();
    if ((n2 * t.den - t.num * d2).reduce_cos2().is_zero()) return Parity::even;
    if ((n2 * t.den + t.num * d2).reduce_cos2().is_zero()) return Parity::odd;
    return Parity::neither;
}

}  // namespace

Parity parity(const ExprPtr& e, const std::string& var) {
    return trigrat_parity(expr_to_trigrat(e, var));
}

Reduction symmetric_interval_reduce(const ExprPtr& e, const std::string& var) {
    return {parity(e, var)};
}

// --- x * f(sin x) matcher ------------------------------------------------------

namespace {

// Extracts a polynomial in sin (resp. cos) from a kernel polynomial whose
// monomials must all have x-degree 0 and the other trig degree `other_deg`.
std::optional<Poly<Rat>> poly_in(const TrigPoly& p, int which /*1 sin, 2 cos*/, int x_deg,
                                 int other_deg) {
    std::vector<Rat> cs;
    for (const auto& [k, c] : p.terms) {
        if (k[0] != x_deg) return std::nullopt;
        if (k[which == 1 ? 2 : 1] != other_deg) return std::nullopt;
        int d = k[which];
        if (static_cast<int>(cs.size()) <= d) cs.resize(d + 1, Rat(0));
        cs[d] = c;
    }
    return Poly<Rat>(std::move(cs));
}

}  // namespace

std::optional<RatFun<Rat>> x_fsin_reduce(const ExprPtr& e, const std::string& var) {
    TrigRat t = expr_to_trigrat(e, var);
    TrigPoly num = t.num.reduce_cos2();
    TrigPoly den = t.den.reduce_cos2();
    auto pnum = poly_in(num, 1, /*x_deg=*/1, /*cos_deg=*/0);
    auto pden = poly_in(den, 1, /*x_deg=*/0, /*cos_deg=*/0);
    if (!pnum || !pden || pden->is_zero()) return std::nullopt;
    return RatFun<Rat>(*pnum, *pden);
}

// --- substitution pipeline -----------------------------------------------------

namespace {

// sin(q*pi) and cos(q*pi) for q a multiple of 1/2.
std::optional<Rat> sin_at(const Rat& q) {
    Rat two_q = q * Rat(2);
    if (!two_q.is_integer()) return std::nullopt;
    mpz_class n = two_q.num();
    mpz_class m = n % 4;
    if (m < 0) m += 4;  // n mod 4 in {0,1,2,3}
    long r = m.get_si();
    if (r == 0 || r == 2) return Rat(0);
    return r == 1 ? Rat(1) : Rat(-1);
}

std::optional<Rat> cos_at(const Rat& q) { return sin_at(q + Rat(1, 2)); }

struct Pattern {
    RatFun<Rat> R;
    bool sin_times_R_of_cos;  // else cos * R(sin)
};

std::optional<Pattern> match_pattern(const TrigRat& t) {
    {
        TrigPoly num = t.num.reduce_sin2();
        TrigPoly den = t.den.reduce_sin2();
        auto rnum = poly_in(num, 2, /*x_deg=*/0, /*sin_deg=*/1);
        auto rden = poly_in(den, 2, /*x_deg=*/0, /*sin_deg=*/0);
        if (rnum && rden && !rden->is_zero()) return Pattern{RatFun<Rat>(*rnum, *rden), true};
    }
    {
        TrigPoly num = t.num.reduce_cos2();
        TrigPoly den = t.den.reduce_cos2();
        auto rnum = poly_in(num, 1, /*x_deg=*/0, /*cos_deg=*/1);
        auto rden = poly_in(den, 1, /*x_deg=*/0, /*cos_deg=*/0);
        if (rnum && rden && !rden->is_zero()) return Pattern{RatFun<Rat>(*rnum, *rden), false};
    }
    return std::nullopt;
}

std::pair<RatFun<Rat>, Interval> pattern_to_rational(const Pattern& pat, const PiMultiple& lo,
                                                     const PiMultiple& hi) {
    std::optional<Rat> a, b;
    if (pat.sin_times_R_of_cos) {
        // y = cos x reverses orientation
        a = cos_at(hi.q);
        b = cos_at(lo.q);
    } else {
        a = sin_at(lo.q);
        b = sin_at(hi.q);
    }
    if (!a || !b)
        throw error(errc::unsupported_shape,
                    "substitution bounds must be multiples of pi/2");
    if (*a == *b)
        throw error(errc::unsupported_shape, "substitution collapses the interval");
    if (*a < *b) return {pat.R, Interval(*a, *b)};
    return {-pat.R, Interval(*b, *a)};
}

TrigRat compose(const RatFun<Rat>& f, bool with_sin) {
    auto lift = [&](const Poly<Rat>& p) {
        TrigPoly out;
        for (int i = 0; i <= p.degree(); ++i) {
            if (p[i].is_zero()) continue;
            TrigPoly::Key k{0, with_sin ? i : 0, with_sin ? 0 : i};
            out.terms[k] = p[i];
        }
        return out;
    };
    return {lift(f.num()), lift(f.den())};
}

TrigRat times_x(const TrigRat& t) {
    return {t.num * TrigPoly::var(), t.den};
}

ConstExpr integrate_pattern(const TrigRat& t, const PiMultiple& lo, const PiMultiple& hi) {
    auto pat = match_pattern(t);
    if (!pat)
        throw error(errc::unsupported_shape,
                    "integrand does not match sin*R(cos) or cos*R(sin)");
    auto [g, J] = pattern_to_rational(*pat, lo, hi);
    return definite_integrate(g, J);
}

}  // namespace

std::pair<RatFun<Rat>, Interval> trig_to_rational(const ExprPtr& e, const std::string& var,
                                                  const PiMultiple& lo, const PiMultiple& hi) {
    TrigRat t = expr_to_trigrat(e, var);
    auto pat = match_pattern(t);
    if (!pat)
        throw error(errc::unsupported_shape,
                    "integrand does not match sin*R(cos) or cos*R(sin)");
    return pattern_to_rational(*pat, lo, hi);
}

std::vector<ConstExpr> trig_definite_all_routes(const ExprPtr& e, const std::string& var) {
    TrigRat t = expr_to_trigrat(e, var);
    auto f = x_fsin_reduce(e, var);
    if (!f)
        throw error(errc::unsupported_shape, "integrand does not match x*f(sin x)");
    PiMultiple zero{Rat(0)}, one{Rat(1)}, half{Rat(1, 2)};

    std::vector<ConstExpr> out;
    // Route 1: the reduction lemma turns the integral into
    // (pi/2) * Int_0^pi f(sin x) dx, finished by the cos substitution.
    {
        ConstExpr inner = integrate_pattern(compose(*f, /*with_sin=*/true), zero, one);
        out.push_back(const_normalize(inner.times_pi(Rat(1, 2))));
    }
    // Route 2: write x = (x - pi/2) + pi/2. The shifted term u*f(cos u) is odd
    // and vanishes; the remaining term is (pi/2) * Int_0^pi f(sin x) dx.
    {
        TrigRat shifted = times_x(compose(*f, /*with_sin=*/false));
        if (trigrat_parity(shifted) != Parity::odd)
            throw error(errc::unsupported_shape, "shifted integrand is not odd");
        ConstExpr inner = integrate_pattern(compose(*f, /*with_sin=*/true), zero, one);
        out.push_back(const_normalize(inner.times_pi(Rat(1, 2))));
    }
    // Route 3: substitute u = x - pi/2 from the start: the odd part vanishes,
    // f(cos u) is even on [-pi/2, pi/2], so twice the half-interval integral,
    // finished by the sin substitution.
    {
        TrigRat shifted = times_x(compose(*f, /*with_sin=*/false));
        if (trigrat_parity(shifted) != Parity::odd)
            throw error(errc::unsupported_shape, "shifted integrand is not odd");
        TrigRat fcos = compose(*f, /*with_sin=*/false);
        if (trigrat_parity(fcos) != Parity::even)
            throw error(errc::unsupported_shape, "f(cos u) is not even");
        ConstExpr half_integral = integrate_pattern(fcos, zero, half);
        out.push_back(const_normalize(half_integral.scaled(Rat(2)).times_pi(Rat(1, 2))));
    }
    return out;
}

ConstExpr evaluate_trig_definite(const ExprPtr& e, const std::string& var,
                                 const PiMultiple& lo, const PiMultiple& hi) {
    TrigRat t = expr_to_trigrat(e, var);
    if (auto pat = match_pattern(t)) {
        auto [g, J] = pattern_to_rational(*pat, lo, hi);
        return const_normalize(definite_integrate(g, J));
    }
    if (lo.q == Rat(0) && hi.q == Rat(1)) {
        if (x_fsin_reduce(e, var)) return trig_definite_all_routes(e, var).front();
    }
    throw error(errc::unsupported_shape, "no symmetry reduction applies to this integrand");
}

}  // namespace ratint
