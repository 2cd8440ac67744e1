#include "ratint/integrate.hpp"

#include <algorithm>

#include "ratint/resultant.hpp"
#include "ratint/roots.hpp"

namespace ratint {

// --- expression conversion ---------------------------------------------------

namespace {

ExprPtr coeff_times(const QuadExt& c, ExprPtr unit) {
    if (c.is_one()) return unit;
    return expr_mul(quadext_to_expr(c), unit);
}

ExprPtr monomial_expr(const std::string& var, int k) {
    if (k == 1) return expr_var(var);
    return expr_pow(expr_var(var), k);
}

// Appends `term` with the sign carried by `positive`.
void accumulate(ExprPtr& acc, ExprPtr term, bool positive) {
    if (!acc) {
        acc = positive ? term : expr_neg(term);
        return;
    }
    acc = positive ? expr_add(acc, term) : expr_sub(acc, term);
}

}  // namespace

ExprPtr quadext_to_expr(const QuadExt& q) {
    if (q.is_rational()) return expr_num(q.rat_part());
    Rat a = q.rat_part(), b = q.rad_coeff();
    ExprPtr rad = expr_sqrt_of(Rat(q.radicand()));
    ExprPtr term = b.abs().is_one() ? rad : expr_mul(expr_num(b.abs()), rad);
    ExprPtr acc = a.is_zero() ? nullptr : expr_num(a);
    accumulate(acc, term, b.sign() > 0);
    return acc;
}

ExprPtr poly_to_expr(const Poly<QuadExt>& p, const std::string& var) {
    if (p.is_zero()) return expr_int(0);
    ExprPtr acc;
    for (int i = p.degree(); i >= 0; --i) {
        QuadExt c = p[i];
        if (c.is_zero()) continue;
        bool positive = c.sign() > 0;
        QuadExt mag = positive ? c : -c;
        ExprPtr term = i == 0 ? quadext_to_expr(mag) : coeff_times(mag, monomial_expr(var, i));
        accumulate(acc, term, positive);
    }
    return acc;
}

ExprPtr ratfun_to_expr(const RatFun<QuadExt>& f, const std::string& var) {
    if (f.is_polynomial()) return poly_to_expr(f.num(), var);
    return expr_div(poly_to_expr(f.num(), var), poly_to_expr(f.den(), var));
}

RatFun<QuadExt> AntiDeriv::derivative() const {
    RatFun<QuadExt> d(poly_part.derivative());
    d = d + rat_part.derivative();
    for (const auto& lt : logs)
        d = d + lt.coeff * (RatFun<QuadExt>(lt.arg.derivative()) / RatFun<QuadExt>(lt.arg));
    for (const auto& at : atans) {
        RatFun<QuadExt> one_plus_sq = RatFun<QuadExt>(QuadExt(Rat(1))) + at.arg * at.arg;
        d = d + at.coeff * (at.arg.derivative() / one_plus_sq);
    }
    return d;
}

ExprPtr AntiDeriv::to_expr(const std::string& var) const {
    ExprPtr acc;
    if (!poly_part.is_zero()) acc = poly_to_expr(poly_part, var);
    if (!rat_part.is_zero()) accumulate(acc, ratfun_to_expr(rat_part, var), true);
    for (const auto& lt : logs) {
        bool positive = lt.coeff.sign() > 0;
        QuadExt mag = positive ? lt.coeff : -lt.coeff;
        accumulate(acc, coeff_times(mag, expr_fun(FunKind::log, poly_to_expr(lt.arg, var))),
                   positive);
    }
    for (const auto& at : atans) {
        bool positive = at.coeff.sign() > 0;
        QuadExt mag = positive ? at.coeff : -at.coeff;
        accumulate(acc, coeff_times(mag, expr_fun(FunKind::atan, ratfun_to_expr(at.arg, var))),
                   positive);
    }
    return acc ? acc : expr_int(0);
}

namespace {

int cmp_quadext(const QuadExt& a, const QuadExt& b) { return (a - b).sign(); }

int cmp_poly(const Poly<QuadExt>& a, const Poly<QuadExt>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i)
        if (int c = cmp_quadext(a[i], b[i])) return c;
    return 0;
}

int cmp_ratfun(const RatFun<QuadExt>& a, const RatFun<QuadExt>& b) {
    int da = std::max(a.num().degree(), a.den().degree());
    int db = std::max(b.num().degree(), b.den().degree());
    if (da != db) return da < db ? -1 : 1;
    if (int c = cmp_poly(a.num(), b.num())) return c;
    return cmp_poly(a.den(), b.den());
}

}  // namespace

void AntiDeriv::canonicalize() {
    std::sort(logs.begin(), logs.end(), [](const LogTerm& a, const LogTerm& b) {
        if (int c = cmp_poly(a.arg, b.arg)) return c < 0;
        return cmp_quadext(a.coeff, b.coeff) < 0;
    });
    std::vector<LogTerm> merged_logs;
    for (auto& lt : logs) {
        if (!merged_logs.empty() && merged_logs.back().arg == lt.arg)
            merged_logs.back().coeff += lt.coeff;
        else
            merged_logs.push_back(lt);
    }
    std::erase_if(merged_logs,
                  [](const LogTerm& t) { return t.coeff.is_zero() || t.arg.degree() < 1; });
    logs = std::move(merged_logs);

    std::sort(atans.begin(), atans.end(), [](const AtanTerm& a, const AtanTerm& b) {
        if (int c = cmp_ratfun(a.arg, b.arg)) return c < 0;
        return cmp_quadext(a.coeff, b.coeff) < 0;
    });
    std::vector<AtanTerm> merged;
    for (auto& at : atans) {
        if (!merged.empty() && merged.back().arg == at.arg)
            merged.back().coeff += at.coeff;
        else
            merged.push_back(at);
    }
    std::erase_if(merged, [](const AtanTerm& t) {
        return t.coeff.is_zero() ||
               (t.arg.num().degree() < 1 && t.arg.den().degree() < 1);
    });
    atans = std::move(merged);
}

// --- Hermite reduction -------------------------------------------------------

template <class K>
std::pair<RatFun<K>, RatFun<K>> hermite_reduce(const RatFun<K>& f) {
    if (!f.is_proper())
        throw error(errc::domain_error, "Hermite reduction expects a proper rational function");
    RatFun<K> U;
    RatFun<K> A = f;
    while (!A.is_zero()) {
        auto sqf = squarefree_factor(A.den());
        int mult = 1;
        Poly<K> V;
        for (const auto& [fac, m] : sqf)
            if (m > mult) {
                mult = m;
                V = fac;
            }
        if (mult == 1) break;
        Poly<K> Vk1 = poly_pow(V, mult - 1);
        Poly<K> Urest = poly_exact_div(A.den(), Vk1 * V);
        auto [B, C] = poly_diophantine(Urest * V.derivative(), V, A.num());
        K inv = K(static_cast<long>(mult - 1)).inverse();
        U = U + RatFun<K>(-(B * inv), Vk1);
        A = RatFun<K>(C + Urest * B.derivative() * inv, Urest * Vk1);
    }
    if (U.derivative() + A != f)
        throw error(errc::internal, "Hermite identity U' + A = f failed");
    if (!A.is_zero() && poly_gcd(A.den(), A.den().derivative()).degree() != 0)
        throw error(errc::internal, "Hermite output denominator is not squarefree");
    return {U, A};
}

template std::pair<RatFun<Rat>, RatFun<Rat>> hermite_reduce(const RatFun<Rat>&);
template std::pair<RatFun<QuadExt>, RatFun<QuadExt>> hermite_reduce(const RatFun<QuadExt>&);

// --- factor splitting shared by the log part and partial fractions ----------

namespace {

struct SplitDeg2 {
    std::vector<QuadExt> roots;
    std::vector<std::pair<QuadExt, QuadExt>> pairs;  // re +- im*i, im > 0
    std::vector<Poly<QuadExt>> quads;  // kept only when extension is refused
};

// Splits a squarefree monic polynomial into roots over the working field
// (extending Q by at most one radical when allow_extension), conjugate
// complex pairs, and (when extension is refused) irreducible quadratics.
// Throws UnsupportedAlgebraicDegree when an irreducible factor of degree >= 3
// blocks the decomposition and keep_quads is false.
SplitDeg2 split_squarefree_deg2(const Poly<QuadExt>& p_in, long long& ctx,
                                bool allow_extension) {
    SplitDeg2 out;
    Poly<QuadExt> p = p_in.monic();

    auto push_quadratic = [&](const Poly<QuadExt>& q) {
        if (allow_extension) {
            QuadraticRoots qr = solve_quadratic(q, ctx);
            if (qr.complex)
                out.pairs.emplace_back(qr.re, qr.im);
            else {
                out.roots.push_back(qr.r1);
                out.roots.push_back(qr.r2);
            }
            return;
        }
        // no extension: split only if the discriminant is a square in the field
        QuadExt b = q[1] / q[2], c = q[0] / q[2];
        QuadExt disc = b * b - QuadExt(Rat(4)) * c;
        std::optional<QuadExt> rt;
        if (disc.sign() >= 0) {
            if (disc.is_rational()) {
                Rat r;
                if (rat_is_square(disc.rat_part(), &r))
                    rt = QuadExt(r);
                else if (ctx != 0 && rat_is_square(disc.rat_part() / Rat(ctx), &r))
                    rt = QuadExt(Rat(0), r, ctx);
            } else {
                rt = disc.sqrt_in_field();
            }
        }
        if (rt) {
            QuadExt half(Rat(1, 2));
            out.roots.push_back((-b + *rt) * half);
            out.roots.push_back((-b - *rt) * half);
        } else {
            out.quads.push_back(q.monic());
        }
    };

    if (p.degree() <= 0) return out;
    if (poly_is_rational(p)) {
        Poly<Rat> rq = demote_poly(p);
        for (const Rat& root : rational_roots(rq)) {
            out.roots.emplace_back(root);
            rq = poly_exact_div(rq, Poly<Rat>(std::vector<Rat>{-root, Rat(1)}));
        }
        if (rq.degree() >= 3) {
            for (const Poly<Rat>& quad : quadratic_rational_factors(rq)) {
                push_quadratic(lift_poly(quad));
                rq = poly_exact_div(rq, quad);
            }
        }
        if (rq.degree() == 2) {
            push_quadratic(lift_poly(rq.monic()));
            rq = Poly<Rat>(Rat(1));
        }
        if (rq.degree() >= 1)
            throw error(errc::unsupported_algebraic_degree,
                        "irreducible factor of degree >= 3 in the resultant");
        return out;
    }
    // genuinely irrational coefficients: handle degree <= 2 directly
    for (const auto& c : p.coeffs())
        if (!c.is_rational()) ctx = c.radicand();
    if (p.degree() == 1) {
        out.roots.push_back(-p[0] / p[1]);
        return out;
    }
    if (p.degree() == 2) {
        push_quadratic(p);
        return out;
    }
    throw error(errc::unsupported_algebraic_degree,
                "factor of degree >= 3 over the quadratic extension");
}

}  // namespace

// --- Rothstein-Trager logarithmic part --------------------------------------

LogPartResult log_part(const RatFun<QuadExt>& f) {
    LogPartResult out;
    if (f.is_zero()) return out;
    if (!f.is_proper())
        throw error(errc::domain_error, "log part expects a proper rational function");
    const Poly<QuadExt>& den = f.den();
    const Poly<QuadExt>& num = f.num();
    if (poly_gcd(den, den.derivative()).degree() != 0)
        throw error(errc::domain_error, "log part expects a squarefree denominator");

    long long ctx = 0;
    for (const auto& c : num.coeffs())
        if (!c.is_rational()) ctx = c.radicand();
    for (const auto& c : den.coeffs())
        if (!c.is_rational()) ctx = c.radicand();

    Poly<QuadExt> dden = den.derivative();
    Poly<QuadExt> rt = rt_resultant(num, den);
    if (rt.is_zero()) throw error(errc::internal, "vanishing Rothstein-Trager resultant");

    auto handle_root = [&](const QuadExt& c) {
        Poly<QuadExt> v = poly_gcd(num - dden * c, den);
        if (v.degree() > 0) out.logs.push_back({c, poly_primitive(v)});
    };
    auto handle_pair = [&](const QuadExt& a, const QuadExt& b) {
        using C = ComplexK<QuadExt>;
        Poly<C> cnum = complexify(num), cden = complexify(den);
        C c(a, b);
        Poly<C> v = poly_gcd(cnum - complexify(dden) * c, cden);
        auto [u, w] = split_re_im(v);
        if (w.is_zero()) {
            // the pair collapsed to a real factor: contributes (2a) log(u)
            if (!a.is_zero() && u.degree() > 0)
                out.logs.push_back({a + a, poly_primitive(u)});
            return;
        }
        out.pairs.push_back({a, b, u, w});
    };

    for (const auto& [fac, m] : squarefree_factor(rt)) {
        SplitDeg2 split = split_squarefree_deg2(fac, ctx, /*allow_extension=*/true);
        for (const QuadExt& c : split.roots) handle_root(c);
        for (const auto& [a, b] : split.pairs) handle_pair(a, b);
    }
    return out;
}

// --- arctangent rectification ------------------------------------------------

namespace {

// Emits terms whose derivative matches d(i*log((u+iv)/(u-iv))), scaled by b;
// the recursion keeps every argument polynomial so the sum stays continuous
// on the real line.
void log_to_atan(Poly<QuadExt> u, Poly<QuadExt> v, const QuadExt& b,
                 std::vector<AtanTerm>& out) {
    if (v.is_zero()) return;
    auto [q, r] = poly_divmod(u, v);
    if (r.is_zero()) {
        if (q.degree() >= 1) out.push_back({b + b, RatFun<QuadExt>(q)});
        return;
    }
    if (u.degree() < v.degree()) {
        log_to_atan(-v, u, b, out);
        return;
    }
    auto [g, d, c] = poly_extgcd(v, -u);  // d*v - c*u = g
    Poly<QuadExt> arg = poly_exact_div(u * d + v * c, g);
    if (arg.degree() >= 1) out.push_back({b + b, RatFun<QuadExt>(arg)});
    log_to_atan(d, c, b, out);
}

}  // namespace

Rectified rectify_atan(const std::vector<ConjugatePair>& pairs) {
    Rectified out;
    for (const auto& p : pairs) {
        if (!p.re.is_zero()) {
            Poly<QuadExt> norm = p.u * p.u + p.v * p.v;
            if (norm.degree() > 0) out.logs.push_back({p.re, poly_primitive(norm)});
        }
        log_to_atan(p.u, p.v, p.im, out.atans);
    }
    return out;
}

// --- full pipeline -----------------------------------------------------------

AntiDeriv integrate_rational(const RatFun<QuadExt>& f) {
    AntiDeriv F;
    if (f.is_zero()) return F;
    auto [quot, rem] = poly_divmod(f.num(), f.den());
    F.poly_part = quot.integral();
    RatFun<QuadExt> proper(rem, f.den());
    if (!proper.is_zero()) {
        auto [U, A] = hermite_reduce(proper);
        F.rat_part = U;
        if (!A.is_zero()) {
            LogPartResult lp = log_part(A);
            F.logs = std::move(lp.logs);
            Rectified rec = rectify_atan(lp.pairs);
            F.atans = std::move(rec.atans);
            F.logs.insert(F.logs.end(), rec.logs.begin(), rec.logs.end());
        }
    }
    F.canonicalize();
    return F;
}

AntiDeriv integrate_rational(const RatFun<Rat>& f) { return integrate_rational(lift_ratfun(f)); }

bool verify_antiderivative(const AntiDeriv& F, const RatFun<QuadExt>& f) {
    return F.derivative() == f;
}

// --- partial fractions -------------------------------------------------------

std::optional<std::vector<PartialFraction>> partial_fractions(const RatFun<QuadExt>& f,
                                                              long long field_radicand) {
    if (f.is_zero()) return std::vector<PartialFraction>{};
    if (!f.is_proper())
        throw error(errc::domain_error, "partial fractions expect a proper rational function");
    const Poly<QuadExt>& den = f.den();
    if (poly_gcd(den, den.derivative()).degree() != 0)
        throw error(errc::domain_error, "partial fractions expect a squarefree denominator");

    long long ctx = field_radicand;
    for (const auto& c : den.coeffs())
        if (!c.is_rational()) ctx = c.radicand();
    for (const auto& c : f.num().coeffs())
        if (!c.is_rational()) ctx = c.radicand();

    SplitDeg2 split;
    try {
        split = split_squarefree_deg2(den, ctx, /*allow_extension=*/false);
    } catch (const error& e) {
        if (e.code() == errc::unsupported_algebraic_degree) return std::nullopt;
        throw;
    }

    std::vector<PartialFraction> out;
    Poly<QuadExt> dden = den.derivative();
    for (const QuadExt& root : split.roots) {
        QuadExt coeff = f.num().eval(root) / dden.eval(root);
        Poly<QuadExt> lin(std::vector<QuadExt>{-root, QuadExt(Rat(1))});
        out.push_back({Poly<QuadExt>(coeff), lin});
    }
    for (const Poly<QuadExt>& q : split.quads) {
        Poly<QuadExt> rest = poly_exact_div(den, q);
        auto [g, s, t] = poly_extgcd(rest, q);  // s*rest + t*q = 1
        Poly<QuadExt> numq = poly_rem(f.num() * s, q);
        out.push_back({numq, q});
    }
    return out;
}

}  // namespace ratint
