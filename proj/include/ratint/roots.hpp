#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "ratint/poly.hpp"

namespace ratint {

// Trial-division factorization. Inputs here are coefficients of desk-scale
// polynomials; refuse (rather than silently mis-factor) if a large composite
// cofactor survives.
inline std::vector<std::pair<mpz_class, int>> factor_integer(mpz_class n) {
    if (n < 0) n = -n;
    if (n == 0) throw error(errc::domain_error, "factor of zero");
    std::vector<std::pair<mpz_class, int>> fs;
    auto take = [&](const mpz_class& p) {
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e) fs.emplace_back(p, e);
    };
    take(mpz_class(2));
    for (mpz_class p = 3; p * p <= n && p < 2000000; p += 2) take(p);
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
            fs.emplace_back(n, 1);
        } else if (mpz_perfect_square_p(n.get_mpz_t())) {
            mpz_class r;
            mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
            if (mpz_probab_prime_p(r.get_mpz_t(), 30))
                fs.emplace_back(r, 2);
            else
                throw error(errc::unsupported_algebraic_degree,
                            "coefficient too large to factor: " + n.get_str());
        } else {
            throw error(errc::unsupported_algebraic_degree,
                        "coefficient too large to factor: " + n.get_str());
        }
    }
    return fs;
}

inline std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    std::vector<mpz_class> ds{1};
    for (const auto& [p, e] : factor_integer(n)) {
        size_t sz = ds.size();
        mpz_class pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// Scales a rational polynomial to primitive integer coefficients.
inline Poly<Rat> to_primitive_integer(const Poly<Rat>& p) {
    if (p.is_zero()) return p;
    Poly<Rat> q = poly_primitive(p);
    if (q.lc().sign() < 0) q = -q;
    return q;
}

// All (distinct) rational roots of p. p need not be squarefree.
inline std::vector<Rat> rational_roots(const Poly<Rat>& p_in) {
    std::vector<Rat> roots;
    if (p_in.degree() < 1) return roots;
    Poly<Rat> p = to_primitive_integer(p_in);
    // pull out x^k
    int shift = 0;
    while (p[0].is_zero()) {
        p = poly_exact_div(p, Poly<Rat>::x());
        ++shift;
    }
    if (shift) roots.emplace_back(0);
    if (p.degree() < 1) return roots;
    mpz_class c0 = p[0].num(), cn = p.lc().num();
    for (const auto& u : positive_divisors(c0)) {
        for (const auto& v : positive_divisors(cn)) {
            Rat cand(u, v);
            for (int s = 0; s < 2; ++s) {
                if (p.eval(cand).is_zero() &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
                cand = -cand;
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// Monic quadratic factors of p over Q, found by bounded divisor enumeration
// on the monic transform (Kronecker's method capped at degree 2).
// Precondition: p squarefree with no rational roots, deg >= 3.
// Returns all monic quadratic factors over Q; empty if none exist.
inline std::vector<Poly<Rat>> quadratic_rational_factors(const Poly<Rat>& p_in) {
    std::vector<Poly<Rat>> out;
    Poly<Rat> p = to_primitive_integer(p_in);
    mpz_class a = p.lc().num();
    int n = p.degree();
    auto zpow = [](mpz_class b, int e) {
        mpz_class acc = 1;
        for (int i = 0; i < e; ++i) acc *= b;
        return acc;
    };
    // monic transform q(y) = a^(n-1) p(y/a)
    std::vector<Rat> qc(n + 1, Rat(0));
    for (int i = 0; i <= n; ++i)
        qc[i] = p[i] * Rat(zpow(a, n - 1 - i), mpz_class(1));
    Poly<Rat> q{std::move(qc)};
    mpz_class q0 = q[0].num(), q1 = q.eval(Rat(1)).num(), qm1 = q.eval(Rat(-1)).num();
    if (q0 == 0 || q1 == 0 || qm1 == 0)
        throw error(errc::internal, "rational roots must be removed first");

    std::set<std::pair<mpz_class, mpz_class>> seen;
    Poly<Rat> rest = q;
    auto d0 = positive_divisors(q0);
    auto d1 = positive_divisors(q1);
    for (const auto& vd : d0) {
        for (int sv = 0; sv < 2; ++sv) {
            mpz_class v = sv ? mpz_class(-vd) : vd;
            for (const auto& ud : d1) {
                for (int su = 0; su < 2; ++su) {
                    // 1 + u + v must divide q(1)
                    mpz_class u = (su ? mpz_class(-ud) : ud) - 1 - v;
                    if (!seen.insert({u, v}).second) continue;
                    mpz_class w = 1 - u + v;  // must divide q(-1)
                    if (w == 0 || qm1 % w != 0) continue;
                    Poly<Rat> cand{std::vector<Rat>{Rat(v), Rat(u), Rat(1)}};
                    if (rest.degree() >= 2 && poly_divides(cand, rest)) {
                        // recover factor of p: y = a*x
                        Poly<Rat> f{std::vector<Rat>{Rat(v) / Rat(a * a), Rat(u) / Rat(a), Rat(1)}};
                        out.push_back(f);
                        rest = poly_exact_div(rest, cand);
                        if (rest.degree() < 2) return out;
                    }
                }
            }
        }
    }
    return out;
}

// --- square roots with controlled field extension ---------------------------

// Square root of a nonnegative value, allowed to extend Q by one radical.
// ctx_d tracks the radicand in play (0 = none yet); a second distinct
// radicand is refused.
inline QuadExt sqrt_with_extension(const QuadExt& v, long long& ctx_d) {
    if (v.sign() < 0) throw error(errc::domain_error, "sqrt of negative value");
    if (v.is_zero()) return QuadExt();
    if (v.is_rational()) {
        Rat r;
        if (rat_is_square(v.rat_part(), &r)) return QuadExt(r);
        if (ctx_d != 0) {
            Rat q = v.rat_part() / Rat(ctx_d);
            if (rat_is_square(q, &r)) return QuadExt(Rat(0), r, ctx_d);
            throw error(errc::mixed_radicand,
                        "square root requires a second radicand beside sqrt(" +
                            std::to_string(ctx_d) + ")");
        }
        QuadExt s = QuadExt::sqrt_of_rational(v.rat_part());
        ctx_d = s.radicand();
        return s;
    }
    if (ctx_d != 0 && ctx_d != v.radicand())
        throw error(errc::mixed_radicand, "mixed radicands in square root");
    auto s = v.sqrt_in_field();
    if (!s)
        throw error(errc::unsupported_algebraic_degree,
                    "square root outside the quadratic extension");
    ctx_d = (ctx_d == 0) ? v.radicand() : ctx_d;
    return *s;
}

// Roots of a monic quadratic over Q(sqrt(d)): either two real roots in the
// (possibly extended) field, or a conjugate complex pair re +- im*i, im > 0.
struct QuadraticRoots {
    bool complex = false;
    QuadExt r1, r2;   // real case
    QuadExt re, im;   // complex case
};

inline QuadraticRoots solve_quadratic(const Poly<QuadExt>& q, long long& ctx_d) {
    if (q.degree() != 2) throw error(errc::internal, "solve_quadratic wants degree 2");
    QuadExt b = q[1] / q[2], c = q[0] / q[2];
    QuadExt disc = b * b - QuadExt(Rat(4)) * c;
    int s = disc.sign();
    QuadraticRoots out;
    QuadExt half = QuadExt(Rat(1, 2));
    if (s == 0) {
        out.r1 = out.r2 = -b * half;
        return out;
    }
    if (s > 0) {
        QuadExt rt = sqrt_with_extension(disc, ctx_d);
        out.r1 = (-b + rt) * half;
        out.r2 = (-b - rt) * half;
        return out;
    }
    QuadExt rt = sqrt_with_extension(-disc, ctx_d);
    out.complex = true;
    out.re = -b * half;
    out.im = rt * half;  // positive by construction
    return out;
}

// --- Sturm sequences and real root isolation --------------------------------

template <class K>
class SturmChain {
  public:
    explicit SturmChain(const Poly<K>& p) {
        Poly<K> f = p.monic();
        if (f.degree() >= 1) {
            Poly<K> g = poly_gcd(f, f.derivative());
            if (g.degree() > 0) f = poly_exact_div(f, g).monic();
        }
        sf_ = f;
        chain_.push_back(f);
        if (f.degree() >= 1) {
            chain_.push_back(f.derivative());
            while (chain_.back().degree() > 0) {
                Poly<K> r = poly_rem(chain_[chain_.size() - 2], chain_.back());
                if (r.is_zero()) break;
                if constexpr (std::is_same_v<K, Rat>)
                    r = poly_primitive(r);  // scale control; signs preserved
                chain_.push_back(-r);
            }
        }
    }

    const Poly<K>& squarefree() const { return sf_; }

    int sign_changes(const Rat& x) const {
        int changes = 0, prev = 0;
        for (const auto& q : chain_) {
            int s = q.eval(K(x)).sign();
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++changes;
            prev = s;
        }
        return changes;
    }

    // Number of distinct real roots in (lo, hi].
    int count_roots(const Rat& lo, const Rat& hi) const {
        if (!(lo < hi)) return 0;
        return sign_changes(lo) - sign_changes(hi);
    }

  private:
    Poly<K> sf_;
    std::vector<Poly<K>> chain_;
};

// Isolating interval for one real root. exact => lo == hi is the root.
struct RootInterval {
    Rat lo, hi;
    bool exact = false;

    Rat midpoint() const { return (lo + hi) / Rat(2); }
    Rat width() const { return hi - lo; }
};

namespace detail {

template <class K>
void isolate_rec(const SturmChain<K>& st, const Rat& lo, const Rat& hi,
                 std::vector<RootInterval>& out) {
    int n = st.count_roots(lo, hi);
    if (n == 0) return;
    if (st.squarefree().eval(K(hi)).is_zero()) {
        out.push_back({hi, hi, true});
        if (n == 1) return;
        // remaining roots lie strictly inside (lo, hi)
        n -= 1;
    }
    if (n == 1 && !st.squarefree().eval(K(hi)).is_zero()) {
        // single root, endpoints are non-roots (lo by construction)
        out.push_back({lo, hi, false});
        return;
    }
    Rat mid = (lo + hi) / Rat(2);
    if (st.squarefree().eval(K(mid)).is_zero()) out.push_back({mid, mid, true});
    isolate_rec(st, lo, mid, out);
    isolate_rec(st, mid, hi, out);
}

}  // namespace detail

// Disjoint isolating intervals, one per distinct real root of p in [lo, hi].
template <class K>
std::vector<RootInterval> isolate_real_roots(const Poly<K>& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) throw error(errc::domain_error, "root isolation of the zero polynomial");
    std::vector<RootInterval> out;
    if (p.degree() < 1 || !(lo < hi)) {
        if (p.degree() >= 1 && lo == hi && p.eval(K(lo)).is_zero())
            out.push_back({lo, lo, true});
        return out;
    }
    SturmChain<K> st(p);
    if (st.squarefree().eval(K(lo)).is_zero()) out.push_back({lo, lo, true});
    detail::isolate_rec(st, lo, hi, out);
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    // drop duplicates of exact roots discovered at shared endpoints
    out.erase(std::unique(out.begin(), out.end(),
                          [](const RootInterval& a, const RootInterval& b) {
                              return a.exact && b.exact && a.lo == b.lo;
                          }),
              out.end());
    return out;
}

// Shrinks an isolating interval below eps (bisection; exact arithmetic).
template <class K>
RootInterval refine_interval(const Poly<K>& p, RootInterval iv, const Rat& eps) {
    if (iv.exact) return iv;
    SturmChain<K> st(p);
    if (st.squarefree().eval(K(iv.hi)).is_zero()) return {iv.hi, iv.hi, true};
    while (iv.width() >= eps) {
        Rat mid = iv.midpoint();
        if (st.squarefree().eval(K(mid)).is_zero()) return {mid, mid, true};
        if (st.count_roots(iv.lo, mid) == 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
    return iv;
}

// Sign of q immediately beside (side < 0: left, side > 0: right of) the root
// of d isolated by iv. q is allowed to vanish at the root itself.
template <class K>
int sign_beside_root(const Poly<K>& q, const Poly<K>& d, RootInterval iv, int side) {
    if (q.is_zero()) return 0;
    if (q.degree() < 1) return q.lc().sign();
    if (iv.exact) {
        K at = q.eval(K(iv.lo));
        if (!at.is_zero()) return at.sign();
        // q vanishes exactly at the root: step off it.
        SturmChain<K> stq(q);
        Rat w(1);
        while (true) {
            Rat pt = side < 0 ? iv.lo - w : iv.lo + w;
            int s = q.eval(K(pt)).sign();
            // no other q-root strictly between pt and the root
            bool clean = side < 0 ? stq.count_roots(pt, iv.lo) == 1  // the root at iv.lo only
                                  : stq.count_roots(iv.lo, pt) == 0;
            if (clean && s != 0) return s;
            w = w / Rat(2);
        }
    }
    SturmChain<K> std_(d), stq(q);
    // Does q share the isolated root? Exactly when gcd(q, d) has a root here.
    Poly<K> g = poly_gcd(q, d);
    int target = 0;
    if (g.degree() > 0) {
        SturmChain<K> stg(g);
        target = stg.count_roots(iv.lo, iv.hi) > 0 ? 1 : 0;
    }
    while (true) {
        if (stq.count_roots(iv.lo, iv.hi) == target && !q.eval(K(iv.lo)).is_zero() &&
            !q.eval(K(iv.hi)).is_zero())
            return side < 0 ? q.eval(K(iv.lo)).sign() : q.eval(K(iv.hi)).sign();
        Rat mid = iv.midpoint();
        if (std_.squarefree().eval(K(mid)).is_zero())
            return sign_beside_root(q, d, RootInterval{mid, mid, true}, side);
        if (std_.count_roots(iv.lo, mid) == 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
}

}  // namespace ratint
