#pragma once

#include <tuple>
#include <utility>
#include <vector>

#include "ratint/quadext.hpp"
#include "ratint/rational.hpp"

namespace ratint {

// Integer content of a rational coefficient set: gcd(numerators)/lcm(denominators).
inline Rat scalar_content_accumulate(const Rat& acc, const Rat& c) {
    if (c.is_zero()) return acc;
    if (acc.is_zero()) return c.abs();
    mpz_class gn, ld;
    mpz_gcd(gn.get_mpz_t(), acc.num().get_mpz_t(), c.num().get_mpz_t());
    mpz_lcm(ld.get_mpz_t(), acc.den().get_mpz_t(), c.den().get_mpz_t());
    return Rat(gn, ld);
}

inline Rat scalar_content(const Rat& c) { return c.abs(); }
inline Rat scalar_content(const QuadExt& c) {
    return scalar_content_accumulate(scalar_content(c.rat_part()), c.rad_coeff());
}
template <class K>
Rat scalar_content(const ComplexK<K>& c) {
    return scalar_content_accumulate(scalar_content(c.re()), c.im());
}

// Dense univariate polynomial over an exact scalar field K, lowest degree
// first, no trailing zeros. The zero polynomial has degree -1.
template <class K>
class Poly {
  public:
    Poly() = default;
    Poly(const K& c) { if (!c.is_zero()) cs_.push_back(c); }
    Poly(long c) : Poly(K(c)) {}
    explicit Poly(std::vector<K> cs) : cs_(std::move(cs)) { trim(); }

    static Poly x() { return monomial(K(1), 1); }
    static Poly monomial(const K& c, int deg) {
        if (c.is_zero()) return Poly();
        std::vector<K> v(deg + 1, K(0));
        v[deg] = c;
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(cs_.size()) - 1; }
    bool is_zero() const { return cs_.empty(); }
    bool is_constant() const { return cs_.size() <= 1; }
    const std::vector<K>& coeffs() const { return cs_; }

    const K& operator[](int i) const {
        static const K zero = K(0);
        if (i < 0 || i >= static_cast<int>(cs_.size())) return zero;
        return cs_[i];
    }

    K lc() const { return cs_.empty() ? K(0) : cs_.back(); }
    K constant() const { return cs_.empty() ? K(0) : cs_.front(); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.cs_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> v(std::max(a.cs_.size(), b.cs_.size()), K(0));
        for (size_t i = 0; i < a.cs_.size(); ++i) v[i] += a.cs_[i];
        for (size_t i = 0; i < b.cs_.size(); ++i) v[i] += b.cs_[i];
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> v(a.cs_.size() + b.cs_.size() - 1, K(0));
        for (size_t i = 0; i < a.cs_.size(); ++i)
            for (size_t j = 0; j < b.cs_.size(); ++j) v[i + j] += a.cs_[i] * b.cs_[j];
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& a, const K& s) {
        Poly r = a;
        for (auto& c : r.cs_) c = c * s;
        r.trim();
        return r;
    }
    friend Poly operator*(const K& s, const Poly& a) { return a * s; }
    friend Poly operator/(const Poly& a, const K& s) { return a * s.inverse(); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.cs_ == b.cs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const {
        if (cs_.size() <= 1) return Poly();
        std::vector<K> v(cs_.size() - 1, K(0));
        for (size_t i = 1; i < cs_.size(); ++i) v[i - 1] = cs_[i] * K(static_cast<long>(i));
        return Poly(std::move(v));
    }

    // Coefficient-wise antiderivative with zero constant term.
    Poly integral() const {
        if (is_zero()) return Poly();
        std::vector<K> v(cs_.size() + 1, K(0));
        for (size_t i = 0; i < cs_.size(); ++i)
            v[i + 1] = cs_[i] / K(static_cast<long>(i + 1));
        return Poly(std::move(v));
    }

    K eval(const K& x) const {
        K acc(0);
        for (auto it = cs_.rbegin(); it != cs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * lc().inverse();
    }

    template <class K2, class F>
    Poly<K2> map(F&& f) const {
        std::vector<K2> v;
        v.reserve(cs_.size());
        for (const auto& c : cs_) v.push_back(f(c));
        return Poly<K2>(std::move(v));
    }

  private:
    void trim() {
        while (!cs_.empty() && cs_.back().is_zero()) cs_.pop_back();
    }

    std::vector<K> cs_;
};

template <class K>
std::pair<Poly<K>, Poly<K>> poly_divmod(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero()) throw error(errc::division_by_zero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<K>(), a};
    std::vector<K> rem(a.coeffs());
    std::vector<K> quo(a.degree() - b.degree() + 1, K(0));
    K inv_lc = b.lc().inverse();
    for (int i = a.degree(); i >= b.degree(); --i) {
        if (rem[i].is_zero()) continue;
        K q = rem[i] * inv_lc;
        quo[i - b.degree()] = q;
        for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= q * b[j];
    }
    return {Poly<K>(std::move(quo)), Poly<K>(std::move(rem))};
}

template <class K>
Poly<K> poly_rem(const Poly<K>& a, const Poly<K>& b) { return poly_divmod(a, b).second; }

// Exact quotient; throws if the division leaves a remainder.
template <class K>
Poly<K> poly_exact_div(const Poly<K>& a, const Poly<K>& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw error(errc::internal, "polynomial division expected to be exact");
    return q;
}

template <class K>
bool poly_divides(const Poly<K>& d, const Poly<K>& a) {
    if (d.is_zero()) return a.is_zero();
    return poly_rem(a, d).is_zero();
}

// Integer content of a Rat/QuadExt polynomial: dividing by it leaves
// coprime integer coordinates.
template <class K>
Rat poly_content(const Poly<K>& p) {
    Rat c(0);
    for (const auto& coef : p.coeffs())
        c = scalar_content_accumulate(c, scalar_content(coef));
    return c.is_zero() ? Rat(1) : c;
}

template <class K>
Poly<K> poly_primitive(const Poly<K>& p) {
    if (p.is_zero()) return p;
    return p * K(poly_content(p).inverse());
}

namespace detail {

// Primitive-part Euclidean remainder sequence over Q: clears denominators and
// strips integer content each step, which keeps the growth tame.
inline Poly<Rat> gcd_primitive(Poly<Rat> a, Poly<Rat> b) {
    a = poly_primitive(a);
    b = poly_primitive(b);
    while (!b.is_zero()) {
        Poly<Rat> r = poly_rem(a, b);
        a = std::move(b);
        b = poly_primitive(r);
    }
    return a.monic();
}

// Monic Euclidean remainder sequence; used for extension-field coefficients.
template <class K>
Poly<K> gcd_monic(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = poly_rem(a, b.monic());
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace detail

template <class K>
Poly<K> poly_gcd(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero() && b.is_zero())
        throw error(errc::domain_error, "gcd(0, 0) undefined");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if constexpr (std::is_same_v<K, Rat>)
        return detail::gcd_primitive(a, b);
    else
        return detail::gcd_monic(a, b);
}

// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> poly_extgcd(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> r0 = a, r1 = b;
    Poly<K> s0(K(1)), s1, t0, t1(K(1));
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        r0 = std::move(r1); r1 = std::move(r);
        Poly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) throw error(errc::domain_error, "extgcd(0, 0) undefined");
    K inv = r0.lc().inverse();
    return {r0 * inv, s0 * inv, t0 * inv};
}

// Solves s*a + t*b = c with deg(s) < deg(b) - deg(g); requires gcd(a,b) | c.
template <class K>
std::pair<Poly<K>, Poly<K>> poly_diophantine(const Poly<K>& a, const Poly<K>& b,
                                             const Poly<K>& c) {
    auto [g, s, t] = poly_extgcd(a, b);
    Poly<K> q = poly_exact_div(c, g);
    Poly<K> s2 = s * q, t2 = t * q;
    auto [adj, s3] = poly_divmod(s2, b);
    return {s3, t2 + adj * a};
}

// Yun's squarefree decomposition: p = unit * prod_i f_i^i with the f_i monic,
// squarefree and pairwise coprime. Returns pairs (f_i, i) for nonconstant f_i.
template <class K>
std::vector<std::pair<Poly<K>, int>> squarefree_factor(const Poly<K>& p) {
    if (p.is_zero()) throw error(errc::domain_error, "squarefree decomposition of zero");
    std::vector<std::pair<Poly<K>, int>> out;
    Poly<K> f = p.monic();
    if (f.degree() < 1) return out;
    Poly<K> fp = f.derivative();
    Poly<K> g = poly_gcd(f, fp);
    if (g.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    Poly<K> c = poly_exact_div(f, g);
    Poly<K> d = poly_exact_div(fp, g) - c.derivative();
    int i = 1;
    while (c.degree() > 0) {
        Poly<K> a = poly_gcd(c, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        c = poly_exact_div(c, a);
        d = poly_exact_div(d, a) - c.derivative();
        ++i;
    }
    return out;
}

// Squarefree part: product of the distinct irreducible factors.
template <class K>
Poly<K> squarefree_part(const Poly<K>& p) {
    Poly<K> out(K(1));
    for (const auto& [f, m] : squarefree_factor(p)) out = out * f;
    return out;
}

// Taylor shift: result(y) = p(y + c).
template <class K>
Poly<K> poly_shift(const Poly<K>& p, const K& c) {
    Poly<K> out;
    Poly<K> base{std::vector<K>{c, K(1)}};  // y + c
    for (int i = p.degree(); i >= 0; --i) out = out * base + Poly<K>(p[i]);
    return out;
}

template <class K>
Poly<K> poly_pow(const Poly<K>& p, int e) {
    Poly<K> acc(K(1)), b = p;
    while (e > 0) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

// Lifts between coefficient domains.
inline Poly<QuadExt> lift_poly(const Poly<Rat>& p) {
    std::vector<QuadExt> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.emplace_back(c);
    return Poly<QuadExt>(std::move(v));
}

template <class K>
Poly<ComplexK<K>> complexify(const Poly<K>& p) {
    std::vector<ComplexK<K>> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.emplace_back(c);
    return Poly<ComplexK<K>>(std::move(v));
}

// Splits a complex-coefficient polynomial into real and imaginary parts.
template <class K>
std::pair<Poly<K>, Poly<K>> split_re_im(const Poly<ComplexK<K>>& p) {
    std::vector<K> re, im;
    re.reserve(p.coeffs().size());
    im.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        re.push_back(c.re());
        im.push_back(c.im());
    }
    return {Poly<K>(std::move(re)), Poly<K>(std::move(im))};
}

// True when every coefficient is rational (no radical part).
inline bool poly_is_rational(const Poly<QuadExt>& p) {
    for (const auto& c : p.coeffs())
        if (!c.is_rational()) return false;
    return true;
}

inline Poly<Rat> demote_poly(const Poly<QuadExt>& p) {
    std::vector<Rat> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        if (!c.is_rational())
            throw error(errc::internal, "expected rational coefficients");
        v.push_back(c.rat_part());
    }
    return Poly<Rat>(std::move(v));
}

}  // namespace ratint
