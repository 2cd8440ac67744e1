#pragma once

#include <type_traits>
#include <vector>

#include "ratint/poly.hpp"

namespace ratint {

namespace detail {

template <class R>
struct is_poly_type : std::false_type {};
template <class K>
struct is_poly_type<Poly<K>> : std::true_type {};

template <class R>
R ring_exact_div(const R& a, const R& b) {
    if constexpr (is_poly_type<R>::value)
        return poly_exact_div(a, b);
    else
        return a / b;
}

template <class R>
R ring_pow(const R& a, int e) {
    R acc(1), b = a;
    while (e > 0) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

// Coefficient-wise exact division of a polynomial by a ring element.
template <class R>
Poly<R> poly_scalar_exact_div(const Poly<R>& p, const R& s) {
    std::vector<R> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(ring_exact_div(c, s));
    return Poly<R>(std::move(v));
}

}  // namespace detail

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
// Stays inside the coefficient ring (no division by lc(b)).
template <class R>
Poly<R> poly_prem(Poly<R> a, const Poly<R>& b) {
    if (b.is_zero()) throw error(errc::division_by_zero, "pseudo-division by zero");
    int target = a.degree() - b.degree() + 1;
    if (target <= 0) return a;
    R lb = b.lc();
    int steps = 0;
    while (!a.is_zero() && a.degree() >= b.degree()) {
        int dd = a.degree() - b.degree();
        Poly<R> t = Poly<R>::monomial(a.lc(), dd) * b;
        a = a * lb - t;
        ++steps;
    }
    if (steps < target) a = a * detail::ring_pow(lb, target - steps);
    return a;
}

template <class K>
struct ResultantResult {
    K resultant;
    // Subresultant polynomial remainder sequence, starting with the inputs.
    std::vector<Poly<K>> prs;
};

// Resultant via the subresultant PRS, valid over any integral domain with
// exact division. Sign convention matches the Sylvester determinant
// det S(a, b) with a's coefficients in the top rows.
template <class R>
ResultantResult<R> subresultant_prs(const Poly<R>& a_in, const Poly<R>& b_in) {
    if (a_in.is_zero() || b_in.is_zero())
        throw error(errc::domain_error, "resultant of zero polynomial");

    Poly<R> a = a_in, b = b_in;
    int sign = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() % 2) && (b.degree() % 2)) sign = -sign;
    }
    ResultantResult<R> out;
    out.prs.push_back(a);
    out.prs.push_back(b);

    if (a.degree() == 0) {  // both constants
        out.resultant = R(1);
        return out;
    }
    if (b.degree() == 0) {
        out.resultant = detail::ring_pow(b.lc(), a.degree());
        if (sign < 0) out.resultant = -out.resultant;
        return out;
    }

    R g(1), h(1);
    while (true) {
        int da = a.degree(), db = b.degree();
        int delta = da - db;
        if ((da % 2) && (db % 2)) sign = -sign;
        Poly<R> r = poly_prem(a, b);
        a = b;
        b = detail::poly_scalar_exact_div(r, g * detail::ring_pow(h, delta));
        g = a.lc();
        h = (delta == 0) ? h
                         : detail::ring_exact_div(detail::ring_pow(g, delta),
                                                  detail::ring_pow(h, delta - 1));
        if (b.is_zero()) {
            out.resultant = R(0);
            return out;
        }
        out.prs.push_back(b);
        if (b.degree() == 0) {
            R res = detail::ring_exact_div(detail::ring_pow(b.lc(), a.degree()),
                                           detail::ring_pow(h, a.degree() - 1));
            if (sign < 0) res = -res;
            out.resultant = res;
            return out;
        }
    }
}

template <class R>
R resultant(const Poly<R>& a, const Poly<R>& b) {
    return subresultant_prs(a, b).resultant;
}

// The Rothstein-Trager resultant: res_x(d, n - t*d') as a polynomial in t.
// Builds the bivariate operands with x-coefficients in K[t] and runs the
// subresultant PRS over that ring.
template <class K>
Poly<Poly<K>> rt_resultant(const Poly<K>& num, const Poly<K>& den) {
    Poly<K> dp = den.derivative();
    int n = std::max(num.degree(), dp.degree());
    std::vector<Poly<K>> bc;
    bc.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
        // coefficient of x^i: num_i - t*dp_i
        std::vector<K> lin{num[i], -dp[i]};
        bc.emplace_back(std::move(lin));
    }
    Poly<Poly<K>> b(std::move(bc));
    std::vector<Poly<K>> ac;
    ac.reserve(den.degree() + 1);
    for (int i = 0; i <= den.degree(); ++i) ac.emplace_back(Poly<K>(den[i]));
    Poly<Poly<K>> a(std::move(ac));
    // res_x produces an element of K[t].
    return resultant(a, b);
}

}  // namespace ratint
