#pragma once

#include <random>
#include <vector>

#include "ratint/poly.hpp"
#include "ratint/ratfun.hpp"

namespace testutil {

using namespace ratint;

inline Poly<Rat> P(std::vector<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return Poly<Rat>(std::move(v));
}

inline Poly<Rat> PQ(std::vector<Rat> cs) { return Poly<Rat>(std::move(cs)); }

inline Rat rand_rat(std::mt19937& rng, long max_num = 9, long max_den = 4) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rat(num(rng), den(rng));
}

inline Poly<Rat> rand_poly(std::mt19937& rng, int max_deg, long max_num = 9,
                           bool nonzero = true) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    for (;;) {
        int d = dd(rng);
        std::vector<Rat> cs;
        for (int i = 0; i <= d; ++i) cs.push_back(rand_rat(rng, max_num));
        Poly<Rat> p(std::move(cs));
        if (!nonzero || !p.is_zero()) return p;
    }
}

// Sylvester-matrix resultant by exact Gaussian elimination: the independent
// oracle for the PRS-based implementation.
inline Rat sylvester_resultant(const Poly<Rat>& a, const Poly<Rat>& b) {
    int m = a.degree(), n = b.degree();
    if (m < 0 || n < 0) throw std::runtime_error("zero poly");
    int N = m + n;
    if (N == 0) return Rat(1);
    std::vector<std::vector<Rat>> M(N, std::vector<Rat>(N, Rat(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) M[r][r + i] = a[m - i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) M[n + r][r + i] = b[n - i];
    Rat det(1);
    for (int c = 0; c < N; ++c) {
        int piv = -1;
        for (int r = c; r < N; ++r)
            if (!M[r][c].is_zero()) { piv = r; break; }
        if (piv < 0) return Rat(0);
        if (piv != c) {
            std::swap(M[piv], M[c]);
            det = -det;
        }
        det *= M[c][c];
        Rat inv = M[c][c].inverse();
        for (int r = c + 1; r < N; ++r) {
            if (M[r][c].is_zero()) continue;
            Rat f = M[r][c] * inv;
            for (int k = c; k < N; ++k) M[r][k] -= f * M[c][k];
        }
    }
    return det;
}

// Plain monic Euclidean gcd, kept deliberately naive: the hand-run oracle for
// the library's primitive-PRS gcd.
inline Poly<Rat> naive_gcd(Poly<Rat> a, Poly<Rat> b) {
    while (!b.is_zero()) {
        Poly<Rat> r = poly_rem(a, b);
        a = b;
        b = r;
    }
    return a.monic();
}

}  // namespace testutil
