#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ratint/poly.hpp"
#include "ratint/ratfun.hpp"
#include "ratint/resultant.hpp"
#include "test_util.hpp"

using namespace ratint;
using namespace testutil;

TEST_CASE("rational arithmetic basics") {
    Rat a(1, 2), b(1, 3);
    CHECK(a + b == Rat(5, 6));
    CHECK(a * b == Rat(1, 6));
    CHECK((a / b) == Rat(3, 2));
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-3, 6).str() == "-1/2");
    CHECK_THROWS_AS(a / Rat(0), error);
    Rat r;
    CHECK(rat_is_square(Rat(9, 4), &r));
    CHECK(r == Rat(3, 2));
    CHECK_FALSE(rat_is_square(Rat(2), nullptr));
}

TEST_CASE("quadratic extension arithmetic") {
    QuadExt s2(Rat(0), Rat(1), 2);  // sqrt(2)
    CHECK((s2 * s2) == QuadExt(Rat(2)));
    QuadExt x(Rat(1), Rat(1), 2);   // 1 + sqrt(2)
    QuadExt y(Rat(1), Rat(-1), 2);  // 1 - sqrt(2)
    CHECK(x * y == QuadExt(Rat(-1)));
    CHECK((x / x).is_one());
    CHECK(x.sign() == 1);
    CHECK(y.sign() == -1);
    CHECK(QuadExt(Rat(3), Rat(-2), 2).sign() == 1);   // 3 - 2*sqrt(2) > 0
    CHECK(QuadExt(Rat(-3), Rat(2), 2).sign() == -1);  // symmetric
    // rationals mix with any radicand
    CHECK(QuadExt(Rat(1)) + s2 == QuadExt(Rat(1), Rat(1), 2));
    QuadExt s3(Rat(0), Rat(1), 3);
    CHECK_THROWS_AS(s2 + s3, error);

    CHECK(QuadExt::sqrt_of_rational(Rat(8)) == QuadExt(Rat(0), Rat(2), 2));
    CHECK(QuadExt::sqrt_of_rational(Rat(9)) == QuadExt(Rat(3)));
    CHECK(QuadExt::sqrt_of_rational(Rat(1, 2)) == QuadExt(Rat(0), Rat(1, 2), 2));

    // sqrt(3 + 2*sqrt(2)) = 1 + sqrt(2)
    auto r = QuadExt(Rat(3), Rat(2), 2).sqrt_in_field();
    REQUIRE(r.has_value());
    CHECK(*r == QuadExt(Rat(1), Rat(1), 2));
    CHECK_FALSE(QuadExt(Rat(0), Rat(1), 2).sqrt_in_field().has_value());
}

TEST_CASE("complexified field") {
    using C = ComplexK<QuadExt>;
    C i(QuadExt(Rat(0)), QuadExt(Rat(1)));
    CHECK(i * i == C(QuadExt(Rat(-1))));
    C z(QuadExt(Rat(3)), QuadExt(Rat(4)));
    CHECK((z / z).is_one());
    CHECK(z * z.conj() == C(QuadExt(Rat(25))));
}

TEST_CASE("poly_divmod worked examples") {
    auto [q1, r1] = poly_divmod(P({-1, 0, 1}), P({-1, 1}));  // (x^2-1)/(x-1)
    CHECK(q1 == P({1, 1}));
    CHECK(r1.is_zero());

    auto [q2, r2] = poly_divmod(P({1, 0, 1}), P({0, 1}));  // (x^2+1)/x
    CHECK(q2 == P({0, 1}));
    CHECK(r2 == P({1}));

    Poly<Rat> num = P({6, 0, -3, 0, 1});                    // x^4-3x^2+6
    Poly<Rat> den = P({4, 0, 5, 0, -5, 0, 1});              // x^6-5x^4+5x^2+4
    auto [q3, r3] = poly_divmod(num, den);
    CHECK(q3.is_zero());
    CHECK(r3 == num);

    CHECK_THROWS_AS(poly_divmod(P({1}), Poly<Rat>()), error);
}

TEST_CASE("poly_divmod reconstruction property") {
    std::mt19937 rng(12345);
    for (int t = 0; t < 300; ++t) {
        Poly<Rat> a = rand_poly(rng, 7);
        Poly<Rat> b = rand_poly(rng, 4);
        auto [q, r] = poly_divmod(a, b);
        CHECK(a == q * b + r);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("poly_gcd worked examples") {
    CHECK(poly_gcd(P({-1, 0, 1}), P({2, -3, 1})) == P({-1, 1}));  // shared root 1
    CHECK(poly_gcd(P({2, 4}), Poly<Rat>()) == P({1, 2}).monic());
    Poly<Rat> den = P({4, 0, 5, 0, -5, 0, 1});
    // Euclidean-oracle cross-check: the Bronstein denominator is squarefree.
    CHECK(naive_gcd(den, den.derivative()).degree() == 0);
    CHECK(poly_gcd(den, den.derivative()) == P({1}));
}

TEST_CASE("poly_gcd divides both and leaves coprime parts") {
    std::mt19937 rng(777);
    for (int t = 0; t < 200; ++t) {
        Poly<Rat> a = rand_poly(rng, 5), b = rand_poly(rng, 5);
        Poly<Rat> common = rand_poly(rng, 2);
        a = a * common;
        b = b * common;
        Poly<Rat> g = poly_gcd(a, b);
        CHECK(poly_divides(g, a));
        CHECK(poly_divides(g, b));
        CHECK(g == naive_gcd(a, b));
        Poly<Rat> g2 = poly_gcd(poly_exact_div(a, g), poly_exact_div(b, g));
        CHECK(g2.degree() == 0);
    }
}

TEST_CASE("squarefree factorization") {
    auto sf1 = squarefree_factor(P({0, 0, 1}));  // x^2
    REQUIRE(sf1.size() == 1);
    CHECK(sf1[0].first == P({0, 1}));
    CHECK(sf1[0].second == 2);

    // 16y^4 + 1: gcd with derivative is 1 (hand Euclid), so one factor at mult 1
    Poly<Rat> g = P({1, 0, 0, 0, 16});
    CHECK(naive_gcd(g, g.derivative()).degree() == 0);
    auto sf2 = squarefree_factor(g);
    REQUIRE(sf2.size() == 1);
    CHECK(sf2[0].first == PQ({Rat(1, 16), Rat(0), Rat(0), Rat(0), Rat(1)}));
    CHECK(sf2[0].second == 1);

    // factors come out ordered by multiplicity
    auto sf3 = squarefree_factor(P({-1, 1}) * P({-1, 1}) * P({2, 1}));
    REQUIRE(sf3.size() == 2);
    CHECK(sf3[0].first == P({2, 1}));
    CHECK(sf3[0].second == 1);
    CHECK(sf3[1].first == P({-1, 1}));
    CHECK(sf3[1].second == 2);
}

TEST_CASE("squarefree reassembly and coprimality properties") {
    std::mt19937 rng(4242);
    for (int t = 0; t < 120; ++t) {
        Poly<Rat> p(P({1}));
        std::uniform_int_distribution<int> mult(1, 3);
        for (int i = 0; i < 3; ++i) p = p * poly_pow(rand_poly(rng, 2, 4), mult(rng));
        if (p.degree() < 1) continue;
        auto sf = squarefree_factor(p);
        Poly<Rat> prod(P({1}));
        for (auto& [f, m] : sf) {
            prod = prod * poly_pow(f, m);
            CHECK(poly_gcd(f, f.derivative()).degree() == 0);
        }
        CHECK(prod == p.monic());
    }
}

TEST_CASE("poly_shift") {
    // (x-1)^4 + 1/16 expressed in x, shifted by c=1, becomes y^4 + 1/16
    Poly<Rat> xm1 = P({-1, 1});
    Poly<Rat> p = poly_pow(xm1, 4) + Poly<Rat>(Rat(1, 16));
    CHECK(poly_shift(p, Rat(1)) == PQ({Rat(1, 16), Rat(0), Rat(0), Rat(0), Rat(1)}));
    CHECK(poly_shift(p, Rat(0)) == p);
    CHECK(poly_shift(P({0, 0, 1}), Rat(-1)) == P({1, -2, 1}));

    std::mt19937 rng(99);
    for (int t = 0; t < 200; ++t) {
        Poly<Rat> q = rand_poly(rng, 6);
        Rat c = rand_rat(rng);
        CHECK(poly_shift(poly_shift(q, c), -c) == q);
    }
}

TEST_CASE("resultant worked examples") {
    CHECK(resultant(P({1, 0, 1}), P({-2, 1})) == Rat(5));
    // res(x-a, x-b) = a-b at fixed rationals
    Rat a(3, 2), b(-1, 3);
    CHECK(resultant(PQ({-a, Rat(1)}), PQ({-b, Rat(1)})) == a - b);
    CHECK(sylvester_resultant(PQ({-a, Rat(1)}), PQ({-b, Rat(1)})) == a - b);
    // res(x^2-2, x^2-3) = 1 (Sylvester determinant oracle agrees)
    CHECK(resultant(P({-2, 0, 1}), P({-3, 0, 1})) == Rat(1));
    CHECK(sylvester_resultant(P({-2, 0, 1}), P({-3, 0, 1})) == Rat(1));
}

TEST_CASE("resultant agrees with Sylvester oracle on random inputs") {
    std::mt19937 rng(31415);
    for (int t = 0; t < 400; ++t) {
        Poly<Rat> a = rand_poly(rng, 5);
        Poly<Rat> b = rand_poly(rng, 5);
        if (a.degree() < 0 || b.degree() < 0) continue;
        CHECK(resultant(a, b) == sylvester_resultant(a, b));
    }
}

TEST_CASE("resultant vanishes exactly on common factors") {
    std::mt19937 rng(2718);
    for (int t = 0; t < 200; ++t) {
        Poly<Rat> a = rand_poly(rng, 4), b = rand_poly(rng, 4);
        bool share = t % 2 == 0;
        if (share) {
            Poly<Rat> c = rand_poly(rng, 1);
            if (c.degree() < 1) c = P({1, 1});
            a = a * c;
            b = b * c;
        }
        bool gcd_nonconst = poly_gcd(a, b).degree() > 0;
        CHECK((resultant(a, b) == Rat(0)) == gcd_nonconst);
    }
}

TEST_CASE("subresultant PRS is exposed") {
    auto rr = subresultant_prs(P({4, 0, 5, 0, -5, 0, 1}), P({6, 0, -3, 0, 1}));
    CHECK(rr.prs.size() >= 3);
    CHECK(rr.prs[0].degree() == 6);
    CHECK(rr.prs[1].degree() == 4);
}

TEST_CASE("rat_normalize") {
    RatFun<Rat> f = rat_normalize(P({-1, 0, 1}), P({-1, 1}));
    CHECK(f.num() == P({1, 1}));
    CHECK(f.den() == P({1}));

    RatFun<Rat> g = rat_normalize(P({0, 2}), P({2}));
    CHECK(g.num() == P({0, 1}));
    CHECK(g.den() == P({1}));

    Poly<Rat> num = P({6, 0, -3, 0, 1});
    Poly<Rat> den = P({4, 0, 5, 0, -5, 0, 1});
    CHECK(naive_gcd(num, den).degree() == 0);  // already reduced, by Euclid oracle
    RatFun<Rat> h = rat_normalize(num, den);
    CHECK(h.num() == num);
    CHECK(h.den() == den);

    CHECK_THROWS_AS(rat_normalize(P({1}), Poly<Rat>()), error);
}

TEST_CASE("ratfun arithmetic and derivative") {
    RatFun<Rat> one_over_x2(P({1}), P({0, 0, 1}));
    RatFun<Rat> d = one_over_x2.derivative();
    CHECK(d == RatFun<Rat>(P({-2}), P({0, 0, 0, 1})));
    RatFun<Rat> s = one_over_x2 + d;
    CHECK(s == RatFun<Rat>(P({-2, 1}), P({0, 0, 0, 1})));
    CHECK(one_over_x2.eval(Rat(2)) == Rat(1, 4));
    CHECK_THROWS_AS(one_over_x2.eval(Rat(0)), error);
}

TEST_CASE("polynomials over the quadratic extension") {
    QuadExt s2(Rat(0), Rat(1), 2);
    // (x - sqrt2)(x + sqrt2) = x^2 - 2
    Poly<QuadExt> a{std::vector<QuadExt>{-s2, QuadExt(Rat(1))}};
    Poly<QuadExt> b{std::vector<QuadExt>{s2, QuadExt(Rat(1))}};
    Poly<QuadExt> prod = a * b;
    CHECK(prod == Poly<QuadExt>(std::vector<QuadExt>{QuadExt(Rat(-2)), QuadExt(Rat(0)),
                                                     QuadExt(Rat(1))}));
    CHECK(poly_gcd(prod, a) == a);
    // gcd across the extension: x^2-2 and x-sqrt2 share exactly that factor
    Poly<QuadExt> g = poly_gcd(prod, b);
    CHECK(g == b);
}
