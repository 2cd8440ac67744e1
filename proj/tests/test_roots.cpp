#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ratint/roots.hpp"
#include "test_util.hpp"

using namespace ratint;
using namespace testutil;

TEST_CASE("integer factorization and divisors") {
    auto fs = factor_integer(mpz_class(360));
    REQUIRE(fs.size() == 3);
    CHECK(fs[0] == std::pair<mpz_class, int>{2, 3});
    CHECK(fs[1] == std::pair<mpz_class, int>{3, 2});
    CHECK(fs[2] == std::pair<mpz_class, int>{5, 1});
    CHECK(positive_divisors(mpz_class(12)).size() == 6);
    CHECK(positive_divisors(mpz_class(1)).size() == 1);
}

TEST_CASE("rational roots") {
    // (2x-1)(x+3)(3x+2) = 6x^3 + ... with roots 1/2, -3, -2/3
    Poly<Rat> p = P({-1, 2}) * P({3, 1}) * P({2, 3});
    auto roots = rational_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == Rat(-3));
    CHECK(roots[1] == Rat(-2, 3));
    CHECK(roots[2] == Rat(1, 2));

    CHECK(rational_roots(P({1, 0, 1})).empty());  // x^2+1
    auto rz = rational_roots(P({0, 0, 1, 1}));    // x^2(x+1)
    REQUIRE(rz.size() == 2);
    CHECK(rz[0] == Rat(-1));
    CHECK(rz[1] == Rat(0));
}

TEST_CASE("quadratic factor extraction") {
    // t^4 + 64 = (t^2+4t+8)(t^2-4t+8)
    Poly<Rat> q = P({64, 0, 0, 0, 1});
    auto fs = quadratic_rational_factors(q);
    REQUIRE(fs.size() == 2);
    Poly<Rat> prod = fs[0] * fs[1];
    CHECK(prod == q.monic());

    // irreducible over Q: x^4 + x + 1 has no quadratic rational factor with
    // integer-divisor shape... (it factors only over extensions)
    CHECK(quadratic_rational_factors(P({1, 1, 0, 0, 1})).empty());

    // non-monic: (2x^2+1)(x^2+x+1)
    Poly<Rat> nm = P({1, 0, 2}) * P({1, 1, 1});
    auto fs2 = quadratic_rational_factors(nm);
    REQUIRE(fs2.size() == 2);
    CHECK(fs2[0] * fs2[1] * Poly<Rat>(nm.lc()) == nm);
}

TEST_CASE("quadratic solving with controlled extension") {
    long long ctx = 0;
    // t^2 - t - 1/4: roots (1 +- sqrt(2))/2
    Poly<QuadExt> q = lift_poly(PQ({Rat(-1, 4), Rat(-1), Rat(1)}));
    QuadraticRoots r = solve_quadratic(q, ctx);
    CHECK_FALSE(r.complex);
    CHECK(ctx == 2);
    QuadExt expect1(Rat(1, 2), Rat(1, 2), 2);
    CHECK(((r.r1 == expect1) || (r.r2 == expect1)));
    CHECK(r.r1 + r.r2 == QuadExt(Rat(1)));

    // t^2 + 1/4: roots +- i/2
    long long ctx2 = 0;
    QuadraticRoots c = solve_quadratic(lift_poly(PQ({Rat(1, 4), Rat(0), Rat(1)})), ctx2);
    CHECK(c.complex);
    CHECK(c.re.is_zero());
    CHECK(c.im == QuadExt(Rat(1, 2)));
    CHECK(ctx2 == 0);

    // mixing radicands is refused: first sqrt(2), then sqrt(3)
    long long ctx3 = 0;
    solve_quadratic(lift_poly(PQ({Rat(-2), Rat(0), Rat(1)})), ctx3);  // roots +-sqrt2
    CHECK(ctx3 == 2);
    CHECK_THROWS_AS(solve_quadratic(lift_poly(PQ({Rat(-3), Rat(0), Rat(1)})), ctx3), error);
}

TEST_CASE("sturm isolation: worked examples") {
    // Bronstein denominator has no roots in [1, 2]
    Poly<Rat> bden = P({4, 0, 5, 0, -5, 0, 1});
    CHECK(isolate_real_roots(bden, Rat(1), Rat(2)).empty());
    // count at the endpoints via the chain directly
    SturmChain<Rat> st(bden);
    CHECK(st.count_roots(Rat(1), Rat(2)) == 0);

    // x^2 - 1 on [0, 2] isolates one root near 1
    auto r1 = isolate_real_roots(P({-1, 0, 1}), Rat(0), Rat(2));
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].exact);
    CHECK(r1[0].lo == Rat(1));

    // x^2 - 4 on [0, 4]: root exactly at 2
    auto r2 = isolate_real_roots(P({-4, 0, 1}), Rat(0), Rat(4));
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].exact);
    CHECK(r2[0].lo == Rat(2));

    // x^2 - 2 on [0, 2]: irrational root isolated with rational endpoints
    auto r3 = isolate_real_roots(P({-2, 0, 1}), Rat(0), Rat(2));
    REQUIRE(r3.size() == 1);
    CHECK_FALSE(r3[0].exact);
    RootInterval tight = refine_interval(P({-2, 0, 1}), r3[0], Rat(1, 1000000));
    CHECK(tight.width() < Rat(1, 1000000));
    double mid = tight.midpoint().to_double();
    CHECK(std::abs(mid - std::sqrt(2.0)) < 1e-5);
}

TEST_CASE("sturm isolation: random polynomials with known roots") {
    std::mt19937 rng(5150);
    for (int t = 0; t < 60; ++t) {
        // build polynomial with known distinct rational roots
        std::uniform_int_distribution<int> nroots(1, 4);
        std::set<long> used;
        std::uniform_int_distribution<long> rv(-6, 6);
        int n = nroots(rng);
        Poly<Rat> p(P({1}));
        while (static_cast<int>(used.size()) < n) used.insert(rv(rng));
        for (long r : used) p = p * PQ({Rat(-r), Rat(1)});
        auto ivs = isolate_real_roots(p, Rat(-10), Rat(10));
        CHECK(ivs.size() == used.size());
        for (const auto& iv : ivs) {
            // each isolating interval contains exactly one of the known roots
            int inside = 0;
            for (long r : used)
                if ((iv.exact && Rat(r) == iv.lo) ||
                    (!iv.exact && Rat(r) > iv.lo && Rat(r) <= iv.hi))
                    ++inside;
            CHECK(inside == 1);
        }
    }
}

TEST_CASE("sign beside a root") {
    // q = x - 1 around the root of d = x^2 - 2 (s = sqrt 2): q positive on both sides
    Poly<Rat> d = P({-2, 0, 1});
    auto iv = isolate_real_roots(d, Rat(0), Rat(2)).at(0);
    CHECK(sign_beside_root(P({-1, 1}), d, iv, -1) == 1);
    CHECK(sign_beside_root(P({-1, 1}), d, iv, +1) == 1);
    // d itself changes sign across sqrt 2
    CHECK(sign_beside_root(d, d, iv, -1) == -1);
    CHECK(sign_beside_root(d, d, iv, +1) == 1);
    // exact root case: x^2 - 4 at 2
    Poly<Rat> d2 = P({-4, 0, 1});
    RootInterval at2{Rat(2), Rat(2), true};
    CHECK(sign_beside_root(d2, d2, at2, -1) == -1);
    CHECK(sign_beside_root(d2, d2, at2, +1) == 1);
    CHECK(sign_beside_root(P({5}), d2, at2, -1) == 1);
}
