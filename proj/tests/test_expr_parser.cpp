#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ratint/expr.hpp"
#include "ratint/parser.hpp"
#include "test_util.hpp"

using namespace ratint;
using namespace testutil;

TEST_CASE("parse corpus-style inputs") {
    // Bronstein integrand
    ExprPtr b = parse_expr_text("(x^4-3*x^2+6)/(x^6-5*x^4+5*x^2+4)");
    RatFun<Rat> f = expr_to_ratfun<Rat>(b, "x");
    CHECK(f.num() == P({6, 0, -3, 0, 1}));
    CHECK(f.den() == P({4, 0, 5, 0, -5, 0, 1}));

    // Gartner integrand lives over Q(sqrt 2)
    ExprPtr g = parse_expr_text("sqrt(2)/((x-1)^4+1/16)");
    RatFun<QuadExt> fg = expr_to_ratfun<QuadExt>(g, "x");
    CHECK(fg.den().lc().is_one());
    CHECK(fg.den().degree() == 4);
    CHECK(fg.num() == Poly<QuadExt>(QuadExt(Rat(0), Rat(1), 2)));
    CHECK_THROWS_AS(expr_to_ratfun<Rat>(g, "x"), error);

    CHECK_NOTHROW(parse_expr_text("arctan(2)+atan(1/2)"));
}

TEST_CASE("parse errors carry spans and expectations") {
    try {
        parse_expr_text("x^");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.span().begin == 2);
        CHECK(std::string(e.what()).find("error at 2..2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_expr_text("sin x"), parse_error);
    CHECK_THROWS_AS(parse_expr_text("(1+2"), parse_error);
    CHECK_THROWS_AS(parse_expr_text("1+*2"), parse_error);
    CHECK_THROWS_AS(parse_expr_text(""), parse_error);
    CHECK_THROWS_AS(parse_expr_text("x^y"), parse_error);
}

TEST_CASE("printer worked examples") {
    CHECK(print_expr(expr_fun(FunKind::atan, expr_sub(expr_var("x"), expr_int(1)))) ==
          "atan(x-1)");
    // 5/4*pi - atan(2)
    ExprPtr e = expr_sub(expr_mul(expr_num(Rat(5, 4)), expr_pi()),
                         expr_fun(FunKind::atan, expr_int(2)));
    CHECK(print_expr(e) == "5/4*pi-atan(2)");
    CHECK(expr_equal(parse_expr_text("5/4*pi-atan(2)"), e));
    // unary minus binds below the power
    ExprPtr m = expr_neg(expr_pow(expr_var("x"), 2));
    CHECK(print_expr(m) == "-x^2");
    CHECK(expr_equal(parse_expr_text("-x^2"), m));
}

namespace {

ExprPtr random_expr(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 3 : 10);
    switch (pick(rng)) {
        case 0: {
            std::uniform_int_distribution<long> n(-20, 20);
            return expr_num(Rat(n(rng)));
        }
        case 1: {
            std::uniform_int_distribution<long> n(-12, 12);
            std::uniform_int_distribution<long> d(2, 9);
            return expr_num(Rat(n(rng), d(rng)));
        }
        case 2: return expr_var("x");
        case 3: return expr_pi();
        case 4: return expr_add(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 5: return expr_sub(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 6: return expr_mul(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 7: return expr_div(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 8: {
            std::uniform_int_distribution<long> e(-6, 6);
            return expr_pow(random_expr(rng, depth - 1), e(rng));
        }
        case 9: return expr_neg(random_expr(rng, depth - 1));
        default: {
            std::uniform_int_distribution<int> f(0, 4);
            FunKind k = static_cast<FunKind>(f(rng));
            return expr_fun(k, random_expr(rng, depth - 1));
        }
    }
}

}  // namespace

TEST_CASE("round trip on 1000 random trees") {
    std::mt19937 rng(20240901);
    for (int t = 0; t < 1000; ++t) {
        ExprPtr e = random_expr(rng, 4);
        std::string s = print_expr(e);
        ExprPtr back;
        CAPTURE(s);
        REQUIRE_NOTHROW(back = parse_expr_text(s));
        CHECK(expr_equal(back, e));
    }
}

TEST_CASE("differentiate basics") {
    ExprPtr at = expr_fun(FunKind::atan, expr_var("x"));
    RatFun<Rat> d = expr_to_ratfun<Rat>(differentiate(at, "x"), "x");
    CHECK(d == RatFun<Rat>(P({1}), P({1, 0, 1})));

    // d/dx cos(3x^2) = -6x sin(3x^2): compare structurally via printing a
    // normalized numeric check at sample points is covered by the corpus;
    // here check the chain rule shape survives a ratfun comparison after
    // dividing out sin(3x^2).
    ExprPtr c = parse_expr_text("cos(3*x^2)");
    ExprPtr dc = differentiate(c, "x");
    // dc = -(sin(3x^2) * 6x); dividing by sin node yields -6x
    REQUIRE(dc->kind == ExprKind::neg);
    ExprPtr inner = dc->lhs;
    REQUIRE(inner->kind == ExprKind::mul);
    CHECK(inner->lhs->kind == ExprKind::fun);
    RatFun<Rat> factor = expr_to_ratfun<Rat>(inner->rhs, "x");
    CHECK(factor == RatFun<Rat>(P({0, 6}), P({1})));
}

TEST_CASE("differentiating the Bronstein antiderivative recovers the integrand") {
    ExprPtr F = parse_expr_text("atan(x)+atan(x^3)+atan((x^5-3*x^3+x)/2)");
    ExprPtr f = parse_expr_text("(x^4-3*x^2+6)/(x^6-5*x^4+5*x^2+4)");
    CHECK(expr_equal_as_ratfun(differentiate(F, "x"), f, "x"));
}

TEST_CASE("expr_to_ratfun worked examples and errors") {
    CHECK(expr_to_ratfun<Rat>(parse_expr_text("(x^2-1)/(x-1)"), "x") ==
          RatFun<Rat>(P({1, 1}), P({1})));
    CHECK_THROWS_AS(expr_to_ratfun<Rat>(parse_expr_text("sin(x)"), "x"), error);
    try {
        expr_to_ratfun<Rat>(parse_expr_text("sin(x)"), "x");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_rational_in_var);
    }
    // removable singularity: equality as reduced rational functions
    CHECK(expr_equal_as_ratfun(parse_expr_text("x+1"), parse_expr_text("(x^2-1)/(x-1)"), "x"));
    CHECK_FALSE(expr_equal_as_ratfun(parse_expr_text("1/(1+x^2)"),
                                     parse_expr_text("1/(1-x^2)"), "x"));
}

TEST_CASE("expr_to_ratfun agrees with exact pointwise evaluation") {
    std::mt19937 rng(777);
    int done = 0;
    while (done < 40) {
        ExprPtr e = random_expr(rng, 3);
        if (contains_kind(e, ExprKind::pi) || contains_kind(e, ExprKind::fun)) continue;
        RatFun<Rat> r;
        try {
            r = expr_to_ratfun<Rat>(e, "x");
        } catch (const error&) {
            continue;  // division by an identically-zero expression
        }
        int pts = 0;
        Rat x(-10, 3);
        while (pts < 20) {
            x += Rat(1, 3);
            try {
                // exact evaluation both ways: through the tree and the ratfun
                QuadExt direct = [&] {
                    struct Ev {
                        const std::string& var;
                        const Rat& x;
                        QuadExt run(const ExprPtr& n) {
                            switch (n->kind) {
                                case ExprKind::num: return QuadExt(n->value);
                                case ExprKind::var: return QuadExt(x);
                                case ExprKind::add: return run(n->lhs) + run(n->rhs);
                                case ExprKind::sub: return run(n->lhs) - run(n->rhs);
                                case ExprKind::mul: return run(n->lhs) * run(n->rhs);
                                case ExprKind::div: return run(n->lhs) / run(n->rhs);
                                case ExprKind::neg: return -run(n->lhs);
                                case ExprKind::pow: {
                                    QuadExt b = run(n->lhs);
                                    long e2 = n->exponent;
                                    if (e2 < 0) {
                                        b = b.inverse();
                                        e2 = -e2;
                                    }
                                    QuadExt acc(Rat(1));
                                    for (long i = 0; i < e2; ++i) acc *= b;
                                    return acc;
                                }
                                default: throw error(errc::internal, "node");
                            }
                        }
                    } ev{"x", x};
                    return ev.run(e);
                }();
                QuadExt via = r.eval(QuadExt(x));
                CHECK(direct == via);
                ++pts;
            } catch (const error&) {
                // pole of a subexpression; skip this point
            }
        }
        ++done;
    }
}
