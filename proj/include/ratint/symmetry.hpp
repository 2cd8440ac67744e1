#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ratint/definite.hpp"
#include "ratint/expr.hpp"

namespace ratint {

enum class Parity { even, odd, neither };

struct Reduction {
    Parity parity;
    // odd: the symmetric-interval integral is exactly zero
    // even: it equals twice the integral over [0, a]
    // neither: unchanged
};

// Sparse polynomial in x, sin(x), cos(x) over Q; the kernel form behind the
// symmetry rules. cos^2 (or sin^2) can be eliminated against the Pythagorean
// relation to reach a canonical form.
class TrigPoly {
  public:
    using Key = std::array<int, 3>;  // exponents of (x, sin, cos)
    std::map<Key, Rat> terms;

    static TrigPoly constant(const Rat& c);
    static TrigPoly var();
    static TrigPoly sin_x();
    static TrigPoly cos_x();

    bool is_zero() const { return terms.empty(); }

    TrigPoly operator-() const;
    friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b);
    friend TrigPoly operator-(const TrigPoly& a, const TrigPoly& b);
    friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);

    TrigPoly reduce_cos2() const;  // cos^2 -> 1 - sin^2 until cos-degree <= 1
    TrigPoly reduce_sin2() const;  // sin^2 -> 1 - cos^2 until sin-degree <= 1
    TrigPoly substitute_neg_x() const;  // x -> -x, sin -> -sin, cos -> cos

    int max_x_degree() const;
};

struct TrigRat {
    TrigPoly num, den;
};

// Converts an expression that is rational in {var, sin(var), cos(var)} into
// the kernel form; UnsupportedShape otherwise.
TrigRat expr_to_trigrat(const ExprPtr& e, const std::string& var);

Parity parity(const ExprPtr& e, const std::string& var);

// Classification used for integrals over [-a, a].
Reduction symmetric_interval_reduce(const ExprPtr& e, const std::string& var);

// Matches e = x * f(sin x) (rewriting cos^2 = 1 - sin^2 where needed) and
// returns f as a univariate rational function; nullopt when the shape does
// not match.
std::optional<RatFun<Rat>> x_fsin_reduce(const ExprPtr& e, const std::string& var);

// A bound q*pi on the radian axis.
struct PiMultiple {
    Rat q;
};

// sin(x)*R(cos x) or cos(x)*R(sin x) over [lo*pi, hi*pi] becomes an exact
// rational integrand over an exact rational interval (orientation folded into
// the sign of the result); bounds must be multiples of pi/2.
std::pair<RatFun<Rat>, Interval> trig_to_rational(const ExprPtr& e, const std::string& var,
                                                  const PiMultiple& lo, const PiMultiple& hi);

// Full pipeline: direct substitution, or the x*f(sin x) reduction on [0, pi],
// finishing with exact rational definite integration.
ConstExpr evaluate_trig_definite(const ExprPtr& e, const std::string& var,
                                 const PiMultiple& lo, const PiMultiple& hi);

// The three derivation routes for the x*f(sin x) pattern on [0, pi]
// (reduction lemma; shift-and-split; direct substitution). Each is computed
// independently; all must agree (checked by the acceptance suite).
std::vector<ConstExpr> trig_definite_all_routes(const ExprPtr& e, const std::string& var);

}  // namespace ratint
