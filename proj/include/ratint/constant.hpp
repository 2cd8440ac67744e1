#pragma once

#include <string>
#include <vector>

#include "ratint/bigfloat.hpp"
#include "ratint/expr.hpp"

namespace ratint {

struct ConstAtan {
    Rat coeff;
    QuadExt arg;  // nonzero
};

struct ConstLog {
    Rat coeff;
    QuadExt arg;  // > 0
};

// Closed-form constant: rational + q*pi + q2*pi^2 + sum c_i*atan(r_i) +
// sum d_i*log(s_i). The pi^2 slot exists because the trig pipeline's values
// (pi/2 times a pi-valued integral) land there.
struct ConstExpr {
    Rat rational_part;
    Rat pi_coeff;
    Rat pi2_coeff;
    std::vector<ConstAtan> atan_terms;
    std::vector<ConstLog> log_terms;

    static ConstExpr rational(const Rat& r);
    static ConstExpr pi_times(const Rat& q);
    static ConstExpr atan_of(const Rat& coeff, const QuadExt& arg);
    static ConstExpr log_of(const Rat& coeff, const QuadExt& arg);

    bool is_zero_literal() const;
    bool is_rational_only() const;
    bool is_pi_and_rational_only() const;

    ConstExpr operator-() const;
    friend ConstExpr operator+(const ConstExpr& a, const ConstExpr& b);
    friend ConstExpr operator-(const ConstExpr& a, const ConstExpr& b);
    ConstExpr scaled(const Rat& k) const;
    // Multiplication by q*pi; defined only while no atan/log/pi^2 terms are
    // present (the result must stay inside this representation).
    ConstExpr times_pi(const Rat& q) const;
};

// Folds atan arguments into (0, 1): atan(-x) -> -atan(x), atan(1) -> pi/4,
// and atan(x) -> pi/2 - atan(1/x) for x > 1; merges duplicate terms; drops
// log(1); deterministic term order.
ConstExpr const_normalize(const ConstExpr& c);

// atan(a) + atan(b) as a ConstExpr with the explicit k*pi branch correction.
ConstExpr arctan_add(const Rat& a, const Rat& b);

enum class Eq { equal, not_equal, undecided };

struct EqVerdict {
    Eq result = Eq::undecided;
    bool numeric_agrees = false;  // |difference| < 1e-100 at 150 digits
    std::string abs_delta;        // decimal magnitude of the difference
};

// Decision procedure: exact when every atan/log argument is rational
// (complex-integer angle accounting for the atan part, exact multiplicative
// relations for the log part); quadratic-extension arguments fall back to the
// 150-digit numeric verdict, reported as Undecided.
EqVerdict const_equal(const ConstExpr& c1, const ConstExpr& c2);

BigFloat const_eval(const ConstExpr& c, int digits);

ExprPtr const_to_expr(const ConstExpr& c);
std::string const_to_string(const ConstExpr& c);

// Builds a ConstExpr from a parsed constant expression (rational arithmetic,
// pi, pi^2, atan/log of algebraic constants).
ConstExpr const_from_expr(const ExprPtr& e);

}  // namespace ratint
