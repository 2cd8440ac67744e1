#pragma once

#include <memory>
#include <string>

#include "ratint/ratfun.hpp"

namespace ratint {

enum class ExprKind { num, pi, var, add, sub, mul, div, pow, neg, fun };
enum class FunKind { sin, cos, atan, log, sqrt };

inline const char* fun_name(FunKind f) {
    switch (f) {
        case FunKind::sin: return "sin";
        case FunKind::cos: return "cos";
        case FunKind::atan: return "atan";
        case FunKind::log: return "log";
        case FunKind::sqrt: return "sqrt";
    }
    return "?";
}

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable expression tree. Powers carry integer exponents only.
class Expr {
  public:
    ExprKind kind;
    Rat value;         // num
    std::string name;  // var
    long exponent = 0; // pow
    FunKind fn = FunKind::sin;
    ExprPtr lhs, rhs;

    explicit Expr(ExprKind k) : kind(k) {}
};

ExprPtr expr_num(const Rat& v);
ExprPtr expr_int(long v);
ExprPtr expr_pi();
ExprPtr expr_var(const std::string& name);
ExprPtr expr_add(ExprPtr a, ExprPtr b);
ExprPtr expr_sub(ExprPtr a, ExprPtr b);
ExprPtr expr_mul(ExprPtr a, ExprPtr b);
ExprPtr expr_div(ExprPtr a, ExprPtr b);
ExprPtr expr_pow(ExprPtr a, long e);
ExprPtr expr_neg(ExprPtr a);
ExprPtr expr_fun(FunKind f, ExprPtr arg);
ExprPtr expr_sqrt_of(const Rat& v);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);
bool contains_var(const ExprPtr& e, const std::string& var);
bool contains_kind(const ExprPtr& e, ExprKind k);

// Exact symbolic derivative (sum/product/quotient/chain rules; no
// simplification beyond literal folding in the node builders).
ExprPtr differentiate(const ExprPtr& e, const std::string& var);

// Exact value of a constant expression representable in Q(sqrt(d));
// rejects pi and transcendental function applications.
QuadExt expr_const_value(const ExprPtr& e);

double expr_eval_double(const ExprPtr& e, const std::string& var, double x);

// Normalizes a rational expression in `var` into a reduced RatFun.
template <class K>
RatFun<K> expr_to_ratfun(const ExprPtr& e, const std::string& var);

extern template RatFun<Rat> expr_to_ratfun<Rat>(const ExprPtr&, const std::string&);
extern template RatFun<QuadExt> expr_to_ratfun<QuadExt>(const ExprPtr&, const std::string&);

bool expr_equal_as_ratfun(const ExprPtr& a, const ExprPtr& b, const std::string& var);

}  // namespace ratint
