#include "ratint/expr.hpp"

#include <cmath>

namespace ratint {

namespace {

std::shared_ptr<Expr> node(ExprKind k) { return std::make_shared<Expr>(k); }

}  // namespace

ExprPtr expr_num(const Rat& v) {
    auto n = node(ExprKind::num);
    n->value = v;
    return n;
}

ExprPtr expr_int(long v) { return expr_num(Rat(v)); }

ExprPtr expr_pi() { return node(ExprKind::pi); }

ExprPtr expr_var(const std::string& name) {
    auto n = node(ExprKind::var);
    n->name = name;
    return n;
}

ExprPtr expr_add(ExprPtr a, ExprPtr b) {
    auto n = node(ExprKind::add);
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

ExprPtr expr_sub(ExprPtr a, ExprPtr b) {
    auto n = node(ExprKind::sub);
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

ExprPtr expr_mul(ExprPtr a, ExprPtr b) {
    auto n = node(ExprKind::mul);
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

ExprPtr expr_div(ExprPtr a, ExprPtr b) {
    // literal rational division folds to a rational literal, so "5/4" and
    // the number 5/4 are the same tree
    if (a->kind == ExprKind::num && b->kind == ExprKind::num && !b->value.is_zero())
        return expr_num(a->value / b->value);
    auto n = node(ExprKind::div);
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

ExprPtr expr_pow(ExprPtr a, long e) {
    auto n = node(ExprKind::pow);
    n->lhs = std::move(a);
    n->exponent = e;
    return n;
}

ExprPtr expr_neg(ExprPtr a) {
    if (a->kind == ExprKind::num) return expr_num(-a->value);
    auto n = node(ExprKind::neg);
    n->lhs = std::move(a);
    return n;
}

ExprPtr expr_fun(FunKind f, ExprPtr arg) {
    auto n = node(ExprKind::fun);
    n->fn = f;
    n->lhs = std::move(arg);
    return n;
}

ExprPtr expr_sqrt_of(const Rat& v) { return expr_fun(FunKind::sqrt, expr_num(v)); }

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprKind::num: return a->value == b->value;
        case ExprKind::pi: return true;
        case ExprKind::var: return a->name == b->name;
        case ExprKind::pow:
            return a->exponent == b->exponent && expr_equal(a->lhs, b->lhs);
        case ExprKind::neg: return expr_equal(a->lhs, b->lhs);
        case ExprKind::fun: return a->fn == b->fn && expr_equal(a->lhs, b->lhs);
        default:
            return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
    }
}

bool contains_var(const ExprPtr& e, const std::string& var) {
    switch (e->kind) {
        case ExprKind::num:
        case ExprKind::pi: return false;
        case ExprKind::var: return e->name == var;
        default:
            if (e->lhs && contains_var(e->lhs, var)) return true;
            return e->rhs && contains_var(e->rhs, var);
    }
}

bool contains_kind(const ExprPtr& e, ExprKind k) {
    if (e->kind == k) return true;
    if (e->lhs && contains_kind(e->lhs, k)) return true;
    return e->rhs && contains_kind(e->rhs, k);
}

ExprPtr differentiate(const ExprPtr& e, const std::string& var) {
    switch (e->kind) {
        case ExprKind::num:
        case ExprKind::pi: return expr_int(0);
        case ExprKind::var: return expr_int(e->name == var ? 1 : 0);
        case ExprKind::add:
            return expr_add(differentiate(e->lhs, var), differentiate(e->rhs, var));
        case ExprKind::sub:
            return expr_sub(differentiate(e->lhs, var), differentiate(e->rhs, var));
        case ExprKind::mul:
            return expr_add(expr_mul(differentiate(e->lhs, var), e->rhs),
                            expr_mul(e->lhs, differentiate(e->rhs, var)));
        case ExprKind::div:
            return expr_div(expr_sub(expr_mul(differentiate(e->lhs, var), e->rhs),
                                     expr_mul(e->lhs, differentiate(e->rhs, var))),
                            expr_pow(e->rhs, 2));
        case ExprKind::pow: {
            if (e->exponent == 0) return expr_int(0);
            return expr_mul(expr_mul(expr_int(e->exponent), expr_pow(e->lhs, e->exponent - 1)),
                            differentiate(e->lhs, var));
        }
        case ExprKind::neg: return expr_neg(differentiate(e->lhs, var));
        case ExprKind::fun: {
            ExprPtr u = e->lhs;
            ExprPtr du = differentiate(u, var);
            switch (e->fn) {
                case FunKind::sin: return expr_mul(expr_fun(FunKind::cos, u), du);
                case FunKind::cos:
                    return expr_neg(expr_mul(expr_fun(FunKind::sin, u), du));
                case FunKind::atan:
                    return expr_div(du, expr_add(expr_int(1), expr_pow(u, 2)));
                case FunKind::log: return expr_div(du, u);
                case FunKind::sqrt:
                    if (!contains_var(u, var)) return expr_int(0);
                    throw error(errc::unsupported_shape,
                                "sqrt of an expression in the variable");
            }
        }
    }
    throw error(errc::internal, "unsupported node kind in differentiate");
}

QuadExt expr_const_value(const ExprPtr& e) {
    switch (e->kind) {
        case ExprKind::num: return QuadExt(e->value);
        case ExprKind::pi:
            throw error(errc::not_rational_in_var, "pi is not an algebraic constant here");
        case ExprKind::var:
            throw error(errc::not_rational_in_var, "variable in constant expression");
        case ExprKind::add: return expr_const_value(e->lhs) + expr_const_value(e->rhs);
        case ExprKind::sub: return expr_const_value(e->lhs) - expr_const_value(e->rhs);
        case ExprKind::mul: return expr_const_value(e->lhs) * expr_const_value(e->rhs);
        case ExprKind::div: return expr_const_value(e->lhs) / expr_const_value(e->rhs);
        case ExprKind::neg: return -expr_const_value(e->lhs);
        case ExprKind::pow: {
            QuadExt base = expr_const_value(e->lhs);
            long n = e->exponent;
            if (n < 0) {
                base = base.inverse();
                n = -n;
            }
            QuadExt acc(Rat(1));
            for (long i = 0; i < n; ++i) acc *= base;
            return acc;
        }
        case ExprKind::fun:
            if (e->fn == FunKind::sqrt) {
                QuadExt a = expr_const_value(e->lhs);
                if (!a.is_rational())
                    throw error(errc::unsupported_algebraic_degree, "nested radical");
                return QuadExt::sqrt_of_rational(a.rat_part());
            }
            throw error(errc::not_rational_in_var,
                        std::string(fun_name(e->fn)) + " of a constant is not algebraic");
    }
    throw error(errc::internal, "unsupported node kind");
}

double expr_eval_double(const ExprPtr& e, const std::string& var, double x) {
    switch (e->kind) {
        case ExprKind::num: return e->value.to_double();
        case ExprKind::pi: return M_PI;
        case ExprKind::var:
            if (e->name == var) return x;
            throw error(errc::domain_error, "unbound variable " + e->name);
        case ExprKind::add:
            return expr_eval_double(e->lhs, var, x) + expr_eval_double(e->rhs, var, x);
        case ExprKind::sub:
            return expr_eval_double(e->lhs, var, x) - expr_eval_double(e->rhs, var, x);
        case ExprKind::mul:
            return expr_eval_double(e->lhs, var, x) * expr_eval_double(e->rhs, var, x);
        case ExprKind::div:
            return expr_eval_double(e->lhs, var, x) / expr_eval_double(e->rhs, var, x);
        case ExprKind::pow:
            return std::pow(expr_eval_double(e->lhs, var, x),
                            static_cast<double>(e->exponent));
        case ExprKind::neg: return -expr_eval_double(e->lhs, var, x);
        case ExprKind::fun: {
            double u = expr_eval_double(e->lhs, var, x);
            switch (e->fn) {
                case FunKind::sin: return std::sin(u);
                case FunKind::cos: return std::cos(u);
                case FunKind::atan: return std::atan(u);
                case FunKind::log: return std::log(u);
                case FunKind::sqrt: return std::sqrt(u);
            }
        }
    }
    throw error(errc::internal, "unsupported node kind");
}

namespace {

template <class K>
K scalar_from_quadext(const QuadExt& q);

template <>
Rat scalar_from_quadext<Rat>(const QuadExt& q) {
    if (!q.is_rational())
        throw error(errc::not_rational_in_var,
                    "constant requires a quadratic extension");
    return q.rat_part();
}

template <>
QuadExt scalar_from_quadext<QuadExt>(const QuadExt& q) { return q; }

}  // namespace

template <class K>
RatFun<K> expr_to_ratfun(const ExprPtr& e, const std::string& var) {
    switch (e->kind) {
        case ExprKind::num: return RatFun<K>(K(scalar_from_quadext<K>(QuadExt(e->value))));
        case ExprKind::pi:
            throw error(errc::not_rational_in_var, "pi in a rational-function context");
        case ExprKind::var:
            if (e->name == var) return RatFun<K>(Poly<K>::x());
            throw error(errc::not_rational_in_var, "unbound variable " + e->name);
        case ExprKind::add:
            return expr_to_ratfun<K>(e->lhs, var) + expr_to_ratfun<K>(e->rhs, var);
        case ExprKind::sub:
            return expr_to_ratfun<K>(e->lhs, var) - expr_to_ratfun<K>(e->rhs, var);
        case ExprKind::mul:
            return expr_to_ratfun<K>(e->lhs, var) * expr_to_ratfun<K>(e->rhs, var);
        case ExprKind::div: {
            RatFun<K> d = expr_to_ratfun<K>(e->rhs, var);
            if (d.is_zero())
                throw error(errc::division_by_zero, "division by an identically zero expression");
            return expr_to_ratfun<K>(e->lhs, var) / d;
        }
        case ExprKind::pow: {
            RatFun<K> b = expr_to_ratfun<K>(e->lhs, var);
            long n = e->exponent;
            if (n < 0) {
                if (b.is_zero())
                    throw error(errc::division_by_zero, "zero to a negative power");
                b = RatFun<K>(K(1)) / b;
                n = -n;
            }
            RatFun<K> acc(K(1));
            for (long i = 0; i < n; ++i) acc = acc * b;
            return acc;
        }
        case ExprKind::neg: return -expr_to_ratfun<K>(e->lhs, var);
        case ExprKind::fun:
            if (contains_var(e->lhs, var))
                throw error(errc::not_rational_in_var,
                            std::string(fun_name(e->fn)) + " applied to the variable");
            return RatFun<K>(K(scalar_from_quadext<K>(expr_const_value(e))));
    }
    throw error(errc::internal, "unsupported node kind");
}

template RatFun<Rat> expr_to_ratfun<Rat>(const ExprPtr&, const std::string&);
template RatFun<QuadExt> expr_to_ratfun<QuadExt>(const ExprPtr&, const std::string&);

bool expr_equal_as_ratfun(const ExprPtr& a, const ExprPtr& b, const std::string& var) {
    return expr_to_ratfun<QuadExt>(a, var) == expr_to_ratfun<QuadExt>(b, var);
}

}  // namespace ratint
