#include "ratint/numeric.hpp"

#include <cmath>
#include <vector>

namespace ratint {

namespace {

struct SimpsonState {
    const std::function<double(double)>& f;
    int subdivisions = 0;
    double err = 0.0;
};

double simpson_rec(SimpsonState& st, double a, double b, double fa, double fm, double fb,
                   double whole, double eps, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = st.f(lm), frm = st.f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (!std::isfinite(delta))
        throw error(errc::no_convergence, "integrand not finite on the interval");
    if (std::fabs(delta) <= 15.0 * eps || (b - a) < 1e-14 * (std::fabs(a) + std::fabs(b) + 1.0)) {
        st.err += std::fabs(delta) / 15.0;
        ++st.subdivisions;
        return left + right + delta / 15.0;
    }
    if (depth <= 0)
        throw error(errc::no_convergence,
                    "adaptive quadrature hit the subdivision cap (suspected singularity)");
    return simpson_rec(st, a, m, fa, flm, fm, left, eps / 2.0, depth - 1) +
           simpson_rec(st, m, b, fm, frm, fb, right, eps / 2.0, depth - 1);
}

}  // namespace

QuadResult quad_oracle(const std::function<double(double)>& f, double lo, double hi,
                       double tol) {
    if (!(tol > 0.0)) throw error(errc::domain_error, "tolerance must be positive");
    if (lo == hi) return {0.0, 0.0, 0};
    SimpsonState st{f};
    double fa = f(lo), fb = f(hi), fm = f(0.5 * (lo + hi));
    if (!std::isfinite(fa) || !std::isfinite(fb) || !std::isfinite(fm))
        throw error(errc::no_convergence, "integrand not finite at a sample point");
    double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
    double value = simpson_rec(st, lo, hi, fa, fm, fb, whole, tol / 2.0, 48);
    return {value, st.err, st.subdivisions};
}

double ratfun_eval_double(const RatFun<QuadExt>& f, double x) {
    auto horner = [x](const Poly<QuadExt>& p) {
        double acc = 0.0;
        for (int i = p.degree(); i >= 0; --i) acc = acc * x + p[i].to_double();
        return acc;
    };
    return horner(f.num()) / horner(f.den());
}

QuadResult quad_oracle(const RatFun<QuadExt>& f, const Interval& I, double tol) {
    // coefficients flattened to doubles once up front
    std::vector<double> nc, dc;
    for (const auto& c : f.num().coeffs()) nc.push_back(c.to_double());
    for (const auto& c : f.den().coeffs()) dc.push_back(c.to_double());
    auto eval = [&](double x) {
        double n = 0.0, d = 0.0;
        for (auto it = nc.rbegin(); it != nc.rend(); ++it) n = n * x + *it;
        for (auto it = dc.rbegin(); it != dc.rend(); ++it) d = d * x + *it;
        return n / d;
    };
    return quad_oracle(eval, I.lo.to_double(), I.hi.to_double(), tol);
}

QuadResult quad_oracle(const ExprPtr& e, const std::string& var, double lo, double hi,
                       double tol) {
    auto eval = [&](double x) { return expr_eval_double(e, var, x); };
    return quad_oracle(eval, lo, hi, tol);
}

double polylog(int s, double z, double tol) {
    if (s < 1) throw error(errc::domain_error, "polylog order must be >= 1");
    if (!(std::fabs(z) < 1.0))
        throw error(errc::domain_error, "polylog series needs |z| < 1");
    if (z == 0.0) return 0.0;
    if (!(tol > 0.0)) throw error(errc::domain_error, "tolerance must be positive");
    double az = std::fabs(z);
    double sum = 0.0, zk = 1.0;
    for (int k = 1; k < 1000000; ++k) {
        zk *= z;
        sum += zk / std::pow(static_cast<double>(k), s);
        // geometric tail bound
        double tail = std::pow(az, k + 1) /
                      (std::pow(static_cast<double>(k + 1), s) * (1.0 - az));
        if (tail <= tol) return sum;
    }
    throw error(errc::no_convergence, "polylog series did not reach the tolerance");
}

// --- high-precision evaluation -------------------------------------------------

BigFloat eval_at(const AntiDeriv& F, const Rat& x, int digits) {
    long bits = BigFloat::bits_for_digits(digits + 12);
    QuadExt qx(x);
    QuadExt rat_value = F.poly_part.eval(qx);
    if (!F.rat_part.is_zero()) {
        if (F.rat_part.den().eval(qx).is_zero())
            throw error(errc::pole_at_point, "rational part has a pole at the point");
        rat_value += F.rat_part.eval(qx);
    }
    BigFloat acc = BigFloat::from_quadext(rat_value, bits);
    for (const auto& lt : F.logs) {
        QuadExt val = lt.arg.eval(qx);
        if (val.is_zero()) throw error(errc::pole_at_point, "log argument vanishes at the point");
        if (val.sign() < 0) val = -val;
        acc = acc + BigFloat::from_quadext(lt.coeff, bits) * BigFloat::from_quadext(val, bits).log();
    }
    for (const auto& at : F.atans) {
        QuadExt dv = at.arg.den().eval(qx);
        if (dv.is_zero())
            throw error(errc::pole_at_point, "atan argument has a pole at the point");
        QuadExt val = at.arg.num().eval(qx) / dv;
        acc = acc + BigFloat::from_quadext(at.coeff, bits) * BigFloat::from_quadext(val, bits).atan();
    }
    return acc;
}

namespace {

BigFloat eval_expr_big(const ExprPtr& e, const std::string& var, const BigFloat& x,
                       long bits) {
    switch (e->kind) {
        case ExprKind::num: return BigFloat::from_rat(e->value, bits);
        case ExprKind::pi: return BigFloat::pi(bits);
        case ExprKind::var:
            if (e->name == var) return x;
            throw error(errc::domain_error, "unbound variable " + e->name);
        case ExprKind::add:
            return eval_expr_big(e->lhs, var, x, bits) + eval_expr_big(e->rhs, var, x, bits);
        case ExprKind::sub:
            return eval_expr_big(e->lhs, var, x, bits) - eval_expr_big(e->rhs, var, x, bits);
        case ExprKind::mul:
            return eval_expr_big(e->lhs, var, x, bits) * eval_expr_big(e->rhs, var, x, bits);
        case ExprKind::div: {
            BigFloat d = eval_expr_big(e->rhs, var, x, bits);
            if (d.is_zero()) throw error(errc::pole_at_point, "division by zero at the point");
            return eval_expr_big(e->lhs, var, x, bits) / d;
        }
        case ExprKind::pow:
            return eval_expr_big(e->lhs, var, x, bits).pow_si(e->exponent);
        case ExprKind::neg: return -eval_expr_big(e->lhs, var, x, bits);
        case ExprKind::fun: {
            BigFloat u = eval_expr_big(e->lhs, var, x, bits);
            switch (e->fn) {
                case FunKind::sin: return u.sin();
                case FunKind::cos: return u.cos();
                case FunKind::atan: return u.atan();
                case FunKind::log:
                    // real antiderivative convention: log|.|
                    if (u.is_zero())
                        throw error(errc::pole_at_point, "log of zero");
                    return u.abs().log();
                case FunKind::sqrt: return u.sqrt();
            }
        }
    }
    throw error(errc::internal, "unsupported node kind");
}

}  // namespace

BigFloat eval_at(const ExprPtr& e, const std::string& var, const Rat& x, int digits) {
    long bits = BigFloat::bits_for_digits(digits + 12);
    return eval_expr_big(e, var, BigFloat::from_rat(x, bits), bits);
}

}  // namespace ratint
