#pragma once

#include <vector>

#include "ratint/constant.hpp"
#include "ratint/integrate.hpp"
#include "ratint/roots.hpp"

namespace ratint {

struct Interval {
    Rat lo, hi;
    Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (!(lo < hi)) throw error(errc::domain_error, "interval needs lo < hi");
    }
};

// Isolating sub-intervals (rational endpoints) for the real roots of p inside
// the closed interval; Sturm counting, refinable below any width.
std::vector<RootInterval> real_roots_in_interval(const Poly<QuadExt>& p, const Interval& I);
std::vector<RootInterval> real_roots_in_interval(const Poly<Rat>& p, const Interval& I);

// Exact definite integral over a pole-free interval. The antiderivative from
// integrate_rational() is continuous there, so the value is F(hi) - F(lo);
// arctangent terms whose argument blows up at an endpoint contribute the
// one-sided +-pi/2 limit.
ConstExpr definite_integrate(const RatFun<QuadExt>& f, const Interval& I);
ConstExpr definite_integrate(const RatFun<Rat>& f, const Interval& I);

// Evaluates an AntiDeriv at a rational point; `side` (-1 left, +1 right)
// selects the one-sided limit when an arctangent argument has a pole there.
ConstExpr eval_antideriv_at(const AntiDeriv& F, const Rat& x, int side);

// Newton-Leibniz for an externally supplied closed-form antiderivative F
// (verified against f first). When split_at_discontinuities is set, the
// interval is split at the real zeros of every arctangent-argument
// denominator and the one-sided +-pi/2 limits are summed; disabling it
// reproduces the naive (wrong across discontinuities) evaluation.
ConstExpr definite_from_antiderivative(const ExprPtr& F, const std::string& var,
                                       const RatFun<QuadExt>& f, const Interval& I,
                                       bool split_at_discontinuities = true);

// Evaluates a closed-form antiderivative expression at a rational point with
// one-sided limit handling for arctangent poles.
ConstExpr eval_antideriv_expr_at(const ExprPtr& F, const std::string& var, const Rat& x,
                                 int side);

}  // namespace ratint
