#pragma once

#include <functional>

#include "ratint/antideriv.hpp"
#include "ratint/bigfloat.hpp"
#include "ratint/definite.hpp"

namespace ratint {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions = 0;
};

// Adaptive quadrature (nested Simpson with Richardson correction) to the
// requested absolute tolerance; deterministic; NoConvergence past the
// subdivision cap. Used as the module-crossing oracle, never as the source
// of symbolic answers.
QuadResult quad_oracle(const std::function<double(double)>& f, double lo, double hi,
                       double tol);

QuadResult quad_oracle(const RatFun<QuadExt>& f, const Interval& I, double tol);
QuadResult quad_oracle(const ExprPtr& e, const std::string& var, double lo, double hi,
                       double tol);

// Li_s(z) = sum_{k>=1} z^k / k^s for |z| < 1, with a geometric tail bound.
double polylog(int s, double z, double tol);

// High-precision evaluation at a rational point (PoleAtPoint on rational-part
// poles); atan/log arguments are evaluated exactly before rounding.
BigFloat eval_at(const AntiDeriv& F, const Rat& x, int digits);
BigFloat eval_at(const ExprPtr& e, const std::string& var, const Rat& x, int digits);

double ratfun_eval_double(const RatFun<QuadExt>& f, double x);

}  // namespace ratint
