#pragma once

#include <string>
#include <vector>

#include "ratint/expr.hpp"
#include "ratint/ratfun.hpp"

namespace ratint {

// coeff * log(arg); arg nonconstant with integer content removed.
struct LogTerm {
    QuadExt coeff;
    Poly<QuadExt> arg;
};

// coeff * atan(arg); arg nonconstant (a polynomial for rectified output,
// stored as a rational function for generality).
struct AtanTerm {
    QuadExt coeff;
    RatFun<QuadExt> arg;
};

// Antiderivative of a rational function: polynomial part + rational part +
// logarithmic and arctangent terms. The defining property (checked by the
// test suites, not assumed) is derivative() == integrand.
struct AntiDeriv {
    Poly<QuadExt> poly_part;
    RatFun<QuadExt> rat_part;
    std::vector<LogTerm> logs;
    std::vector<AtanTerm> atans;

    bool is_zero() const {
        return poly_part.is_zero() && rat_part.is_zero() && logs.empty() && atans.empty();
    }

    RatFun<QuadExt> derivative() const;
    ExprPtr to_expr(const std::string& var) const;

    // Deterministic term order: by argument degree, then by coefficients.
    void canonicalize();
};

ExprPtr quadext_to_expr(const QuadExt& q);
ExprPtr poly_to_expr(const Poly<QuadExt>& p, const std::string& var);
ExprPtr ratfun_to_expr(const RatFun<QuadExt>& f, const std::string& var);

}  // namespace ratint
