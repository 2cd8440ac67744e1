#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ratint/antideriv.hpp"
#include "ratint/ratfun.hpp"

namespace ratint {

// Hermite reduction: f = U' + A with den(A) squarefree and A proper.
// Precondition: f proper. The identity U' + A == f is re-checked on every
// call and a failure is a hard error.
template <class K>
std::pair<RatFun<K>, RatFun<K>> hermite_reduce(const RatFun<K>& f);

extern template std::pair<RatFun<Rat>, RatFun<Rat>> hermite_reduce(const RatFun<Rat>&);
extern template std::pair<RatFun<QuadExt>, RatFun<QuadExt>> hermite_reduce(
    const RatFun<QuadExt>&);

// One partial-fraction summand num/den with deg den <= 2, deg num < deg den.
struct PartialFraction {
    Poly<QuadExt> num;
    Poly<QuadExt> den;
};

// Residue decomposition over the scalar domain (field_radicand names the
// quadratic extension; 0 = plain rationals). Returns nullopt (NotFullySplit)
// when the denominator has an irreducible factor of degree >= 3 over the
// domain; callers fall back to log_part.
std::optional<std::vector<PartialFraction>> partial_fractions(const RatFun<QuadExt>& f,
                                                              long long field_radicand = 0);

// A complex-conjugate pair of resultant roots re +- im*i (im > 0) together
// with the split gcd u + i*v; the raw material for arctangent rectification.
struct ConjugatePair {
    QuadExt re, im;
    Poly<QuadExt> u, v;
};

struct LogPartResult {
    std::vector<LogTerm> logs;
    std::vector<ConjugatePair> pairs;
};

// Rothstein-Trager logarithmic part. Precondition: den(f) squarefree, f
// proper and nonzero. Real resultant roots (rational or quadratic-irrational)
// become LogTerms; complex-conjugate roots are returned as pairs.
LogPartResult log_part(const RatFun<QuadExt>& f);

struct Rectified {
    std::vector<AtanTerm> atans;
    std::vector<LogTerm> logs;
};

// Real arctangent rectification of conjugate log pairs: emits a sum that is
// continuous at every real point where the integrand is finite, via the
// extended-Euclidean recursion on (u, v).
Rectified rectify_atan(const std::vector<ConjugatePair>& pairs);

// Full rational integration pipeline: polynomial quotient + Hermite + log
// part + rectification.
AntiDeriv integrate_rational(const RatFun<QuadExt>& f);
AntiDeriv integrate_rational(const RatFun<Rat>& f);

// Exact check that F' == f; used by the corpus runner and the test suites.
bool verify_antiderivative(const AntiDeriv& F, const RatFun<QuadExt>& f);

}  // namespace ratint
