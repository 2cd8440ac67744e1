#pragma once

#include <utility>

#include "ratint/poly.hpp"

namespace ratint {

// Reduced rational function: den monic, gcd(num, den) = 1.
template <class K>
class RatFun {
  public:
    RatFun() : num_(), den_(K(1)) {}
    RatFun(const K& c) : num_(c), den_(K(1)) {}
    RatFun(long c) : num_(K(c)), den_(K(1)) {}
    RatFun(const Poly<K>& p) : num_(p), den_(K(1)) {}
    RatFun(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_proper() const { return num_.degree() < den_.degree(); }

    RatFun operator-() const {
        RatFun r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw error(errc::division_by_zero, "division by zero rational function");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RatFun operator*(const RatFun& a, const K& s) { return RatFun(a.num_ * s, a.den_); }
    friend RatFun operator*(const K& s, const RatFun& a) { return a * s; }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    // Quotient rule, exactly.
    RatFun derivative() const {
        return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    K eval(const K& x) const {
        K d = den_.eval(x);
        if (d.is_zero()) throw error(errc::pole_at_point, "evaluation at a pole");
        return num_.eval(x) / d;
    }

    bool has_pole_at(const K& x) const { return den_.eval(x).is_zero(); }

  private:
    void normalize() {
        if (den_.is_zero())
            throw error(errc::division_by_zero, "zero denominator polynomial");
        if (num_.is_zero()) {
            den_ = Poly<K>(K(1));
            return;
        }
        Poly<K> g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = poly_exact_div(num_, g);
            den_ = poly_exact_div(den_, g);
        }
        K lc = den_.lc();
        if (!lc.is_one()) {
            K inv = lc.inverse();
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    Poly<K> num_, den_;
};

template <class K>
RatFun<K> rat_normalize(const Poly<K>& num, const Poly<K>& den) {
    return RatFun<K>(num, den);
}

inline RatFun<QuadExt> lift_ratfun(const RatFun<Rat>& f) {
    return RatFun<QuadExt>(lift_poly(f.num()), lift_poly(f.den()));
}

inline bool ratfun_is_rational(const RatFun<QuadExt>& f) {
    return poly_is_rational(f.num()) && poly_is_rational(f.den());
}

inline RatFun<Rat> demote_ratfun(const RatFun<QuadExt>& f) {
    return RatFun<Rat>(demote_poly(f.num()), demote_poly(f.den()));
}

}  // namespace ratint
