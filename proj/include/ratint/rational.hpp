#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "ratint/error.hpp"

namespace ratint {

// Exact rational scalar. Canonical form is maintained by GMP: denominator
// positive, gcd(|num|, den) = 1, zero is 0/1.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d) : v_(n, d) {
        if (d == 0) throw error(errc::division_by_zero, "rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    explicit Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& n, const mpz_class& d) : v_(n, d) {
        if (d == 0) throw error(errc::division_by_zero, "rational with zero denominator");
        v_.canonicalize();
    }

    static Rat from_string(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0)
            throw error(errc::parse_error, "bad rational literal '" + s + "'");
        v.canonicalize();
        if (v.get_den() == 0) throw error(errc::division_by_zero, "zero denominator in '" + s + "'");
        return Rat(v);
    }

    const mpq_class& value() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw error(errc::division_by_zero, "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat inverse() const {
        if (is_zero()) throw error(errc::division_by_zero, "inverse of zero");
        return Rat(mpq_class(1) / v_);
    }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    double to_double() const { return v_.get_d(); }

    std::string str() const { return v_.get_str(); }

  private:
    mpq_class v_;
};

inline Rat rat_pow(const Rat& base, long e) {
    if (e < 0) return rat_pow(base.inverse(), -e);
    Rat acc(1), b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

// Floor of num/den as an exact integer rational.
inline mpz_class rat_floor(const Rat& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    return q;
}

// True iff x is the square of a rational; if so *root is its nonnegative root.
inline bool rat_is_square(const Rat& x, Rat* root) {
    if (x.sign() < 0) return false;
    if (x.is_zero()) {
        if (root) *root = Rat(0);
        return true;
    }
    mpz_class n = x.num(), d = x.den(), rn, rd;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
    if (!mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    if (root) *root = Rat(rn, rd);
    return true;
}

}  // namespace ratint
