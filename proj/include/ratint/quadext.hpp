#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "ratint/rational.hpp"

namespace ratint {

// Splits n > 0 as s^2 * k with k squarefree; returns {s, k}. Trial division
// with a perfect-square check on the cofactor; radicands at the scale this
// engine sees are tiny.
inline std::pair<mpz_class, mpz_class> square_part(mpz_class n) {
    mpz_class s = 1, k = 1;
    for (mpz_class p = 2; p * p * p <= n && p < 70000; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            for (int i = 0; i < e / 2; ++i) s *= p;
            if (e % 2) k *= p;
        }
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        s *= r;
    } else {
        k *= n;
    }
    return {s, k};
}

// Scalar a + b*sqrt(d) with a, b rational and d a squarefree integer > 1.
// A pure rational is stored with b = 0 and d = 0 ("no radical chosen"), so
// rationals combine freely with any extension; two values with different
// nonzero radicands refuse to mix.
class QuadExt {
  public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(long n) : a_(n), b_(0), d_(0) {}
    QuadExt(const Rat& a) : a_(a), b_(0), d_(0) {}
    QuadExt(Rat a, Rat b, long long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        normalize();
    }

    static QuadExt sqrt_of_rational(const Rat& x) {
        if (x.sign() < 0) throw error(errc::domain_error, "sqrt of negative rational");
        if (x.is_zero()) return QuadExt();
        // sqrt(p/q) = sqrt(p*q)/q
        mpz_class pq = x.num() * x.den();
        auto [s, k] = square_part(pq);
        Rat coeff(s, x.den());
        if (k == 1) return QuadExt(coeff);
        return QuadExt(Rat(0), coeff, k.get_si());
    }

    const Rat& rat_part() const { return a_; }
    const Rat& rad_coeff() const { return b_; }
    long long radicand() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return b_.is_zero() && a_.is_one(); }
    bool is_rational() const { return b_.is_zero(); }

    // Exact sign of the real value a + b*sqrt(d).
    int sign() const {
        if (b_.is_zero()) return a_.sign();
        if (a_.is_zero()) return b_.sign();
        int sa = a_.sign(), sb = b_.sign();
        if (sa == sb) return sa;
        Rat cmp = a_ * a_ - b_ * b_ * Rat(d_);
        return sa * cmp.sign();
    }

    QuadExt conj() const { return b_.is_zero() ? *this : QuadExt(a_, -b_, d_); }

    // Rational norm a^2 - d*b^2 (product with the conjugate).
    Rat norm() const { return a_ * a_ - b_ * b_ * Rat(d_); }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

    QuadExt& operator+=(const QuadExt& o) {
        long long d = joint_radicand(o);
        a_ += o.a_;
        b_ += o.b_;
        d_ = d;
        normalize();
        return *this;
    }
    QuadExt& operator-=(const QuadExt& o) { return *this += -o; }
    QuadExt& operator*=(const QuadExt& o) {
        long long d = joint_radicand(o);
        Rat na = a_ * o.a_ + b_ * o.b_ * Rat(d);
        Rat nb = a_ * o.b_ + b_ * o.a_;
        a_ = na;
        b_ = nb;
        d_ = d;
        normalize();
        return *this;
    }
    QuadExt& operator/=(const QuadExt& o) {
        if (o.is_zero()) throw error(errc::division_by_zero, "division by zero scalar");
        QuadExt inv = o.conj();
        Rat n = o.norm();
        inv.a_ /= n;
        inv.b_ /= n;
        return *this *= inv;
    }

    friend QuadExt operator+(QuadExt a, const QuadExt& b) { a += b; return a; }
    friend QuadExt operator-(QuadExt a, const QuadExt& b) { a -= b; return a; }
    friend QuadExt operator*(QuadExt a, const QuadExt& b) { a *= b; return a; }
    friend QuadExt operator/(QuadExt a, const QuadExt& b) { a /= b; return a; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        if (x.a_ != y.a_ || x.b_ != y.b_) return false;
        return x.b_.is_zero() || x.d_ == y.d_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    QuadExt inverse() const {
        QuadExt r(1);
        r /= *this;
        return r;
    }

    // Square root inside the same field, when it exists: solves
    // (x + y*sqrt(d))^2 = *this exactly.
    std::optional<QuadExt> sqrt_in_field() const {
        if (sign() < 0) return std::nullopt;
        if (is_zero()) return QuadExt();
        if (b_.is_zero()) {
            Rat r;
            if (rat_is_square(a_, &r)) return QuadExt(r);
            if (d_ != 0) {
                // a = y^2 * d?
                Rat q = a_ / Rat(d_);
                if (rat_is_square(q, &r)) return QuadExt(Rat(0), r, d_);
            }
            return std::nullopt;
        }
        Rat n = norm();
        Rat s;
        if (!rat_is_square(n, &s)) return std::nullopt;
        if (s.sign() < 0) s = -s;
        // x^2 = (a ± s)/2 must be a rational square.
        for (int pick = 0; pick < 2; ++pick) {
            Rat half = (pick == 0 ? a_ + s : a_ - s) / Rat(2);
            Rat x;
            if (half.sign() > 0 && rat_is_square(half, &x)) {
                Rat y = b_ / (Rat(2) * x);
                QuadExt cand(x, y, d_);
                if ((cand * cand) == *this && cand.sign() > 0) return cand;
                cand = -cand;
                if ((cand * cand) == *this && cand.sign() > 0) return cand;
            }
        }
        return std::nullopt;
    }

    double to_double() const {
        double v = a_.to_double();
        if (!b_.is_zero()) v += b_.to_double() * std::sqrt(static_cast<double>(d_));
        return v;
    }

    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string rad = "sqrt(" + std::to_string(d_) + ")";
        std::string tail = b_.is_one() ? rad : (b_ == Rat(-1) ? "-" + rad : b_.str() + "*" + rad);
        if (a_.is_zero()) return tail;
        if (tail[0] == '-') return a_.str() + tail;
        return a_.str() + "+" + tail;
    }

  private:
    void normalize() {
        if (b_.is_zero()) d_ = 0;
    }

    long long joint_radicand(const QuadExt& o) const {
        if (d_ == 0) return o.d_;
        if (o.d_ == 0) return d_;
        if (d_ != o.d_)
            throw error(errc::mixed_radicand,
                        "cannot mix sqrt(" + std::to_string(d_) + ") with sqrt(" +
                            std::to_string(o.d_) + ")");
        return d_;
    }

    Rat a_, b_;
    long long d_;
};

// Total order on QuadExt values (as real numbers).
inline bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
inline bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }
inline bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
inline bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() >= 0; }

// K(i) built over a real scalar field K; used for conjugate-pair bookkeeping
// in the logarithmic part.
template <class K>
class ComplexK {
  public:
    ComplexK() : re_(0), im_(0) {}
    ComplexK(long n) : re_(n), im_(0) {}
    ComplexK(const K& re) : re_(re), im_(0) {}
    ComplexK(K re, K im) : re_(std::move(re)), im_(std::move(im)) {}

    const K& re() const { return re_; }
    const K& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return im_.is_zero() && re_.is_one(); }

    ComplexK conj() const { return ComplexK(re_, -im_); }

    ComplexK operator-() const { return ComplexK(-re_, -im_); }
    ComplexK& operator+=(const ComplexK& o) { re_ += o.re_; im_ += o.im_; return *this; }
    ComplexK& operator-=(const ComplexK& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    ComplexK& operator*=(const ComplexK& o) {
        K r = re_ * o.re_ - im_ * o.im_;
        K i = re_ * o.im_ + im_ * o.re_;
        re_ = r;
        im_ = i;
        return *this;
    }
    ComplexK& operator/=(const ComplexK& o) {
        if (o.is_zero()) throw error(errc::division_by_zero, "complex division by zero");
        K n = o.re_ * o.re_ + o.im_ * o.im_;
        ComplexK t = *this * o.conj();
        re_ = t.re_ / n;
        im_ = t.im_ / n;
        return *this;
    }

    friend ComplexK operator+(ComplexK a, const ComplexK& b) { a += b; return a; }
    friend ComplexK operator-(ComplexK a, const ComplexK& b) { a -= b; return a; }
    friend ComplexK operator*(ComplexK a, const ComplexK& b) { a *= b; return a; }
    friend ComplexK operator/(ComplexK a, const ComplexK& b) { a /= b; return a; }
    friend bool operator==(const ComplexK& a, const ComplexK& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const ComplexK& a, const ComplexK& b) { return !(a == b); }

    ComplexK inverse() const {
        ComplexK r(K(1));
        r /= *this;
        return r;
    }

    std::string str() const {
        if (im_.is_zero()) return re_.str();
        std::string t = im_.str() + "*i";
        if (re_.is_zero()) return t;
        if (t[0] == '-') return re_.str() + t;
        return re_.str() + "+" + t;
    }

  private:
    K re_, im_;
};

}  // namespace ratint
