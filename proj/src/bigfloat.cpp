#include "ratint/bigfloat.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace ratint {

BigFloat::BigFloat(long prec_bits) { mpfr_init2(v_, std::max(prec_bits, 8L)); mpfr_set_zero(v_, 1); }

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(BigFloat o) {
    mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

long BigFloat::bits_for_digits(int digits) {
    return static_cast<long>(digits * 3.3219280948873626) + 32;
}

BigFloat BigFloat::from_long(long v, long bits) {
    BigFloat r(bits);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_double(double v, long bits) {
    BigFloat r(bits);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_rat(const Rat& v, long bits) {
    BigFloat r(bits);
    mpfr_set_q(r.v_, v.value().get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_quadext(const QuadExt& v, long bits) {
    BigFloat a = from_rat(v.rat_part(), bits);
    if (v.rad_coeff().is_zero()) return a;
    BigFloat rad(bits);
    mpfr_sqrt_ui(rad.v_, static_cast<unsigned long>(v.radicand()), MPFR_RNDN);
    return a + from_rat(v.rad_coeff(), bits) * rad;
}

BigFloat BigFloat::pi(long bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow10(long k, long bits) {
    BigFloat r(bits);
    mpfr_set_si(r.v_, 10, MPFR_RNDN);
    mpfr_pow_si(r.v_, r.v_, k, MPFR_RNDN);
    return r;
}

long BigFloat::precision() const { return mpfr_get_prec(v_); }

namespace {
long joint(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat BigFloat::operator-() const {
    BigFloat r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(joint(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(joint(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(joint(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    if (b.is_zero()) throw error(errc::division_by_zero, "big-float division by zero");
    BigFloat r(joint(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(*this);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::atan() const {
    BigFloat r(precision());
    mpfr_atan(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::log() const {
    if (sign() <= 0) throw error(errc::domain_error, "log of a non-positive value");
    BigFloat r(precision());
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sin() const {
    BigFloat r(precision());
    mpfr_sin(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::cos() const {
    BigFloat r(precision());
    mpfr_cos(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt() const {
    if (sign() < 0) throw error(errc::domain_error, "sqrt of a negative value");
    BigFloat r(precision());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow_si(long e) const {
    BigFloat r(precision());
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    return r;
}

int BigFloat::sign() const { return mpfr_sgn(v_); }

bool BigFloat::is_zero() const { return mpfr_zero_p(v_); }

int BigFloat::cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }

double BigFloat::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string BigFloat::str(int digits) const {
    if (digits < 1) digits = 1;
    char* out = nullptr;
    mpfr_asprintf(&out, "%.*R*g", digits, MPFR_RNDN, v_);
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

}  // namespace ratint
