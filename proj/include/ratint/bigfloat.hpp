#pragma once

#include <mpfr.h>

#include <string>

#include "ratint/quadext.hpp"

namespace ratint {

// Arbitrary-precision float with explicit per-value precision. Precision is
// always a parameter, never ambient state; binary operations compute at the
// wider of the two operand precisions.
class BigFloat {
  public:
    explicit BigFloat(long prec_bits = 64);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(BigFloat o);
    ~BigFloat();

    static long bits_for_digits(int digits);

    static BigFloat from_long(long v, long bits);
    static BigFloat from_double(double v, long bits);
    static BigFloat from_rat(const Rat& v, long bits);
    static BigFloat from_quadext(const QuadExt& v, long bits);
    static BigFloat pi(long bits);
    // 10^k
    static BigFloat pow10(long k, long bits);

    long precision() const;

    BigFloat operator-() const;
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

    BigFloat abs() const;
    BigFloat atan() const;
    BigFloat log() const;  // natural log; argument must be positive
    BigFloat sin() const;
    BigFloat cos() const;
    BigFloat sqrt() const;
    BigFloat pow_si(long e) const;

    int sign() const;
    bool is_zero() const;
    int cmp(const BigFloat& o) const;
    bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
    bool operator<=(const BigFloat& o) const { return cmp(o) <= 0; }

    double to_double() const;
    // Correctly rounded decimal with the requested significant digits.
    std::string str(int digits) const;

  private:
    mpfr_t v_;
};

}  // namespace ratint
