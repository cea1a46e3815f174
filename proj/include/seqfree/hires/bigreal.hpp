#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

#include "seqfree/exact/rational.hpp"

namespace seqfree::hires {

/// MPFR value that owns its own bit precision. Binary operations round to
/// the larger precision of the operands.
class BigReal {
 public:
  explicit BigReal(mpfr_prec_t bits = 64);
  BigReal(long value, mpfr_prec_t bits);
  BigReal(int value, mpfr_prec_t bits) : BigReal(static_cast<long>(value), bits) {}
  BigReal(double value, mpfr_prec_t bits);
  BigReal(const exact::Rational& value, mpfr_prec_t bits);
  // Decimal or "p/q"; throws InvalidArgument on malformed input.
  static BigReal parse(const std::string& text, mpfr_prec_t bits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  BigReal with_precision(mpfr_prec_t bits) const;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Base-2 exponent e with |x| in [2^{e-1}, 2^e); very negative for zero.
  long exponent2() const;
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }

  BigReal operator-() const;
  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);
  BigReal& operator*=(long o);
  BigReal& operator/=(long o);

 private:
  mpfr_t v_;
};

BigReal operator+(BigReal a, const BigReal& b);
BigReal operator-(BigReal a, const BigReal& b);
BigReal operator*(BigReal a, const BigReal& b);
BigReal operator/(BigReal a, const BigReal& b);
BigReal operator*(BigReal a, long b);
BigReal operator/(BigReal a, long b);
BigReal operator+(BigReal a, long b);
BigReal operator-(BigReal a, long b);
BigReal operator-(long a, const BigReal& b);
BigReal operator*(long a, BigReal b);

bool operator==(const BigReal& a, const BigReal& b);
std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
bool operator==(const BigReal& a, long b);
std::partial_ordering operator<=>(const BigReal& a, long b);

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal expm1(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log1p(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal pow(const BigReal& x, long n);
BigReal gamma(const BigReal& x);
// 1/Gamma(x), exactly zero at non-positive integers.
BigReal rgamma(const BigReal& x);
BigReal pi(mpfr_prec_t bits);
// x * 2^e
BigReal ldexp(const BigReal& x, long e);
BigReal max(const BigReal& a, const BigReal& b);

/// Decimal digits carried reliably by a value of the given precision.
int reliable_digits(mpfr_prec_t bits);
/// Scientific notation with the given number of significant digits
/// (default: reliable_digits of the value's precision).
std::string to_decimal(const BigReal& x, int digits = 0);

}  // namespace seqfree::hires
