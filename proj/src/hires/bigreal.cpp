#include "seqfree/hires/bigreal.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "seqfree/error.hpp"

namespace seqfree::hires {

namespace {

constexpr mpfr_rnd_t RND = MPFR_RNDN;

mpfr_prec_t wider(const BigReal& a, const BigReal& b) { return std::max(a.precision(), b.precision()); }

template <class F>
BigReal unary(const BigReal& x, F f) {
  BigReal r(x.precision());
  f(r.get(), x.get(), RND);
  return r;
}

}  // namespace

BigReal::BigReal(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long value, mpfr_prec_t bits) : BigReal(bits) { mpfr_set_si(v_, value, RND); }

BigReal::BigReal(double value, mpfr_prec_t bits) : BigReal(bits) { mpfr_set_d(v_, value, RND); }

BigReal::BigReal(const exact::Rational& value, mpfr_prec_t bits) : BigReal(bits) {
  mpfr_set_q(v_, value.get_mpq_t(), RND);
}

BigReal BigReal::parse(const std::string& text, mpfr_prec_t bits) {
  // Go through Rational so that "0.1" is rounded once, at the target precision.
  return BigReal(exact::parse_rational(text), bits);
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, RND);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(v_, other.precision());
  mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, RND);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::with_precision(mpfr_prec_t bits) const {
  BigReal r(bits);
  mpfr_set(r.v_, v_, RND);
  return r;
}

long BigReal::exponent2() const {
  if (!mpfr_regular_p(v_)) return std::numeric_limits<long>::min() / 2;
  return mpfr_get_exp(v_);
}

BigReal BigReal::operator-() const { return unary(*this, mpfr_neg); }

// Widening the left operand first keeps the result at the larger precision.
#define SEQFREE_COMPOUND(op, fn)                                          \
  BigReal& BigReal::operator op(const BigReal& o) {                      \
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), RND); \
    fn(v_, v_, o.v_, RND);                                                \
    return *this;                                                         \
  }
SEQFREE_COMPOUND(+=, mpfr_add)
SEQFREE_COMPOUND(-=, mpfr_sub)
SEQFREE_COMPOUND(*=, mpfr_mul)
SEQFREE_COMPOUND(/=, mpfr_div)
#undef SEQFREE_COMPOUND

BigReal& BigReal::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, RND);
  return *this;
}

BigReal& BigReal::operator/=(long o) {
  mpfr_div_si(v_, v_, o, RND);
  return *this;
}

BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
BigReal operator*(BigReal a, long b) { return a *= b; }
BigReal operator/(BigReal a, long b) { return a /= b; }

BigReal operator+(BigReal a, long b) {
  mpfr_add_si(a.get(), a.get(), b, RND);
  return a;
}

BigReal operator-(BigReal a, long b) {
  mpfr_sub_si(a.get(), a.get(), b, RND);
  return a;
}

BigReal operator-(long a, const BigReal& b) {
  BigReal r(b.precision());
  mpfr_si_sub(r.get(), a, b.get(), RND);
  return r;
}

BigReal operator*(long a, BigReal b) { return b *= a; }

bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.get(), b.get())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.get(), b.get());
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

bool operator==(const BigReal& a, long b) { return a.is_finite() && mpfr_cmp_si(a.get(), b) == 0; }

std::partial_ordering operator<=>(const BigReal& a, long b) {
  if (mpfr_nan_p(a.get())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.get(), b);
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }
BigReal sqrt(const BigReal& x) { return unary(x, mpfr_sqrt); }
BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }
BigReal expm1(const BigReal& x) { return unary(x, mpfr_expm1); }
BigReal log(const BigReal& x) { return unary(x, mpfr_log); }
BigReal log1p(const BigReal& x) { return unary(x, mpfr_log1p); }
BigReal sin(const BigReal& x) { return unary(x, mpfr_sin); }
BigReal cos(const BigReal& x) { return unary(x, mpfr_cos); }
BigReal gamma(const BigReal& x) { return unary(x, mpfr_gamma); }

BigReal rgamma(const BigReal& x) {
  if (x.is_integer() && x <= 0L) return BigReal(x.precision());
  BigReal r = gamma(x);
  mpfr_ui_div(r.get(), 1, r.get(), RND);
  return r;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r(wider(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), RND);
  return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal r(wider(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), RND);
  return r;
}

BigReal pow(const BigReal& x, long n) {
  BigReal r(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, RND);
  return r;
}

BigReal pi(mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_const_pi(r.get(), RND);
  return r;
}

BigReal ldexp(const BigReal& x, long e) {
  BigReal r(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, RND);
  return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

int reliable_digits(mpfr_prec_t bits) {
  return static_cast<int>(std::floor(static_cast<double>(bits) * std::log10(2.0)));
}

std::string to_decimal(const BigReal& x, int digits) {
  if (digits <= 0) digits = reliable_digits(x.precision());
  if (mpfr_nan_p(x.get())) return "nan";
  if (mpfr_inf_p(x.get())) return x.sign() > 0 ? "inf" : "-inf";
  const int n = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, x.get());
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, x.get());
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

}  // namespace seqfree::hires
