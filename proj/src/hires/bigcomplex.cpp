#include "seqfree/hires/bigcomplex.hpp"

namespace seqfree::hires {

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigReal r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  const BigReal d = o.re * o.re + o.im * o.im;
  BigReal r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigReal& o) {
  re *= o;
  im *= o;
  return *this;
}

BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
BigComplex operator*(BigComplex a, const BigReal& b) { return a *= b; }

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigReal abs(const BigComplex& z) {
  BigReal r(z.precision());
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

BigReal arg(const BigComplex& z) { return atan2(z.im, z.re); }

BigComplex expi(const BigReal& theta) {
  BigComplex r(theta.precision());
  mpfr_sin_cos(r.im.get(), r.re.get(), theta.get(), MPFR_RNDN);
  return r;
}

BigComplex exp(const BigComplex& z) {
  if (z.is_real()) return BigComplex(exp(z.re));
  return expi(z.im) * exp(z.re);
}

BigComplex log(const BigComplex& z) { return {log(abs(z)), arg(z)}; }

BigComplex pow(const BigComplex& z, const BigComplex& w) {
  if (z.is_zero()) return BigComplex(z.precision());
  if (z.is_real() && w.is_real() && z.re > 0L) return BigComplex(pow(z.re, w.re));
  return exp(w * log(z));
}

}  // namespace seqfree::hires
