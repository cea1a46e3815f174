#include "seqfree/hires/qfunctions.hpp"

#include <cmath>

#include "seqfree/error.hpp"
#include "seqfree/exact/bernoulli.hpp"

namespace seqfree::hires {

namespace {

void require_unit_interval(const BigReal& q) {
  if (!(q < 1L)) throw Error(ErrorCode::NonConvergent, "q must be < 1, got " + to_decimal(q, 10));
  if (!(q > 0L)) throw Error(ErrorCode::InvalidArgument, "q must be > 0, got " + to_decimal(q, 10));
}

void require_positive_s(const BigReal& s) {
  if (!(s > 0L)) throw Error(ErrorCode::InvalidArgument, "s must be > 0, got " + to_decimal(s, 10));
}

void count_term(long& n, const EvalConfig& cfg, const char* what) {
  if (++n > cfg.max_terms) throw Error(ErrorCode::TermCapExceeded, std::string(what) + ": more than max_terms terms");
}

// Product stops once |z q^m| / (1 - q) < tail, which bounds the dropped
// factors' total distance from 1 up to a factor close to 1.
template <class T>
T pochhammer_work(const T& z, const BigReal& q, const EvalConfig& w) {
  const mpfr_prec_t bits = w.precision_bits;
  const BigReal one_minus_q = 1L - BigReal(q).with_precision(bits);
  T zq = z;
  T prod = T(BigReal(1L, bits));
  long n = 0;
  while (!(abs(zq) < w.tail_threshold * one_minus_q)) {
    count_term(n, w, "pochhammer");
    prod *= T(BigReal(1L, bits)) - zq;
    if (prod.is_zero()) return prod;
    zq *= q;
  }
  return prod;
}

BigComplex round_to(const BigComplex& z, mpfr_prec_t bits) {
  return {z.re.with_precision(bits), z.im.with_precision(bits)};
}

BigComplex qsubz_work(const BigComplex& x, const BigReal& q, const EvalConfig& w) {
  if (x.is_real() && x.re.is_integer() && x.re <= -1L)
    throw Error(ErrorCode::PoleAtNonpositive, "(q;q)_x has a pole at x = " + to_decimal(x.re, 10));
  const mpfr_prec_t bits = w.precision_bits;
  const BigReal qw = q.with_precision(bits);
  const BigComplex shift = x + BigComplex(BigReal(1L, bits));
  const BigComplex z = exp(shift * log(qw));
  return BigComplex(pochhammer_work(qw, qw, w)) / pochhammer_work(z, qw, w);
}

// Bits lost to cancellation when a direct theta sum evaluates to about
// e^{-pi^2 d^2 / (4S)}, d being the distance of 2x to the nearest odd integer.
mpfr_prec_t direct_cancellation_bits(double two_x, double S) {
  const double r = std::fmod(std::fabs(two_x), 2.0);
  const double d = std::fabs(r - 1.0);
  const double loss = (M_PI * M_PI * d * d / (4.0 * S) + 0.5 * std::log(M_PI / S)) / M_LN2;
  return loss > 0 ? static_cast<mpfr_prec_t>(std::ceil(loss)) : 0;
}

}  // namespace

BigComplex pochhammer_num(const BigComplex& z, const BigReal& q, const EvalConfig& cfg) {
  cfg.validate();
  require_unit_interval(q);
  const EvalConfig w = cfg.working();
  BigComplex zw = round_to(z, w.precision_bits);
  return round_to(pochhammer_work(zw, q, w), cfg.precision_bits);
}

BigReal pochhammer_num(const BigReal& z, const BigReal& q, const EvalConfig& cfg) {
  cfg.validate();
  require_unit_interval(q);
  const EvalConfig w = cfg.working();
  return pochhammer_work(z.with_precision(w.precision_bits), q, w).with_precision(cfg.precision_bits);
}

BigComplex qsubz_num(const BigComplex& x, const BigReal& q, const EvalConfig& cfg) {
  cfg.validate();
  require_unit_interval(q);
  return round_to(qsubz_work(x, q, cfg.working()), cfg.precision_bits);
}

BigComplex gamma_q_num(const BigComplex& x, const BigReal& q, const EvalConfig& cfg) {
  cfg.validate();
  require_unit_interval(q);
  const EvalConfig w = cfg.working();
  const BigReal one(1L, w.precision_bits);
  const BigComplex xm1 = x - BigComplex(one);
  const BigComplex power = pow(BigComplex(one - q.with_precision(w.precision_bits)), BigComplex(one) - x);
  return round_to(qsubz_work(xm1, q, w) * power, cfg.precision_bits);
}

BigReal theta_num(const BigReal& u, const BigReal& s, const EvalConfig& cfg, ThetaMode mode) {
  cfg.validate();
  require_positive_s(s);
  if (mode == ThetaMode::automatic) mode = s < 1L ? ThetaMode::inverted : ThetaMode::direct;
  if (mode == ThetaMode::direct) {
    const EvalConfig w = cfg.working().widened(direct_cancellation_bits(2 * u.to_double(), s.to_double()));
    const mpfr_prec_t bits = w.precision_bits;
    const BigReal sw = s.with_precision(bits), uw = u.with_precision(bits);
    const BigReal two_pi_u = pi(bits) * uw * 2L;
    BigReal sum(1L, bits);
    long count = 0;
    for (long n = 1;; ++n) {
      count_term(count, w, "theta_num");
      const BigReal g = exp(-(sw * (n * n)));
      if (g < w.tail_threshold) break;
      BigReal t = cos(two_pi_u * n) * g * 2L;
      if (n % 2) sum -= t; else sum += t;
    }
    return sum.with_precision(cfg.precision_bits);
  }
  const EvalConfig w = cfg.working();
  const mpfr_prec_t bits = w.precision_bits;
  const BigReal sw = s.with_precision(bits), uw = u.with_precision(bits);
  const BigReal pi2 = pi(bits) * pi(bits);
  auto term = [&](long n) {
    const BigReal d = uw * 2L + n;
    return exp(-(pi2 * d * d) / (sw * 4L));
  };
  // Odd n closest to -2u, then walk outwards in both directions.
  long c = std::lround(-2.0 * u.to_double());
  if (c % 2 == 0) ++c;
  BigReal sum(bits);
  long count = 0;
  for (long dir : {1L, -1L}) {
    for (long n = dir > 0 ? c : c - 2;; n += 2 * dir) {
      count_term(count, w, "theta_num");
      const BigReal t = term(n);
      sum += t;
      if (t < w.tail_threshold * sum) break;
    }
  }
  return (sqrt(pi(bits) / sw) * sum).with_precision(cfg.precision_bits);
}

BigReal shifted_theta_num(const BigReal& x, const BigReal& S, const EvalConfig& cfg, ThetaMode mode) {
  cfg.validate();
  require_positive_s(S);
  if (mode == ThetaMode::automatic) mode = S < 1L ? ThetaMode::inverted : ThetaMode::direct;
  if (mode == ThetaMode::direct) {
    const EvalConfig w = cfg.working().widened(direct_cancellation_bits(2 * x.to_double() + 1, S.to_double()));
    const mpfr_prec_t bits = w.precision_bits;
    const BigReal Sw = S.with_precision(bits), xw = x.with_precision(bits);
    const long c = std::lround(-x.to_double());
    BigReal sum(bits);
    long count = 0;
    for (long dir : {1L, -1L}) {
      for (long n = dir > 0 ? c : c - 1;; n += dir) {
        count_term(count, w, "shifted_theta_num");
        const BigReal d = xw + n;
        const BigReal t = exp(-(Sw * d * d));
        if (n % 2) sum -= t; else sum += t;
        if (t < w.tail_threshold) break;
      }
    }
    return sum.with_precision(cfg.precision_bits);
  }
  const EvalConfig w = cfg.working();
  const mpfr_prec_t bits = w.precision_bits;
  const BigReal Sw = S.with_precision(bits), xw = x.with_precision(bits);
  const BigReal p = pi(bits);
  BigReal sum(bits);
  long count = 0;
  for (long n = 1;; n += 2) {
    count_term(count, w, "shifted_theta_num");
    const BigReal g = exp(-(p * p * (n * n)) / (Sw * 4L));
    sum += g * cos(p * xw * n) * 2L;
    if (g < w.tail_threshold) break;
  }
  return (sqrt(p / Sw) * sum).with_precision(cfg.precision_bits);
}

BigReal eta_transformed_num(const BigReal& s, const EvalConfig& cfg) {
  cfg.validate();
  require_positive_s(s);
  const EvalConfig w = cfg.working();
  const mpfr_prec_t bits = w.precision_bits;
  const BigReal sw = s.with_precision(bits), p = pi(bits);
  const BigReal qhat = exp(-(p * p * 4L) / sw);
  const BigReal prefactor = sqrt(p * 2L / sw) * exp(sw / 24L - p * p / (sw * 6L));
  return (prefactor * pochhammer_work(qhat, qhat, w)).with_precision(cfg.precision_bits);
}

BigReal mcintosh_lhs(const exact::Rational& x, const BigReal& s, const EvalConfig& cfg) {
  cfg.validate();
  require_positive_s(s);
  const EvalConfig w = cfg.working();
  const mpfr_prec_t bits = w.precision_bits;
  const BigReal sw = s.with_precision(bits), xw(x, bits);
  const BigReal q = exp(-sw);
  const BigReal gq = qsubz_work(BigComplex(xw - 1L), q, w).re * pow(1L - q, 1L - xw);
  const BigReal xx(exact::Rational(x * (x - 1) / 2), bits);
  const BigReal v = gamma(xw) / gq * pow((1L - q) / sw, 1L - xw) * exp(-(sw * xx));
  return v.with_precision(cfg.precision_bits);
}

BigReal mcintosh_rhs(const exact::Rational& x, const BigReal& s, int N, const EvalConfig& cfg) {
  cfg.validate();
  require_positive_s(s);
  const mpfr_prec_t bits = cfg.working().precision_bits;
  const BigReal sw = s.with_precision(bits);
  BigReal sum(bits);
  for (int j = 1; j <= N; ++j) {
    const unsigned m = static_cast<unsigned>(2 * j);
    const exact::Rational c = exact::bernoulli_number(m) * exact::bernoulli_polynomial(m + 1)(x) /
                              (exact::Rational(m) * exact::factorial(m + 1));
    sum += BigReal(c, bits) * pow(sw, static_cast<long>(m));
  }
  const BigReal xx(exact::Rational(x * (x - 1) / 4), bits);
  return exp(-(sw * xx) - sum).with_precision(cfg.precision_bits);
}

}  // namespace seqfree::hires
