#include "seqfree/wright/wright.hpp"

#include <cmath>
#include <vector>

#include "seqfree/error.hpp"

namespace seqfree::wright {

using exact::Rational;

namespace {

// log |1/Gamma(x)| bounded above: for x <= 0 the reflection formula gives
// |1/Gamma(x)| = |sin(pi x)| Gamma(1-x) / pi <= Gamma(1-x) / pi.
double log_rgamma_envelope(double x) {
  if (x > 0) return -std::lgamma(x);
  return std::lgamma(1 - x) - std::log(M_PI);
}

struct SummationPlan {
  long terms;            // sum n = 0 .. terms-1
  mpfr_prec_t extra_bits;  // cancellation allowance
};

// Scans log-magnitudes of the terms in double precision to find the peak
// and the point past which the envelope has dropped 2^-bits below an O(1)
// result.
SummationPlan plan_summation(unsigned j, const WrightParams& p, double log_abs_z, mpfr_prec_t bits,
                             long max_terms) {
  const double rho = p.rho.get_d(), beta = p.beta.get_d();
  const double drop = (static_cast<double>(bits) + 40) * M_LN2;
  double peak = 0;
  long below = 0;
  for (long n = 0;; ++n) {
    if (n >= max_terms) throw Error(ErrorCode::TermCapExceeded, "wright_phi: more than max_terms terms");
    if (n > 0 && log_abs_z == -INFINITY) return {1, 0};
    double t = n == 0 ? 0.0 : n * log_abs_z - std::lgamma(n + 1.0);
    t += log_rgamma_envelope(beta - rho * n);
    if (j > 0) t += n == 0 ? -INFINITY : j * std::log(static_cast<double>(n));
    if (t > peak) peak = t;
    // Past the saddle the envelope decreases monotonically; require a run
    // of small terms so a local dip is not mistaken for the tail.
    below = t < -drop ? below + 1 : 0;
    if (below > 8 && n > 2) {
      return {n + 1, static_cast<mpfr_prec_t>(std::ceil(std::max(peak, 0.0) / M_LN2)) + 32};
    }
  }
}

// 1/Gamma(beta - rho n) for n = 0, 1, ... with rho = a/d: within a residue
// class n = c mod d the argument moves by -a, and 1/Gamma(x - a) equals
// (x-1)(x-2)...(x-a) / Gamma(x). Arguments that are non-positive integers
// produce exact zeros through a vanishing factor.
class ReciprocalGammaSequence {
 public:
  ReciprocalGammaSequence(const WrightParams& p, mpfr_prec_t bits)
      : a_(p.rho.get_num().get_si()), d_(p.rho.get_den().get_si()) {
    for (long c = 0; c < d_; ++c) {
      const Rational x = p.beta - p.rho * c;
      args_.emplace_back(x, bits);
      values_.push_back(hires::rgamma(args_.back()));
    }
  }

  // Value for the next n; call with n = 0, 1, 2, ... in order.
  BigReal next(long n) {
    const auto c = static_cast<std::size_t>(n % d_);
    if (n >= d_) advance(c);
    return values_[c];
  }

 private:
  void advance(std::size_t c) {
    BigReal& x = args_[c];
    BigReal& v = values_[c];
    if (a_ > 0) {
      for (long i = 1; i <= a_; ++i) v *= x - i;
      x = x - a_;
    } else if (a_ < 0) {
      for (long i = 0; i < -a_; ++i) v /= x + i;
      x = x - a_;
    }
  }

  long a_, d_;
  std::vector<BigReal> args_, values_;
};

void check_rho(const Rational& rho) {
  if (rho >= 1 || rho <= -1)
    throw Error(ErrorCode::NonConvergent, "wright_phi needs -1 < rho < 1, got " + exact::to_string(rho));
}

BigReal sin_pi_rational(const Rational& r, mpfr_prec_t bits) {
  if (r.get_den() == 1) return BigReal(bits);
  return hires::sin(hires::pi(bits) * BigReal(r, bits));
}

// Moments 0..jmax in one pass. z is produced by make_z at the working
// precision: under heavy cancellation the argument must carry the extra bits.
template <class MakeZ>
std::vector<BigComplex> phi_moments_impl(unsigned jmax, const WrightParams& p, double abs_z, MakeZ make_z,
                                         const EvalConfig& cfg) {
  cfg.validate();
  check_rho(p.rho);
  const SummationPlan plan =
      plan_summation(jmax, p, abs_z > 0 ? std::log(abs_z) : -INFINITY, cfg.working().precision_bits, cfg.max_terms);
  const EvalConfig w = cfg.working().widened(plan.extra_bits);
  const mpfr_prec_t bits = w.precision_bits;
  const BigComplex zw = make_z(bits);
  ReciprocalGammaSequence rg(p, bits);
  BigComplex power(BigReal(1L, bits));  // z^n / n!
  std::vector<BigComplex> sums(jmax + 1, BigComplex(bits));
  for (long n = 0; n < plan.terms; ++n) {
    if (n > 0) {
      power *= zw;
      power.re /= n;
      power.im /= n;
    }
    const BigReal coeff = rg.next(n);
    if (coeff.is_zero()) continue;
    BigComplex t = power * coeff;
    sums[0] += t;
    for (unsigned j = 1; j <= jmax; ++j) {
      t.re *= n;
      t.im *= n;
      sums[j] += t;
    }
  }
  for (auto& v : sums) v = BigComplex(v.re.with_precision(cfg.precision_bits), v.im.with_precision(cfg.precision_bits));
  return sums;
}

}  // namespace

BigComplex wright_phi_moment(unsigned j, const WrightParams& p, const BigComplex& z, const EvalConfig& cfg) {
  auto make_z = [&](mpfr_prec_t bits) { return BigComplex(z.re.with_precision(bits), z.im.with_precision(bits)); };
  return phi_moments_impl(j, p, hires::abs(z).to_double(), make_z, cfg).back();
}

BigComplex wright_phi(const WrightParams& p, const BigComplex& z, const EvalConfig& cfg) {
  return wright_phi_moment(0, p, z, cfg);
}

std::vector<BigReal> W_j_nums(int k, unsigned jmax, const BigReal& w, const EvalConfig& cfg) {
  require_valid_k(k);
  if (!(w > 0L)) throw Error(ErrorCode::InvalidArgument, "W_j needs w > 0");
  const Rational rho = exact::make_rational(k, k + 1);
  auto make_z = [&](mpfr_prec_t bits) {
    return hires::expi(-(hires::pi(bits) * BigReal(rho, bits))) * w.with_precision(bits);
  };
  std::vector<BigReal> out;
  for (const auto& m : phi_moments_impl(jmax, {rho, 1}, w.to_double(), make_z, cfg)) out.push_back(m.re * 2L);
  return out;
}

BigReal W_j_num(int k, unsigned j, const BigReal& w, const EvalConfig& cfg) { return W_j_nums(k, j, w, cfg).back(); }

BigReal b_k_coeff(int k, int j, const EvalConfig& cfg) {
  require_valid_k(k);
  if (j < 1) throw Error(ErrorCode::InvalidArgument, "b_k(j) needs j >= 1");
  const mpfr_prec_t bits = cfg.working().precision_bits;
  if (j % k == 0) return BigReal(cfg.precision_bits);
  const BigReal sine = sin_pi_rational(exact::make_rational(static_cast<long>(j) * (k - 1), k), bits);
  BigReal v = BigReal(exact::make_rational(k + 1, k), bits) / hires::pi(bits) /
              BigReal(Rational(exact::factorial(static_cast<unsigned>(j))), bits) * sine *
              hires::gamma(BigReal(exact::make_rational(static_cast<long>(j) * (k + 1), k), bits));
  if (j % 2 == 0) v = -v;
  return v.with_precision(cfg.precision_bits);
}

BigReal re_phi_expansion(const Rational& rho, const BigReal& z, int L, const EvalConfig& cfg) {
  if (rho < Rational(1, 2) || rho >= 1)
    throw Error(ErrorCode::InvalidRho, "expansion needs 1/2 <= rho < 1, got " + exact::to_string(rho));
  if (L < 1) throw Error(ErrorCode::InvalidArgument, "L must be >= 1");
  if (!(z > 0L)) throw Error(ErrorCode::InvalidArgument, "expansion needs z > 0");
  const mpfr_prec_t bits = cfg.working().precision_bits;
  const BigReal zw = z.with_precision(bits), p = hires::pi(bits);
  BigReal sum(Rational(1 / (2 * rho)), bits);
  for (int l = 1; l < L; ++l) {
    const BigReal sine = sin_pi_rational(Rational(l * (2 * rho - 1) / rho), bits);
    if (sine.is_zero()) continue;
    const Rational e = Rational(l / rho);
    BigReal t = hires::gamma(BigReal(e, bits)) * hires::pow(zw, -BigReal(e, bits)) * sine /
                BigReal(Rational(exact::factorial(static_cast<unsigned>(l))), bits);
    if (l % 2 == 0) t = -t;
    sum += t / (p * BigReal(Rational(2 * rho), bits));
  }
  return sum.with_precision(cfg.precision_bits);
}

Rational re_phi_remainder_exponent(const Rational& rho, int L) { return Rational(L / rho); }

BigReal Wj_expansion(int k, unsigned j, int L, const BigReal& w, const EvalConfig& cfg) {
  require_valid_k(k);
  if (L < 1) throw Error(ErrorCode::InvalidArgument, "L must be >= 1");
  if (!(w > 0L)) throw Error(ErrorCode::InvalidArgument, "expansion needs w > 0");
  const mpfr_prec_t bits = cfg.working().precision_bits;
  const BigReal ww = w.with_precision(bits);
  BigReal sum = j == 0 ? BigReal(exact::make_rational(k + 1, k), bits) : BigReal(bits);
  const EvalConfig inner = cfg.working();
  for (int l = 1; l < L; ++l) {
    const BigReal b = b_k_coeff(k, l, inner);
    if (b.is_zero()) continue;
    const Rational e = exact::make_rational(static_cast<long>(l) * (k + 1), k);
    const BigReal weight(Rational(exact::pow(Rational(-e), j)), bits);
    sum += weight * b * hires::pow(ww, -BigReal(e, bits));
  }
  return sum.with_precision(cfg.precision_bits);
}

BigReal W0_expansion(int k, int L, const BigReal& w, const EvalConfig& cfg) { return Wj_expansion(k, 0, L, w, cfg); }

Rational Wj_remainder_exponent(int k, int L) { return exact::make_rational(static_cast<long>(L) * (k + 1), k); }

}  // namespace seqfree::wright
