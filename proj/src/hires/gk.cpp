#include "seqfree/hires/gk.hpp"

#include <cmath>
#include <vector>

#include "seqfree/error.hpp"
#include "seqfree/qseries/qseries.hpp"

namespace seqfree::hires {

namespace {

// Andrews' theta sum regrouped by m mod 2(k+1). Writing km = (k+1)a + r,
// the m-th summand of g_k (q^k;q^k)_inf equals
//   (-1)^{m+a} q^{km - r(k+1-r)/(2(k+1))} (q^r;q^{k+1})_a (q^{k+1-r};q^{k+1})_inf
//   * Theta(m/(k+1)) / (q^k;q^k)_m,
// with Theta(x) = sum_n (-1)^n e^{-S(n+x)^2}, S = k(k+1)s/2. Theta depends on
// m only through m mod 2(k+1), so the weights are accumulated per class.
struct ResidueSums {
  std::vector<BigReal> W;  // size 2(k+1)
  BigReal qk_inf;          // (q^k;q^k)_inf
  BigReal qk1_inf;         // (q^{k+1};q^{k+1})_inf
};

// Nats lost to cancellation between summands: they reach 1/(q^k;q^k)_inf
// while g_k (q^k;q^k)_inf is about e^{-pi^2 (k+3)/(6k(k+1)s)}.
double cancellation_nats(int k, double s) {
  return M_PI * M_PI * (k + 2) / (3.0 * k * (k + 1) * s) + 0.5 * std::log(1.0 / s + 1.0);
}

EvalConfig theta_sum_config(int k, const BigReal& s, const EvalConfig& cfg) {
  const double extra = cancellation_nats(k, s.to_double()) / M_LN2;
  return cfg.working().widened(static_cast<mpfr_prec_t>(std::ceil(extra)) + 16);
}

// abs_tol bounds the total weight dropped after the last m.
ResidueSums residue_sums(int k, const BigReal& s, const EvalConfig& w, const BigReal& abs_tol) {
  const mpfr_prec_t bits = w.precision_bits;
  const int K = k + 1;
  const BigReal sw = s.with_precision(bits);
  const BigReal q = exp(-sw);
  const BigReal Q = pow(q, static_cast<long>(K));
  const BigReal qk = pow(q, static_cast<long>(k));

  // P[r] = (q^r; q^{k+1})_inf for r = 1..k+1
  std::vector<BigReal> P(static_cast<std::size_t>(K) + 1, BigReal(bits));
  for (int r = 1; r <= K; ++r) P[r] = pochhammer_num(pow(q, static_cast<long>(r)), Q, w);
  ResidueSums out{std::vector<BigReal>(2 * static_cast<std::size_t>(K), BigReal(bits)), pochhammer_num(qk, qk, w),
                  P[K]};

  // Per residue r: running (q^r;q^{k+1})_len and the next factor's power.
  std::vector<BigReal> fin(K, BigReal(1L, bits)), next_pow(K, BigReal(bits));
  std::vector<long> len(K, 0);
  std::vector<BigReal> C(K, BigReal(bits));
  BigReal c_max(1L, bits);
  for (int r = 1; r < K; ++r) {
    next_pow[r] = pow(q, static_cast<long>(r));
    C[r] = exp(sw * static_cast<long>(r * (K - r)) / static_cast<long>(2 * K));
    c_max = max(c_max, C[r]);
  }

  out.W[0] = P[K];
  BigReal qkm(1L, bits);       // q^{km}
  BigReal inv_qk_m(1L, bits);  // 1 / (q^k;q^k)_m
  const BigReal bound_factor = c_max / ((1L - qk) * out.qk_inf);
  long count = 0;
  for (long m = 1;; ++m) {
    if (++count > w.max_terms) throw Error(ErrorCode::TermCapExceeded, "theta sum: more than max_terms summands");
    qkm *= qk;
    inv_qk_m /= 1L - qkm;
    const long km = static_cast<long>(k) * m;
    const int r = static_cast<int>(km % K);
    if (r != 0) {
      const long a = (km - r) / K;
      for (; len[r] < a; ++len[r]) {
        fin[r] *= 1L - next_pow[r];
        next_pow[r] *= Q;
      }
      BigReal t = qkm * C[r] * fin[r] * P[K - r] * inv_qk_m;
      if ((m + a) % 2) t = -t;
      out.W[static_cast<std::size_t>(m % (2 * K))] += t;
    }
    // Every later summand is at most c_max q^{km} / (q^k;q^k)_inf in size.
    if (qkm * qk * bound_factor < abs_tol) break;
  }
  return out;
}

BigReal theta_class(int k, int rho, const BigReal& s, const EvalConfig& w, ThetaMode mode) {
  const mpfr_prec_t bits = w.precision_bits;
  const BigReal S = s.with_precision(bits) * static_cast<long>(k * (k + 1) / 2);
  return shifted_theta_num(BigReal(exact::make_rational(rho, k + 1), bits), S, w, mode);
}

// g_k (q^k;q^k)_inf together with the products needed by the callers.
struct ThetaSum {
  BigReal value;
  ResidueSums sums;
};

ThetaSum theta_sum(int k, const BigReal& s, const EvalConfig& w, ThetaMode mode) {
  const mpfr_prec_t bits = w.precision_bits;
  const double sd = s.to_double();
  // Terms reach about 1/(q^k;q^k)_inf; the target is the leading asymptotic size.
  const double log_target = -M_PI * M_PI * (k + 3) / (6.0 * k * (k + 1) * sd);
  const BigReal abs_tol = w.tail_threshold * exp(BigReal(log_target, bits)) / 16L;
  ThetaSum out{BigReal(bits), residue_sums(k, s, w, abs_tol)};
  for (int rho = 0; rho < 2 * (k + 1); ++rho) {
    if (out.sums.W[rho].is_zero()) continue;
    out.value += out.sums.W[rho] * theta_class(k, rho, s, w, mode);
  }
  return out;
}

BigReal gk_exact_series(int k, const BigReal& s, const EvalConfig& w) {
  const mpfr_prec_t bits = w.precision_bits;
  const int N = exact_series_order(s, bits);
  const exact::FormalSeries g = qseries::gk_from_oracle(k, N);
  const BigReal q = exp(-s.with_precision(bits));
  BigReal acc(bits);
  for (int n = N; n >= 0; --n) acc = acc * q + BigReal(g.coefficient(n), bits);
  return acc;
}

void check_args(int k, const BigReal& s, const EvalConfig& cfg) {
  require_valid_k(k);
  cfg.validate();
  if (!(s > 0L)) throw Error(ErrorCode::InvalidArgument, "s must be > 0");
}

bool use_exact(GkRoute route, const BigReal& s) {
  return route == GkRoute::exact_series || (route == GkRoute::automatic && !(s < 1L));
}

}  // namespace

int exact_series_order(const BigReal& s, mpfr_prec_t bits) {
  // |coefficient n| <= (n+1) p(n) <= (n+1) e^{pi sqrt(2n/3)}; the dropped tail
  // is below 2^-bits relative to g_k, itself >= e^{-pi^2/(18 s)} roughly.
  const double sd = s.to_double();
  const double target = -(static_cast<double>(bits) + 16) * M_LN2 - M_PI * M_PI / (18.0 * sd);
  auto log_term = [&](double n) { return std::log(n + 2) + M_PI * std::sqrt(2 * n / 3) - sd * n; };
  auto slope = [&](double n) { return 1 / (n + 2) + M_PI / std::sqrt(6 * (n + 1)) - sd; };
  double n = 1;
  while (!(slope(n) < -sd / 2 && log_term(n) - std::log(1 - std::exp(-sd / 2)) < target)) {
    n += 1;
    if (n > 1e7) throw Error(ErrorCode::TermCapExceeded, "exact series route needs too many coefficients");
  }
  return static_cast<int>(n);
}

BigReal gk_num(int k, const BigReal& s, const EvalConfig& cfg, GkRoute route, ThetaMode theta) {
  check_args(k, s, cfg);
  if (use_exact(route, s)) return gk_exact_series(k, s, cfg.working()).with_precision(cfg.precision_bits);
  const EvalConfig w = theta_sum_config(k, s, cfg);
  const ThetaSum t = theta_sum(k, s, w, theta);
  return (t.value / t.sums.qk_inf).with_precision(cfg.precision_bits);
}

BigReal relative_error_num(int k, const BigReal& s, const EvalConfig& cfg, GkRoute route, ThetaMode theta) {
  check_args(k, s, cfg);
  const EvalConfig w = theta_sum_config(k, s, cfg);
  const mpfr_prec_t bits = w.precision_bits;
  const BigReal sw = s.with_precision(bits), p = pi(bits);
  const long kk = static_cast<long>(k) * (k + 1);
  const BigReal scale = sqrt(sw * kk / (p * 2L)) * exp(p * p / (sw * (2 * kk)));
  BigReal ratio(bits);
  if (use_exact(route, s)) {
    const BigReal q = exp(-sw);
    const BigReal qk = pow(q, static_cast<long>(k)), qk1 = pow(q, static_cast<long>(k + 1));
    ratio = gk_exact_series(k, s, w) * pochhammer_num(qk, qk, w) / pochhammer_num(qk1, qk1, w);
  } else {
    const ThetaSum t = theta_sum(k, s, w, theta);
    ratio = t.value / t.sums.qk1_inf;
  }
  return (ratio * scale).with_precision(cfg.precision_bits);
}

BigComplex I_n_num(int k, int n, const BigReal& s, const EvalConfig& cfg) {
  check_args(k, s, cfg);
  if (n % 2 == 0) throw Error(ErrorCode::InvalidArgument, "I_n needs odd n");
  const EvalConfig w = theta_sum_config(k, s, cfg);
  const mpfr_prec_t bits = w.precision_bits;
  // I_n is O(1) for |n| = 1 and grows for larger |n|; an absolute tolerance
  // against (q^{k+1};q^{k+1})_inf covers both.
  const BigReal Q = exp(-(s.with_precision(bits) * static_cast<long>(k + 1)));
  const BigReal qk1_inf = pochhammer_num(Q, Q, w);
  const ResidueSums sums = residue_sums(k, s, w, w.tail_threshold * qk1_inf);
  const BigReal p = pi(bits);
  BigComplex acc(bits);
  for (int rho = 0; rho < 2 * (k + 1); ++rho) {
    const long num = static_cast<long>(rho) * n % (2 * (k + 1));
    acc += expi(p * BigReal(exact::make_rational(num, k + 1), bits)) * sums.W[rho];
  }
  acc.re /= qk1_inf;
  acc.im /= qk1_inf;
  return {acc.re.with_precision(cfg.precision_bits), acc.im.with_precision(cfg.precision_bits)};
}

BigReal relative_error_from_I(int k, int n_max, const BigReal& s, const EvalConfig& cfg) {
  check_args(k, s, cfg);
  const EvalConfig w = cfg.working();
  const mpfr_prec_t bits = w.precision_bits;
  const BigReal sw = s.with_precision(bits), p = pi(bits);
  const long kk = static_cast<long>(k) * (k + 1);
  BigReal acc(bits);
  for (int n = -n_max; n <= n_max; ++n) {
    if (n % 2 == 0) continue;
    const BigReal weight = exp(-(p * p * static_cast<long>(n * n - 1)) / (sw * (2 * kk)));
    acc += weight * I_n_num(k, n, s, w).re;
  }
  return acc.with_precision(cfg.precision_bits);
}

}  // namespace seqfree::hires
