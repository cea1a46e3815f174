#include "seqfree/expansion/expansion.hpp"

#include <cstdio>
#include <cstdlib>
#include <future>
#include <mutex>
#include <tuple>

#include "seqfree/error.hpp"
#include "seqfree/exact/bernoulli.hpp"
#include "seqfree/wright/wright.hpp"

namespace seqfree::expansion {

using exact::Integer;
using exact::make_rational;

Polynomial f2j_polynomial(int k, int j) {
  require_valid_k(k);
  if (j < 1) throw Error(ErrorCode::InvalidArgument, "f_{2j} needs j >= 1");
  const unsigned m = 2 * static_cast<unsigned>(j);
  const Polynomial b = exact::bernoulli_polynomial(m + 1);
  const Polynomial left = exact::compose_affine(b, 1, 1) * exact::pow(Rational(k), m);
  const Polynomial right = exact::compose_affine(b, make_rational(-k, k + 1), 1) * exact::pow(Rational(k + 1), m);
  const Rational scale = exact::bernoulli_number(m) / Rational(Integer(m) * exact::factorial(m + 1));
  return (left + right) * scale;
}

Rational BivariateExpansion::coefficient(int n, int j) const {
  if (j > j_max) throw Error(ErrorCode::TruncationViolation, "a_{n,j} requested beyond j_max");
  const auto it = table.find({n, j});
  return it == table.end() ? Rational(0) : it->second;
}

Polynomial BivariateExpansion::s_coefficient(int j) const {
  if (j > j_max) throw Error(ErrorCode::TruncationViolation, "s-coefficient requested beyond j_max");
  std::vector<Rational> c(static_cast<std::size_t>(2 * j) + 1);
  for (int n = 0; n <= 2 * j; ++n) c[static_cast<std::size_t>(n)] = coefficient(n, j);
  return Polynomial(std::move(c));
}

BivariateExpansion hq_bivariate(int k, int j_max) {
  require_valid_k(k);
  if (j_max < 1) throw Error(ErrorCode::InvalidArgument, "j_max must be >= 1");
  const std::size_t len = static_cast<std::size_t>(j_max) + 1;
  // Exponent as a series in s with polynomial coefficients in z.
  std::vector<Polynomial> e(len);
  e[1] = Polynomial{0, make_rational(-k, 2), make_rational(k, 4L * (k + 1))};
  for (int j = 1; 2 * j <= j_max; ++j) e[static_cast<std::size_t>(2 * j)] -= f2j_polynomial(k, j);
  // r = exp(e): n r_n = sum_i i e_i r_{n-i}.
  std::vector<Polynomial> r(len);
  r[0] = Polynomial::constant(1);
  for (std::size_t n = 1; n < len; ++n) {
    Polynomial acc;
    for (std::size_t i = 1; i <= n; ++i)
      if (!e[i].is_zero()) acc += (e[i] * r[n - i]) * Rational(static_cast<long>(i));
    r[n] = acc * make_rational(1, static_cast<long>(n));
  }
  BivariateExpansion out;
  out.k = k;
  out.j_max = j_max;
  for (std::size_t j = 0; j < len; ++j) {
    if (r[j].degree() > 2 * static_cast<int>(j)) {
      std::fprintf(stderr, "hq_bivariate: a_{n,%zu} nonzero for n = %d > 2j (k = %d)\n", j, r[j].degree(), k);
      std::abort();
    }
    const auto& c = r[j].coefficients();
    for (std::size_t n = 0; n < c.size(); ++n)
      if (c[n] != 0) out.table.emplace(std::pair{static_cast<int>(n), static_cast<int>(j)}, c[n]);
  }
  return out;
}

namespace {

std::mutex cache_mutex;
std::map<int, BivariateExpansion> bivariate_cache;
std::map<std::tuple<int, int, mpfr_prec_t>, BigReal> beta_cache;

BivariateExpansion cached_bivariate(int k, int j_max) {
  std::lock_guard lock(cache_mutex);
  auto it = bivariate_cache.find(k);
  if (it == bivariate_cache.end() || it->second.j_max < j_max)
    it = bivariate_cache.insert_or_assign(k, hq_bivariate(k, std::max(j_max, 1))).first;
  return it->second;
}

BigReal compute_beta(int k, int j, const EvalConfig& cfg) {
  const EvalConfig work = cfg.working();
  const mpfr_prec_t bits = work.precision_bits;
  const BivariateExpansion h = cached_bivariate(k, (j - 1) / k);
  BigReal sum(bits);
  // The r = 0 term is the leading b_k(j) (k+1)^{-j} k^{j(k+1)/k}; for r >= 1 the
  // n-sum collapses to the polynomial sum_n a_{n,r} z^n at z = -l(k+1)/k.
  for (int r = 0; k * r < j; ++r) {
    const int l = j - k * r;
    if (l % k == 0) continue;
    const Rational inner =
        r == 0 ? Rational(1) : h.s_coefficient(r)(make_rational(-static_cast<long>(l) * (k + 1), k));
    if (inner == 0) continue;
    const BigReal kk(static_cast<long>(k), bits);
    const BigReal scale = hires::pow(kk, BigReal(make_rational(static_cast<long>(l) * (k + 1), k), bits)) /
                          hires::pow(BigReal(static_cast<long>(k + 1), bits), static_cast<long>(l));
    sum += wright::b_k_coeff(k, l, work) * scale * BigReal(inner, bits);
  }
  return sum.with_precision(cfg.precision_bits);
}

}  // namespace

BigReal beta_coeff(int k, int j, const EvalConfig& cfg) {
  require_valid_k(k);
  if (j < 1) throw Error(ErrorCode::InvalidArgument, "beta_k(j) needs j >= 1");
  cfg.validate();
  if (j % k == 0) return BigReal(cfg.precision_bits);
  const auto key = std::tuple{k, j, cfg.precision_bits};
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = beta_cache.find(key); it != beta_cache.end()) return it->second;
  }
  BigReal v = compute_beta(k, j, cfg);
  std::lock_guard lock(cache_mutex);
  // First writer wins, so every caller sees the same value.
  return beta_cache.emplace(key, std::move(v)).first->second;
}

std::vector<BigReal> beta_coeffs(int k, int j_max, const EvalConfig& cfg) {
  require_valid_k(k);
  if (j_max < 0) throw Error(ErrorCode::InvalidArgument, "j_max must be >= 0");
  if (j_max >= k) cached_bivariate(k, (j_max - 1) / k);
  std::vector<std::future<BigReal>> jobs;
  for (int j = 1; j <= j_max; ++j) jobs.push_back(std::async(std::launch::async, beta_coeff, k, j, cfg));
  std::vector<BigReal> out;
  out.reserve(jobs.size());
  for (auto& f : jobs) out.push_back(f.get());
  return out;
}

BigReal PuiseuxExpansion::eval(const BigReal& s) const {
  if (!(s > 0L)) throw Error(ErrorCode::InvalidArgument, "expansion needs s > 0");
  const mpfr_prec_t bits = precision_bits + hires::kWorkingGuardBits;
  const BigReal sw = s.with_precision(bits), p = hires::pi(bits);
  const BigReal root = hires::pow(sw, BigReal(make_rational(1, k), bits));
  BigReal series(constant(), bits), power(1L, bits);
  for (const BigReal& b : beta) {
    power *= root;
    series += b.with_precision(bits) * power;
  }
  const BigReal expo = BigReal(exponent_coefficient(), bits) * p * p / sw + BigReal(linear_coefficient(), bits) * sw;
  const BigReal v = BigReal(scale(), bits) * hires::sqrt(2L * p / sw) * hires::exp(expo) * series;
  return v.with_precision(precision_bits);
}

PuiseuxExpansion make_puiseux(int k, int N, const EvalConfig& cfg) {
  require_valid_k(k);
  if (N < 0) throw Error(ErrorCode::InvalidArgument, "N must be >= 0");
  PuiseuxExpansion p;
  p.k = k;
  p.N = N;
  p.precision_bits = cfg.precision_bits;
  p.beta = beta_coeffs(k, k * N, cfg);
  return p;
}

BigReal expansion_eval(int k, int N, const BigReal& s, const EvalConfig& cfg) { return make_puiseux(k, N, cfg).eval(s); }

Rational reconstruct_rational(const BigReal& x, const Integer& max_den, const BigReal& tol) {
  if (!x.is_finite()) throw Error(ErrorCode::ReconstructionFailed, "value is not finite");
  const mpfr_prec_t bits = x.precision();
  const BigReal bound = tol * hires::max(BigReal(1L, bits), hires::abs(x));
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;  // convergents h_{n-2}/k_{n-2}, h_{n-1}/k_{n-1}
  BigReal y = x;
  for (int step = 0; step < 4 * static_cast<int>(bits); ++step) {
    Integer a;
    mpfr_get_z(a.get_mpz_t(), y.get(), MPFR_RNDD);
    const Integer h = a * h1 + h0, kd = a * k1 + k0;
    if (kd > max_den) break;
    const Rational c(h, kd);
    if (hires::abs(x - BigReal(c, bits)) <= bound) return c;
    h0 = h1;
    h1 = h;
    k0 = k1;
    k1 = kd;
    const BigReal frac = y - BigReal(Rational(a), bits);
    if (frac.is_zero()) break;
    y = BigReal(1L, bits) / frac;
  }
  throw Error(ErrorCode::ReconstructionFailed, "no convergent within tolerance and denominator bound");
}

Rational rational_ratio(int k, int j, int m, const EvalConfig& cfg) {
  require_valid_k(k);
  if (j < 1 || j >= k) throw Error(ErrorCode::InvalidArgument, "rational_ratio needs 1 <= j < k");
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "rational_ratio needs m >= 1");
  const BigReal den = beta_coeff(k, j, cfg);
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZeroBeta, "beta_k(j) vanishes");
  const BigReal ratio = beta_coeff(k, j + m * k, cfg) / den;
  const mpfr_prec_t bits = cfg.precision_bits;
  Integer max_den = 1;
  max_den <<= 64;
  return reconstruct_rational(ratio, max_den, hires::ldexp(BigReal(1L, bits), -static_cast<long>(bits / 2)));
}

ZagierSeries zagier_t_coeffs(int m_max, const EvalConfig& cfg) {
  if (m_max < 0) throw Error(ErrorCode::InvalidArgument, "m_max must be >= 0");
  beta_coeffs(3, 3 * m_max + 2, cfg);  // warm the cache in parallel
  ZagierSeries z{{1}, {5}};
  for (int m = 1; m <= m_max; ++m) {
    z.t1.push_back(rational_ratio(3, 1, m, cfg));
    z.t2.push_back(5 * rational_ratio(3, 2, m, cfg));
  }
  return z;
}

const ZagierSeries& zagier_reference() {
  static const ZagierSeries table = [] {
    auto r = [](const char* num, long p2, long p3, long p5) {
      Integer den = 1;
      den <<= static_cast<unsigned long>(p2);
      for (long i = 0; i < p3; ++i) den *= 3;
      for (long i = 0; i < p5; ++i) den *= 5;
      return Rational(Integer(num), den);
    };
    ZagierSeries z;
    z.t1 = {1,
            r("-7", 6, 1, 0),
            r("-97", 8, 3, 0),
            r("-40061", 15, 4, 0),
            r("-18915331", 19, 6, 1),
            r("-13796617247", 27, 6, 1)};
    z.t2 = {5,
            r("-29", 4, 1, 0),
            r("19435", 11, 3, 0),
            r("-14885", 12, 3, 0),
            r("51970999", 18, 6, 0),
            r("-28436136277", 24, 7, 1)};
    for (auto& v : z.t1) v.canonicalize();
    for (auto& v : z.t2) v.canonicalize();
    return z;
  }();
  return table;
}

BigReal zagier_c1(const EvalConfig& cfg) {
  const mpfr_prec_t bits = cfg.working().precision_bits;
  const BigReal three(3L, bits);
  const BigReal v = hires::pow(three, BigReal(make_rational(-1, 6), bits)) *
                    hires::gamma(BigReal(make_rational(1, 3), bits)) / (8L * hires::pi(bits));
  return v.with_precision(cfg.precision_bits);
}

BigReal zagier_c2(const EvalConfig& cfg) {
  const mpfr_prec_t bits = cfg.working().precision_bits;
  const BigReal three(3L, bits);
  const BigReal v = hires::pow(three, BigReal(make_rational(1, 6), bits)) *
                    hires::gamma(BigReal(make_rational(2, 3), bits)) / (32L * hires::pi(bits));
  return v.with_precision(cfg.precision_bits);
}

BigReal w_of_s(int k, const BigReal& s, const EvalConfig& cfg) {
  require_valid_k(k);
  if (!(s > 0L)) throw Error(ErrorCode::InvalidArgument, "w needs s > 0");
  const mpfr_prec_t bits = cfg.working().precision_bits;
  const BigReal sw = s.with_precision(bits);
  const BigReal v = hires::pow(BigReal(static_cast<long>(k + 1), bits), BigReal(make_rational(k, k + 1), bits)) /
                    (static_cast<long>(k) * hires::pow(sw, BigReal(make_rational(1, k + 1), bits)));
  return v.with_precision(cfg.precision_bits);
}

BigReal relative_error_wright(int k, const BigReal& s, int j_max, const EvalConfig& cfg) {
  require_valid_k(k);
  if (j_max < 1) throw Error(ErrorCode::InvalidArgument, "j_max must be >= 1");
  const EvalConfig work = cfg.working();
  const mpfr_prec_t bits = work.precision_bits;
  const BivariateExpansion h = cached_bivariate(k, j_max);
  const std::vector<BigReal> W = wright::W_j_nums(k, 2 * static_cast<unsigned>(j_max), w_of_s(k, s, work), work);
  const BigReal sw = s.with_precision(bits);
  BigReal sum = W[0];
  for (int n = 1; n <= 2 * j_max; ++n) {
    BigReal weight(bits), power(1L, bits);
    for (int j = 1; j <= j_max; ++j) {
      power *= sw;
      const Rational a = h.coefficient(n, j);
      if (a != 0) weight += BigReal(a, bits) * power;
    }
    sum += weight * W[static_cast<std::size_t>(n)];
  }
  return sum.with_precision(cfg.precision_bits);
}

nlohmann::json to_json(const BivariateExpansion& e) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [nj, a] : e.table) rows.push_back({{"n", nj.first}, {"j", nj.second}, {"a", exact::to_string(a)}});
  return {{"k", e.k}, {"j_max", e.j_max}, {"coefficients", rows}};
}

nlohmann::json to_json(const PuiseuxExpansion& p) {
  const int digits = hires::reliable_digits(p.precision_bits);
  nlohmann::json beta = nlohmann::json::array();
  for (std::size_t i = 0; i < p.beta.size(); ++i)
    beta.push_back({{"j", i + 1}, {"value", hires::to_decimal(p.beta[i], digits)}});
  return {{"k", p.k},
          {"N", p.N},
          {"precision_bits", p.precision_bits},
          {"digits", digits},
          {"constant", exact::to_string(p.constant())},
          {"prefactor",
           {{"scale", exact::to_string(p.scale())},
            {"sqrt", "2*pi/s"},
            {"exp_pi2_over_s", exact::to_string(p.exponent_coefficient())},
            {"exp_s", exact::to_string(p.linear_coefficient())}}},
          {"beta", beta}};
}

}  // namespace seqfree::expansion
