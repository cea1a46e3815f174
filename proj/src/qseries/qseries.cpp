#include "seqfree/qseries/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "seqfree/error.hpp"

namespace seqfree::qseries {

using exact::Integer;
using exact::Rational;

namespace {

// Multiply a dense power series by (1 - q^p) in place.
void times_one_minus(std::vector<Rational>& c, std::size_t p) {
  for (std::size_t n = c.size(); n-- > p;) c[n] -= c[n - p];
}

FormalSeries fit_order(const FormalSeries& s, int order) {
  return s.order() == order ? s : s.truncated(order);
}

}  // namespace

std::optional<int> QExponentProduct::valuation() const {
  if (step < 1) throw Error(ErrorCode::InvalidArgument, "pochhammer step must be >= 1");
  if (offset <= 0 && (-offset) % step == 0) return std::nullopt;
  int v = 0;
  for (int e = offset; e < 0; e += step) v += e;
  return v;
}

FormalSeries QExponentProduct::expand(int order) const {
  const auto v = valuation();
  if (!v) return FormalSeries::zero(order);
  // Negative factors: 1 - q^e = -q^e (1 - q^{-e}).
  const int unit_order = order - *v;
  if (unit_order < 0) return FormalSeries::zero(order);
  std::vector<Rational> c(static_cast<std::size_t>(unit_order) + 1);
  c[0] = 1;
  bool negate = false;
  int e = offset;
  for (; e < 0; e += step) {
    negate = !negate;
    if (-e <= unit_order) times_one_minus(c, static_cast<std::size_t>(-e));
  }
  for (; e <= unit_order; e += step) times_one_minus(c, static_cast<std::size_t>(e));
  if (negate)
    for (auto& x : c) x = -x;
  return FormalSeries(*v, std::move(c), order);
}

FormalSeries pochhammer_series(int offset, int step, int order) { return QExponentProduct{offset, step}.expand(order); }

FormalSeries finite_pochhammer_series(int offset, int step, int count, int order) {
  if (offset < 1 || step < 1) throw Error(ErrorCode::InvalidArgument, "finite pochhammer needs offset, step >= 1");
  if (order < 0) return FormalSeries::zero(order);
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  for (int m = 0; m < count; ++m) {
    const long e = static_cast<long>(offset) + static_cast<long>(m) * step;
    if (e > order) break;
    times_one_minus(c, static_cast<std::size_t>(e));
  }
  return FormalSeries::from_coefficients(std::move(c), order);
}

int theta_min_exponent(int m, int t) {
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "theta base exponent must be >= 1");
  // Vertex of t n^2 + m n sits at -m/(2t); check the neighbouring integers.
  const long n0 = static_cast<long>(std::floor(-static_cast<double>(m) / (2.0 * t)));
  long best = 0;
  bool first = true;
  for (long n = n0 - 1; n <= n0 + 2; ++n) {
    const long e = static_cast<long>(m) * n + static_cast<long>(t) * n * n;
    if (first || e < best) best = e;
    first = false;
  }
  return static_cast<int>(best);
}

FormalSeries theta_series(int m, int t, int order) {
  const int low = theta_min_exponent(m, t);
  if (order < low) return FormalSeries::zero(order);
  std::vector<Rational> c(static_cast<std::size_t>(order - low) + 1);
  const long n0 = std::lround(-static_cast<double>(m) / (2.0 * t));
  auto exponent = [&](long n) { return static_cast<long>(m) * n + static_cast<long>(t) * n * n; };
  auto add = [&](long n) {
    c[static_cast<std::size_t>(exponent(n) - low)] += (n % 2 == 0) ? 1 : -1;
  };
  // The exponent is convex in n, so it grows moving away from the vertex.
  for (long n = n0; exponent(n) <= order; ++n) add(n);
  for (long n = n0 - 1; exponent(n) <= order; --n) add(n);
  return FormalSeries(low, std::move(c), order);
}

bool theta_product_check(int m, int t, int order) {
  const QExponentProduct factors[3] = {{2 * t, 2 * t}, {t + m, 2 * t}, {t - m, 2 * t}};
  const FormalSeries theta = theta_series(m, t, order);
  int total_val = 0;
  for (const auto& f : factors) {
    const auto v = f.valuation();
    if (!v) return theta.is_zero();
    total_val += *v;
  }
  std::optional<FormalSeries> product;
  for (const auto& f : factors) {
    const FormalSeries part = f.expand(order - (total_val - *f.valuation()));
    product = product ? *product * part : part;
  }
  return fit_order(*product, order) == theta;
}

bool andrews_summand_vanishes(int k, int m) { return m >= 1 && (k * m) % (k + 1) == 0; }

FormalSeries andrews_summand(int k, int m, int order) {
  require_valid_k(k);
  const int t = k * (k + 1) / 2;
  const long shift = static_cast<long>(k) * m * (m + 1) / 2;
  const QExponentProduct poch{k + 1 - k * m, k + 1};
  const auto pv = poch.valuation();
  if (!pv) return FormalSeries::zero(order);
  const int inner = static_cast<int>(order - shift);
  const int tv = theta_min_exponent(k * m, t);
  const FormalSeries p = poch.expand(inner - tv);
  const FormalSeries th = theta_series(k * m, t, inner - *pv);
  const FormalSeries fin = exact::inverse(finite_pochhammer_series(k, k, m, inner - *pv - tv));
  FormalSeries term = fit_order(p * th * fin, inner).shifted(static_cast<int>(shift));
  if (m % 2 == 1) term = -term;
  return term;
}

FormalSeries gk_series_andrews(int k, int order) {
  require_valid_k(k);
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "order must be >= 0");
  const int t = k * (k + 1) / 2;
  FormalSeries sum = FormalSeries::zero(order);
  // Stop once the lowest possible exponent of 2(k+1) consecutive summands
  // exceeds the order; the bound grows roughly like k*m/2.
  int quiet = 0;
  for (int m = 0; quiet < 2 * (k + 1); ++m) {
    if (andrews_summand_vanishes(k, m)) {
      ++quiet;
      continue;
    }
    const long bound = static_cast<long>(k) * m * (m + 1) / 2 + *QExponentProduct{k + 1 - k * m, k + 1}.valuation() +
                       theta_min_exponent(k * m, t);
    if (bound > order) {
      ++quiet;
      continue;
    }
    quiet = 0;
    sum += andrews_summand(k, m, order);
  }
  FormalSeries g = sum * exact::inverse(pochhammer_series(k, k, order));
  if (!g.is_power_series() || g.coefficient(0) != 1)
    throw Error(ErrorCode::NonConvergent, "Laurent parts of the theta sum did not cancel");
  return g;
}

FormalSeries Gk_series_oracle(int k, int order) {
  require_valid_k(k);
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "order must be >= 0");
  const std::size_t len = static_cast<std::size_t>(order) + 1;
  // state[r]: partitions using sizes < j whose last r sizes j-r..j-1 are all used.
  std::vector<std::vector<Integer>> state(static_cast<std::size_t>(k), std::vector<Integer>(len));
  state[0][0] = 1;
  for (std::size_t j = 1; j <= static_cast<std::size_t>(order); ++j) {
    std::vector<std::vector<Integer>> next(state.size(), std::vector<Integer>(len));
    for (const auto& s : state)
      for (std::size_t n = 0; n < len; ++n) next[0][n] += s[n];
    // Using size j with multiplicity >= 1 multiplies by q^j / (1 - q^j).
    for (std::size_t r = 0; r + 1 < state.size(); ++r) {
      auto& out = next[r + 1];
      for (std::size_t n = j; n < len; ++n) out[n] = state[r][n - j] + out[n - j];
    }
    state = std::move(next);
  }
  std::vector<Rational> c(len);
  for (const auto& s : state)
    for (std::size_t n = 0; n < len; ++n) c[n] += Rational(s[n]);
  return FormalSeries::from_coefficients(std::move(c), order);
}

FormalSeries gk_from_oracle(int k, int order) {
  return Gk_series_oracle(k, order) * pochhammer_series(1, 1, order);
}

FormalSeries chi_series(int order) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "order must be >= 0");
  FormalSeries chi = FormalSeries::one(order);
  FormalSeries denom = FormalSeries::one(order);
  for (int n = 1; n * n <= order; ++n) {
    std::vector<Rational> f(static_cast<std::size_t>(2 * n) + 1);
    f[0] = 1;
    f[static_cast<std::size_t>(n)] = -1;
    f[static_cast<std::size_t>(2 * n)] = 1;
    denom = denom * FormalSeries::from_coefficients(std::move(f), order);
    chi += exact::inverse(denom.truncated(order - n * n)).shifted(n * n);
  }
  return chi;
}

FormalSeries g2_mock_theta_series(int order) {
  FormalSeries num = chi_series(order);
  for (int n = 1; 3 * n <= order; ++n) {
    std::vector<Rational> f(static_cast<std::size_t>(3 * n) + 1);
    f[0] = 1;
    f[static_cast<std::size_t>(3 * n)] = 1;
    num = num * FormalSeries::from_coefficients(std::move(f), order);
  }
  return num * pochhammer_series(1, 1, order) * exact::inverse(pochhammer_series(2, 2, order));
}

namespace {

// Truncated series in z whose coefficients are power series in q.
using ZSeries = std::vector<FormalSeries>;

ZSeries z_one(int order) {
  ZSeries s(static_cast<std::size_t>(order) + 1, FormalSeries::zero(order));
  s[0] = FormalSeries::one(order);
  return s;
}

bool same(const ZSeries& a, const ZSeries& b) {
  for (std::size_t d = 0; d < a.size(); ++d)
    if (!(a[d] == b[d])) return false;
  return true;
}

}  // namespace

bool euler_identity_check(int order) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "order must be >= 0");
  const std::size_t zdeg = static_cast<std::size_t>(order);

  // Products over m; factors with m > order only touch q-degrees above order
  // (apart from their constant 1).
  ZSeries inv_prod = z_one(order), prod = z_one(order);
  for (int m = 0; m <= order; ++m) {
    ZSeries next_inv(inv_prod.size(), FormalSeries::zero(order));
    for (std::size_t d = 0; d <= zdeg; ++d)
      for (std::size_t i = 0; i <= d; ++i) {
        const long e = static_cast<long>(m) * static_cast<long>(i);
        if (e > order) break;
        next_inv[d] += inv_prod[d - i].shifted(static_cast<int>(e)).truncated(order);
      }
    inv_prod = std::move(next_inv);
    for (std::size_t d = zdeg; d >= 1; --d) prod[d] -= prod[d - 1].shifted(m).truncated(order);
  }

  ZSeries rhs1(zdeg + 1, FormalSeries::zero(order)), rhs2(zdeg + 1, FormalSeries::zero(order));
  for (std::size_t n = 0; n <= zdeg; ++n) {
    const FormalSeries inv_qn = exact::inverse(finite_pochhammer_series(1, 1, static_cast<int>(n), order));
    rhs1[n] = inv_qn;
    const long e = static_cast<long>(n) * (static_cast<long>(n) - 1) / 2;
    rhs2[n] = e > order ? FormalSeries::zero(order) : inv_qn.shifted(static_cast<int>(e)).truncated(order);
    if (n % 2 == 1) rhs2[n] = -rhs2[n];
  }
  return same(inv_prod, rhs1) && same(prod, rhs2);
}

}  // namespace seqfree::qseries
