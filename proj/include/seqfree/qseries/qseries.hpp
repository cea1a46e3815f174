#pragma once

#include <optional>

#include "seqfree/exact/formal_series.hpp"

namespace seqfree::qseries {

using exact::FormalSeries;

/// prod_{m>=0} (1 - q^{offset + m*step}), the only shape of (z;q)_inf that
/// Andrews' theta-sum needs (z a power of q, base a power of q).
struct QExponentProduct {
  int offset;
  int step;  // >= 1

  // Lowest exponent of the expansion, or nullopt when a factor is 1 - q^0.
  std::optional<int> valuation() const;
  FormalSeries expand(int order) const;
};

FormalSeries pochhammer_series(int offset, int step, int order);

// prod_{m<count} (1 - q^{offset + m*step}) for offset, step >= 1: (q^a;q^b)_count.
FormalSeries finite_pochhammer_series(int offset, int step, int count, int order);

// sum_{n in Z} (-1)^n q^{m n + t n^2}, i.e. theta(q^m, q^t).
FormalSeries theta_series(int m, int t, int order);
// Lower bound for the exponents present in theta_series(m, t, .).
int theta_min_exponent(int m, int t);

// theta_series against prod_{n>=1}(1-q^{2tn})(1-q^{m+t(2n-1)})(1-q^{-m+t(2n-1)}).
bool theta_product_check(int m, int t, int order);

/// m-th summand of Andrews' theta-sum for g_k (without the 1/(q^k;q^k)_inf
/// prefactor), always expanded in full even when it vanishes.
FormalSeries andrews_summand(int k, int m, int order);
// True when the summand contains the factor 1 - q^0. This happens exactly for
// m >= 1 with (k+1) | k*m; m = 0 never vanishes.
bool andrews_summand_vanishes(int k, int m);

/// g_k(q) from Andrews' representation as a sum of theta functions.
FormalSeries gk_series_andrews(int k, int order);

/// G_k(q): partitions with no k consecutive part sizes, by dynamic
/// programming over part sizes with the current run length as state.
FormalSeries Gk_series_oracle(int k, int order);

/// g_k = G_k * (q;q)_inf from the partition oracle.
FormalSeries gk_from_oracle(int k, int order);

/// Ramanujan's third-order mock theta function chi(q).
FormalSeries chi_series(int order);

/// chi(q) * prod (1 + q^{3n})(1 - q^n) / (1 - q^{2n}), equal to g_2.
/// Dividing by (q;q)_inf gives Andrews' formula for G_2.
FormalSeries g2_mock_theta_series(int order);

/// Both Euler identities as truncated series in (z, q), z-degree and
/// q-degree up to order.
bool euler_identity_check(int order);

}  // namespace seqfree::qseries
