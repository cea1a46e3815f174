#pragma once

#include "seqfree/hires/qfunctions.hpp"

namespace seqfree::hires {

enum class GkRoute {
  automatic,     // theta sum for s < 1, exact series otherwise
  theta_sum,     // Andrews' sum of theta functions
  exact_series,  // partition-count series summed at q = e^{-s}
};

/// g_k(e^{-s}).
BigReal gk_num(int k, const BigReal& s, const EvalConfig& cfg, GkRoute route = GkRoute::automatic,
               ThetaMode theta = ThetaMode::automatic);

/// R_k(q) = g_k(q) (q^k;q^k)_inf / (q^{k+1};q^{k+1})_inf
///          * sqrt(k(k+1)s/(2 pi)) * e^{pi^2/(2k(k+1)s)}.
BigReal relative_error_num(int k, const BigReal& s, const EvalConfig& cfg, GkRoute route = GkRoute::automatic,
                           ThetaMode theta = ThetaMode::automatic);

/// I_n(s) = sum_m (-1)^m e^{pi i m n/(k+1)} q^{km(m+1)/2 - km^2/(2(k+1))}
///          / ((q^k;q^k)_m (q^{k+1};q^{k+1})_{-km/(k+1)}), n odd.
BigComplex I_n_num(int k, int n, const BigReal& s, const EvalConfig& cfg);

/// sum_{n odd, |n| <= n_max} e^{-pi^2 (n^2-1)/(2k(k+1)s)} I_n(s).
BigReal relative_error_from_I(int k, int n_max, const BigReal& s, const EvalConfig& cfg);

/// Number of terms used when g_k is evaluated from its q-series at e^{-s}.
int exact_series_order(const BigReal& s, mpfr_prec_t bits);

}  // namespace seqfree::hires
