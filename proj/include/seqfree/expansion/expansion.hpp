#pragma once

#include <map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "seqfree/exact/polynomial.hpp"
#include "seqfree/hires/bigreal.hpp"
#include "seqfree/hires/config.hpp"

namespace seqfree::expansion {

using exact::Polynomial;
using exact::Rational;
using hires::BigReal;
using hires::EvalConfig;

/// f_{2j}(z) = B_{2j} (B_{2j+1}(1+z) k^{2j} + B_{2j+1}(1 - kz/(k+1)) (k+1)^{2j}) / (2j (2j+1)!).
Polynomial f2j_polynomial(int k, int j);

/// Exact coefficients a_{n,j} of h_q(z) = sum_{n,j} a_{n,j} z^n s^j, q = e^{-s},
/// complete for every j <= j_max. Only nonzero entries are stored.
struct BivariateExpansion {
  int k = 2;
  int j_max = 0;
  std::map<std::pair<int, int>, Rational> table;  // (n, j) -> a_{n,j}

  Rational coefficient(int n, int j) const;
  /// sum_n a_{n,j} z^n.
  Polynomial s_coefficient(int j) const;
};

/// Expands exp(s (k z^2/(4(k+1)) - k z/2)) exp(-sum_j f_{2j}(z) s^{2j}) to order s^{j_max}.
/// Aborts if some a_{n,j} with n > 2j is nonzero.
BivariateExpansion hq_bivariate(int k, int j_max);

/// beta_k(j) = b_k(j) (k+1)^{-j} k^{j(k+1)/k}
///   + sum_{kr+l=j, r,l>=1} b_k(l) sum_{n=1}^{2r} a_{n,r} (-l)^n (k+1)^{n-l} k^{l(k+1)/k-n}.
/// Exactly zero when k divides j. Cached per (k, j, precision).
BigReal beta_coeff(int k, int j, const EvalConfig& cfg);
/// beta_k(1..j_max), computed in parallel.
std::vector<BigReal> beta_coeffs(int k, int j_max, const EvalConfig& cfg);

/// (1/(k+1)) sqrt(2 pi/s) exp(-pi^2/(3k(k+1)s) + s/24) ((k+1)/k + sum_{j=1}^{kN} beta_k(j) s^{j/k}).
struct PuiseuxExpansion {
  int k = 2;
  int N = 0;
  mpfr_prec_t precision_bits = 256;
  std::vector<BigReal> beta;  // beta[j-1] = beta_k(j)

  Rational constant() const { return exact::make_rational(k + 1, k); }
  Rational scale() const { return exact::make_rational(1, k + 1); }
  // Multiplies pi^2 / s in the exponent.
  Rational exponent_coefficient() const { return exact::make_rational(-1, 3L * k * (k + 1)); }
  Rational linear_coefficient() const { return exact::make_rational(1, 24); }

  BigReal eval(const BigReal& s) const;
};

PuiseuxExpansion make_puiseux(int k, int N, const EvalConfig& cfg);
BigReal expansion_eval(int k, int N, const BigReal& s, const EvalConfig& cfg);

/// Continued-fraction reconstruction: the first convergent p/q with q <= max_den
/// and |x - p/q| <= tol * max(1, |x|). Throws ReconstructionFailed otherwise.
Rational reconstruct_rational(const BigReal& x, const exact::Integer& max_den, const BigReal& tol);

/// beta_k(j + mk) / beta_k(j) as an exact rational, 1 <= j < k, m >= 1.
/// Denominator bound 2^64, tolerance 2^{-precision/2}.
Rational rational_ratio(int k, int j, int m, const EvalConfig& cfg);

/// Coefficients of t1 and t2 through s^{m_max} for k = 3.
struct ZagierSeries {
  std::vector<Rational> t1;
  std::vector<Rational> t2;
};
ZagierSeries zagier_t_coeffs(int m_max, const EvalConfig& cfg);
/// Zagier's published coefficients through s^5.
const ZagierSeries& zagier_reference();
/// c1 = 3^{-1/6} Gamma(1/3)/(8 pi), c2 = 3^{1/6} Gamma(2/3)/(32 pi).
BigReal zagier_c1(const EvalConfig& cfg);
BigReal zagier_c2(const EvalConfig& cfg);

/// w = (k+1)^{k/(k+1)} / (k s^{1/(k+1)}).
BigReal w_of_s(int k, const BigReal& s, const EvalConfig& cfg);
/// W_0(w) + sum_{n=1}^{2 j_max} (sum_{j=1}^{j_max} a_{n,j} s^j) W_n(w), the
/// Wright-function form of the relative error R_k.
BigReal relative_error_wright(int k, const BigReal& s, int j_max, const EvalConfig& cfg);

nlohmann::json to_json(const BivariateExpansion& e);
nlohmann::json to_json(const PuiseuxExpansion& p);

}  // namespace seqfree::expansion
