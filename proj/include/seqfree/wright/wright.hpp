#pragma once

#include <vector>

#include "seqfree/hires/bigcomplex.hpp"
#include "seqfree/hires/config.hpp"

namespace seqfree::wright {

using hires::BigComplex;
using hires::BigReal;
using hires::EvalConfig;

/// phi(rho, beta; z) = sum_n z^n / (n! Gamma(beta - rho n)).
struct WrightParams {
  exact::Rational rho;
  exact::Rational beta;
};

/// Direct summation; requires -1 < rho < 1. Terms peak near
/// exp(c |z|^{1/(1-rho)}) and cancel, so z is used at its own precision:
/// pass it with at least that many extra bits (W_j_num does this itself).
BigComplex wright_phi(const WrightParams& p, const BigComplex& z, const EvalConfig& cfg);
/// sum_n n^j z^n / (n! Gamma(beta - rho n)).
BigComplex wright_phi_moment(unsigned j, const WrightParams& p, const BigComplex& z, const EvalConfig& cfg);

/// W_j(w) = 2 Re phi_j(k/(k+1), 1; e^{-pi i k/(k+1)} w).
BigReal W_j_num(int k, unsigned j, const BigReal& w, const EvalConfig& cfg);
/// W_0 .. W_jmax from a single summation.
std::vector<BigReal> W_j_nums(int k, unsigned jmax, const BigReal& w, const EvalConfig& cfg);

/// b_k(j) = (k+1)/(k pi j!) (-1)^{j+1} sin(pi j (k-1)/k) Gamma(j(k+1)/k),
/// exactly zero when k divides j.
BigReal b_k_coeff(int k, int j, const EvalConfig& cfg);

/// Re phi(rho, 1; z e^{pi i rho}) ~ 1/(2 rho)
///   + 1/(2 pi rho) sum_{l<L} (-1)^{l+1}/l! Gamma(l/rho) z^{-l/rho} sin(pi l (2rho-1)/rho),
/// valid for 1/2 <= rho < 1 and z > 0, with remainder O(z^{-L/rho}).
BigReal re_phi_expansion(const exact::Rational& rho, const BigReal& z, int L, const EvalConfig& cfg);
exact::Rational re_phi_remainder_exponent(const exact::Rational& rho, int L);

/// W_j(w) ~ [j = 0] (k+1)/k + sum_{l<L} (-l(k+1)/k)^j b_k(l) w^{-l(k+1)/k},
/// remainder O(w^{-L(k+1)/k}).
BigReal Wj_expansion(int k, unsigned j, int L, const BigReal& w, const EvalConfig& cfg);
BigReal W0_expansion(int k, int L, const BigReal& w, const EvalConfig& cfg);
exact::Rational Wj_remainder_exponent(int k, int L);

}  // namespace seqfree::wright
