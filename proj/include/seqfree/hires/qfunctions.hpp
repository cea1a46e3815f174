#pragma once

#include "seqfree/hires/bigcomplex.hpp"
#include "seqfree/hires/config.hpp"

namespace seqfree::hires {

/// (z;q)_inf by direct product. Requires 0 < q < 1.
BigComplex pochhammer_num(const BigComplex& z, const BigReal& q, const EvalConfig& cfg);
BigReal pochhammer_num(const BigReal& z, const BigReal& q, const EvalConfig& cfg);

/// (q;q)_x = (q;q)_inf / (q^{x+1};q)_inf for any complex x that is not a
/// negative integer.
BigComplex qsubz_num(const BigComplex& x, const BigReal& q, const EvalConfig& cfg);

/// Gamma_q(x) = (q;q)_{x-1} (1-q)^{1-x}, principal branch of the power.
BigComplex gamma_q_num(const BigComplex& x, const BigReal& q, const EvalConfig& cfg);

enum class ThetaMode { automatic, direct, inverted };

/// theta(e^{2 pi i u}, e^{-s}) = sum (-1)^n e^{2 pi i u n - s n^2} for real u.
/// Automatic mode uses the modular inversion when s < 1.
BigReal theta_num(const BigReal& u, const BigReal& s, const EvalConfig& cfg, ThetaMode mode = ThetaMode::automatic);

/// sum_n (-1)^n e^{-S (n + x)^2}; the inverted form is
/// sqrt(pi/S) sum_{n odd} e^{-pi^2 n^2 / (4S)} cos(pi n x).
BigReal shifted_theta_num(const BigReal& x, const BigReal& S, const EvalConfig& cfg,
                          ThetaMode mode = ThetaMode::automatic);

/// Right side of the Dedekind eta transformation for (q;q)_inf, q = e^{-s}:
/// sqrt(2 pi / s) e^{-pi^2/(6s) + s/24} prod (1 - e^{-4 pi^2 n / s}).
BigReal eta_transformed_num(const BigReal& s, const EvalConfig& cfg);

/// Gamma(x) / Gamma_q(x) * ((1-q)/s)^{1-x} * q^{x(x-1)/2} at q = e^{-s}.
BigReal mcintosh_lhs(const exact::Rational& x, const BigReal& s, const EvalConfig& cfg);
/// q^{x(x-1)/4} exp(-sum_{j<=N} B_{2j} B_{2j+1}(x) s^{2j} / (2j (2j+1)!)).
BigReal mcintosh_rhs(const exact::Rational& x, const BigReal& s, int N, const EvalConfig& cfg);

}  // namespace seqfree::hires
