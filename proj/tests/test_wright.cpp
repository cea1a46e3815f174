#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "seqfree/error.hpp"
#include "seqfree/wright/wright.hpp"

using namespace seqfree;
using namespace seqfree::wright;
using namespace seqfree::hires;
using exact::make_rational;
using exact::Rational;

namespace {

const EvalConfig cfg = EvalConfig::with_precision(256);

BigReal num(const char* text, mpfr_prec_t bits = 512) { return BigReal::parse(text, bits); }
BigReal num(double v) { return BigReal(v, 512); }

bool close_rel(const BigReal& a, const BigReal& b, long bits) {
  return abs(a - b) <= ldexp(max(abs(a), abs(b)), -bits);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

double b_direct(int k, int j) {
  return (k + 1.0) / (k * M_PI * std::tgamma(j + 1.0)) * (j % 2 ? 1 : -1) * std::sin(M_PI * j * (k - 1.0) / k) *
         std::tgamma(j * (k + 1.0) / k);
}

// phi(3/4, 1; .) at the argument tied to q = e^{-s} for k = 3.
// The argument is built at 'bits' because the summation cancels heavily.
BigComplex zagier_argument(const BigReal& s_in, mpfr_prec_t bits = 8192) {
  const BigReal s = s_in.with_precision(bits);
  const BigReal modulus = exp(log(BigReal(4L, bits)) * BigReal(make_rational(3, 4), bits)) / 3L *
                          pow(s, -BigReal(make_rational(1, 4), bits));
  return expi(pi(bits) * BigReal(make_rational(3, 4), bits)) * modulus;
}

}  // namespace

TEST_CASE("wright_phi small arguments") {
  const BigComplex zero(BigReal(0L, 256));
  CHECK(wright_phi({make_rational(3, 4), 1}, zero, cfg).re == 1L);
  const BigReal z = num("1e-6");
  const BigComplex v = wright_phi({make_rational(1, 2), 1}, BigComplex(z), cfg);
  const BigReal first_two = z / sqrt(pi(512)) + 1L;
  CHECK(abs(v.re - first_two) <= z * z);
  CHECK(v.im.is_zero());
  // rho = 0: phi(0, beta; z) = e^z / Gamma(beta).
  const BigComplex e = wright_phi({0, 2}, BigComplex(num("1.5")), cfg);
  CHECK(close_rel(e.re, exp(num("1.5")), 250));
  // rho = 1/2: phi(1/2, 1; -z) = erfc(z/2) and phi(1/2, 1/2; -z) = e^{-z^2/4}/sqrt(pi).
  const BigComplex m = wright_phi({make_rational(1, 2), 1}, BigComplex(num("-1.3")), cfg);
  CHECK(std::fabs(m.re.to_double() - std::erfc(0.65)) < 1e-15);
  const BigComplex g = wright_phi({make_rational(1, 2), make_rational(1, 2)}, BigComplex(num("-1.3")), cfg);
  CHECK(close_rel(g.re, exp(-num("0.4225")) / sqrt(pi(512)), 250));
  CHECK(code_of([&] { wright_phi({1, 1}, zero, cfg); }) == ErrorCode::NonConvergent);
}

TEST_CASE("wright_phi_moment") {
  const WrightParams p{make_rational(3, 4), 1};
  const BigComplex z(num("0.7"), num("-1.3"));
  const BigComplex a = wright_phi_moment(0, p, z, cfg), b = wright_phi(p, z, cfg);
  CHECK(a.re == b.re);
  CHECK(a.im == b.im);
  CHECK(wright_phi_moment(1, p, BigComplex(BigReal(0L, 256)), cfg).is_zero());
  const BigReal m2 = wright_phi_moment(2, p, BigComplex(BigReal(1L, 256)), cfg).re;
  const BigReal m2_hi = wright_phi_moment(2, p, BigComplex(BigReal(1L, 256)), cfg.doubled()).re;
  CHECK(close_rel(m2, m2_hi, 256 - hires::kContractGuardBits));
  // Independent double-precision partial sum.
  double direct = 0;
  for (int n = 1; n < 60; ++n) {
    const double x = 1 - 0.75 * n;
    const double rg = (x <= 0 && x == std::floor(x)) ? 0.0 : 1 / std::tgamma(x);
    direct += double(n) * n / std::tgamma(n + 1.0) * rg;
  }
  CHECK(std::fabs(m2.to_double() - direct) < 1e-13);
}

TEST_CASE("b_k coefficients") {
  CHECK(b_k_coeff(3, 3, cfg).is_zero());
  CHECK(close_rel(b_k_coeff(2, 1, cfg), BigReal(3L, 256) / (sqrt(pi(256)) * 4L), 250));
  CHECK(std::fabs(b_k_coeff(2, 1, cfg).to_double() - 0.423142) < 1e-6);
  CHECK(std::fabs(b_k_coeff(3, 1, cfg).to_double() - 0.32824) < 5e-5);
  for (int k = 2; k <= 6; ++k) {
    for (int j = 1; j <= 20; ++j) {
      CAPTURE(k);
      CAPTURE(j);
      const BigReal b = b_k_coeff(k, j, cfg);
      CHECK(b.is_zero() == (j % k == 0));
      if (j % k) CHECK(std::fabs(b.to_double() / b_direct(k, j) - 1) < 1e-12);
    }
  }
}

TEST_CASE("Re phi expansion") {
  CHECK(re_phi_expansion(make_rational(3, 4), num("5"), 1, cfg) == BigReal(make_rational(2, 3), 256));
  CHECK(re_phi_expansion(make_rational(1, 2), num("3"), 6, cfg) == 1L);
  CHECK(code_of([] { re_phi_expansion(make_rational(2, 5), num("3"), 2, cfg); }) == ErrorCode::InvalidRho);
  CHECK(code_of([] { re_phi_expansion(1, num("3"), 2, cfg); }) == ErrorCode::InvalidRho);
  CHECK(re_phi_remainder_exponent(make_rational(3, 4), 3) == 4);
  // Specialization rho = k/(k+1) against the W_0 form.
  for (int k = 2; k <= 5; ++k) {
    for (int L = 1; L <= 7; ++L) {
      for (const char* w : {"0.8", "3", "17.5"}) {
        CAPTURE(k);
        CAPTURE(L);
        CHECK(close_rel(re_phi_expansion(make_rational(k, k + 1), num(w), L, cfg),
                        W0_expansion(k, L, num(w), cfg) / 2L, 250));
      }
    }
  }
}

TEST_CASE("Re phi expansion against direct summation") {
  const Rational rho = make_rational(3, 4);
  std::vector<double> C;
  for (const char* s : {"0.01", "0.000625", "0.0000390625"}) {
    const BigComplex z = zagier_argument(num(s));
    const BigReal zr = abs(z);
    const BigReal d = abs(wright_phi({rho, 1}, z, cfg).re - re_phi_expansion(rho, zr, 3, cfg));
    C.push_back((d * pow(zr, 4L)).to_double());
  }
  // s shrinks 16-fold, so |z| doubles between consecutive points.
  for (std::size_t i = 1; i < C.size(); ++i) {
    CHECK(C[i] / C[i - 1] >= 0.25);
    CHECK(C[i] / C[i - 1] <= 4.0);
  }
}

TEST_CASE("Zagier's k = 3 asymptotics from phi") {
  const mpfr_prec_t bits = 512;
  const BigReal c1 = exp(-log(BigReal(3L, bits)) / 6L) * gamma(BigReal(make_rational(1, 3), bits)) / (pi(bits) * 8L);
  const BigReal c2 =
      exp(log(BigReal(3L, bits)) / 6L) * gamma(BigReal(make_rational(2, 3), bits)) / (pi(bits) * 32L);
  for (const char* s_text : {"0.01", "0.001"}) {
    const BigReal s = num(s_text);
    const BigReal half_re = wright_phi({make_rational(3, 4), 1}, zagier_argument(s), cfg).re / 2L;
    const BigReal approx = BigReal(make_rational(1, 3), bits) + c1 * pow(s, BigReal(make_rational(1, 3), bits)) +
                           c2 * 5L * pow(s, BigReal(make_rational(2, 3), bits));
    CAPTURE(s_text);
    CHECK(abs(half_re - approx) < s);
  }
}

TEST_CASE("W_j numerics") {
  const BigReal w3 = W_j_num(3, 0, num("10"), cfg);
  CHECK(abs(w3 - BigReal(make_rational(4, 3), 256)) < BigReal(0.02, 64));
  CHECK(abs(w3 - BigReal(make_rational(4, 3), 256)) < abs(W_j_num(3, 0, num("5"), cfg) - BigReal(make_rational(4, 3), 256)));
  CHECK(abs(W_j_num(2, 0, num("20"), cfg) - BigReal(make_rational(3, 2), 256)) < BigReal(0.005, 64));
  const auto all = W_j_nums(4, 2, num("3.5"), cfg);
  for (unsigned j = 0; j <= 2; ++j) CHECK(all[j] == W_j_num(4, j, num("3.5"), cfg));
  CHECK(code_of([] { W_j_num(3, 0, num("-1"), cfg); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("W_j expansions") {
  CHECK(W0_expansion(3, 1, num("7"), cfg) == BigReal(make_rational(4, 3), 256));
  const BigReal w = num("6");
  const BigReal first = BigReal(make_rational(-4, 3), 512) * b_k_coeff(3, 1, cfg) *
                        pow(w, -BigReal(make_rational(4, 3), 512));
  CHECK(close_rel(Wj_expansion(3, 1, 2, w, cfg), first, 250));
  CHECK(Wj_expansion(3, 2, 1, w, cfg).is_zero());
  CHECK(Wj_remainder_exponent(2, 4) == 6);
  CHECK(code_of([] { Wj_expansion(1, 0, 2, num("3"), cfg); }) == ErrorCode::InvalidK);
  // k = 2, L = 4 at w = 30: the next nonzero term is l = 5.
  const BigReal w30 = num("30");
  CHECK(abs(W_j_num(2, 0, w30, cfg) - W0_expansion(2, 4, w30, cfg)) < pow(w30, -6L));
}

TEST_CASE("degenerate direction stays bounded") {
  // Re phi stays O(1) while |phi| is exponentially large in 1/s.
  const int k = 3;
  std::vector<double> log_ratio;
  for (const char* s_text : {"0.05", "0.02", "0.01"}) {
    const BigReal s = num(s_text);
    const BigComplex v = wright_phi({make_rational(3, 4), 1}, zagier_argument(s), cfg);
    CHECK(abs(v.re).to_double() < 1.0);
    const double sd = s.to_double();
    log_ratio.push_back(std::log(abs(v).to_double()) - 1.0 / (k * (k + 1) * sd) - 0.5 * std::log(sd));
  }
  const auto [lo, hi] = std::minmax_element(log_ratio.begin(), log_ratio.end());
  CHECK(*hi - *lo < std::log(100.0));
}

TEST_CASE("W_j remainder order on doubling grids") {
  struct Grid {
    int k;
    int L;
    std::vector<const char*> ws;
  };
  // L is chosen with k not dividing L so the first omitted term is present.
  const Grid grids[] = {{2, 3, {"5", "10", "20"}}, {3, 2, {"5", "10", "20"}}, {4, 2, {"3.5", "7"}}};
  for (const auto& g : grids) {
    std::vector<std::vector<double>> C(3);
    for (const char* wt : g.ws) {
      const BigReal w = num(wt);
      const auto W = W_j_nums(g.k, 2, w, cfg);
      const BigReal scale = pow(w, BigReal(Wj_remainder_exponent(g.k, g.L), 512));
      for (unsigned j = 0; j <= 2; ++j)
        C[j].push_back((abs(W[j] - Wj_expansion(g.k, j, g.L, w, cfg)) * scale).to_double());
    }
    for (unsigned j = 0; j <= 2; ++j)
      for (std::size_t i = 1; i < C[j].size(); ++i) {
        INFO("k=" << g.k << " j=" << j << " C=" << C[j][i - 1] << " -> " << C[j][i]);
        CHECK(C[j][i] / C[j][i - 1] >= 0.25);
        CHECK(C[j][i] / C[j][i - 1] <= 4.0);
      }
  }
}
