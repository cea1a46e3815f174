#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "seqfree/error.hpp"
#include "seqfree/qseries/qseries.hpp"

using namespace seqfree;
using namespace seqfree::qseries;
using exact::Rational;

namespace {

FormalSeries dense(std::vector<long> c, int order) {
  std::vector<Rational> r(c.begin(), c.end());
  return FormalSeries::from_coefficients(std::move(r), order);
}

// Counts partitions of n with no k consecutive part sizes by listing them.
long brute_force_count(int n, int k) {
  long count = 0;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      std::set<int> sizes(parts.begin(), parts.end());
      for (int j : sizes) {
        int run = 0;
        while (run < k && sizes.count(j + run)) ++run;
        if (run == k) return;
      }
      ++count;
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(rest - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
  return count;
}

}  // namespace

TEST_CASE("pochhammer_series") {
  CHECK(pochhammer_series(1, 1, 12) == dense({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1}, 12));
  CHECK(pochhammer_series(0, 1, 7).is_zero());
  CHECK(pochhammer_series(2, 3, 2) == dense({1, 0, -1}, 2));
  CHECK(pochhammer_series(-2, 1, 6).is_zero());
  // (q^{-2};q^3)_inf = (1 - q^{-2}) (q;q^3)_inf
  const FormalSeries neg = pochhammer_series(-2, 3, 6);
  CHECK(neg.low_exponent() == -2);
  const FormalSeries expected = FormalSeries(-2, {-1, 0, 1}, 8) * pochhammer_series(1, 3, 8);
  CHECK(neg == expected.truncated(6));
}

TEST_CASE("finite pochhammer") {
  CHECK(finite_pochhammer_series(1, 1, 2, 5) == dense({1, -1, -1, 1, 0, 0}, 5));
  CHECK(finite_pochhammer_series(3, 3, 0, 4) == FormalSeries::one(4));
}

TEST_CASE("theta_series") {
  CHECK(theta_series(0, 1, 9) == dense({1, -2, 0, 0, 2, 0, 0, 0, 0, -2}, 9));
  CHECK(theta_series(1, 1, 15).is_zero());
  const FormalSeries t = theta_series(2, 3, 5);
  CHECK(t.coefficient(0) == 1);
  CHECK(t.coefficient(1) == -1);
  CHECK(t.coefficient(5) == -1);
  CHECK(t.coefficient(2) == 0);
}

TEST_CASE("theta product expansion") {
  CHECK(theta_product_check(0, 1, 30));
  CHECK(theta_product_check(2, 3, 40));
  CHECK(theta_product_check(1, 1, 20));
  CHECK(theta_product_check(-5, 2, 30));
  CHECK(theta_product_check(6, 3, 30));
}

TEST_CASE("partition oracle") {
  CHECK(Gk_series_oracle(2, 4) == dense({1, 1, 2, 2, 4}, 4));
  CHECK(Gk_series_oracle(2, 5).coefficient(5) == 4);
  CHECK(Gk_series_oracle(3, 2) == dense({1, 1, 2}, 2));
  for (int k = 2; k <= 5; ++k) {
    const FormalSeries g = Gk_series_oracle(k, 20);
    for (int n = 0; n <= 20; ++n) CHECK(g.coefficient(n) == brute_force_count(n, k));
  }
  CHECK_THROWS_AS(Gk_series_oracle(1, 5), Error);
}

TEST_CASE("gk from oracle") {
  CHECK(gk_from_oracle(2, 0) == FormalSeries::one(0));
  CHECK(gk_series_andrews(2, 0) == FormalSeries::one(0));
}

TEST_CASE("Andrews theta-sum agrees with the oracle") {
  for (int k = 2; k <= 5; ++k) {
    const FormalSeries a = gk_series_andrews(k, 60);
    CHECK(a.is_power_series());
    CHECK(a.coefficient(0) == 1);
    CHECK(a == gk_from_oracle(k, 60));
  }
  CHECK(gk_series_andrews(6, 30) == gk_from_oracle(6, 30));
  try {
    gk_series_andrews(1, 10);
    FAIL("expected InvalidK");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidK);
  }
}

TEST_CASE("vanishing summands") {
  CHECK_FALSE(andrews_summand_vanishes(2, 0));
  CHECK_FALSE(andrews_summand(2, 0, 10).is_zero());
  for (int k = 2; k <= 5; ++k) {
    for (int m = 1; m <= 2 * (k + 1); ++m) {
      const bool skip = andrews_summand_vanishes(k, m);
      CHECK(skip == (m % (k + 1) == 0));
      if (skip) CHECK(andrews_summand(k, m, 40).is_zero());
    }
  }
}

TEST_CASE("mock theta identity for g_2") {
  CHECK(chi_series(0) == FormalSeries::one(0));
  CHECK(chi_series(1) == dense({1, 1}, 1));
  CHECK(g2_mock_theta_series(40) == gk_series_andrews(2, 40));
  CHECK(g2_mock_theta_series(40) * exact::inverse(pochhammer_series(1, 1, 40)) ==
        Gk_series_oracle(2, 40));
}

TEST_CASE("Euler identities") {
  CHECK(euler_identity_check(1));
  CHECK(euler_identity_check(10));
  CHECK(euler_identity_check(25));
}
