#pragma once

#include <json.hpp>
#include <vector>

#include "seqfree/exact/rational.hpp"

namespace seqfree::exact {

/// Truncated Laurent series in q with exact coefficients.
///
/// Coefficients are known for every exponent <= order(); anything above the
/// order is unknown rather than zero, and reading it throws
/// TruncationViolation. Storage is dense from the lowest nonzero exponent up
/// to the order, so low_exponent() is also the valuation. The zero series
/// stores nothing and reports low_exponent() == order() + 1.
///
/// Products track truncation with the valuations of both operands:
///   order(a*b) = min(order(a) + val(b), order(b) + val(a)),
/// which reduces to min(order(a), order(b)) for power series with nonzero
/// constant terms.
class FormalSeries {
 public:
  FormalSeries(int low_exponent, std::vector<Rational> coefficients, int order);

  static FormalSeries zero(int order);
  static FormalSeries one(int order) { return monomial(1, 0, order); }
  static FormalSeries monomial(const Rational& c, int exponent, int order);
  // Dense power series c[0] + c[1] q + ..., truncated at order.
  static FormalSeries from_coefficients(std::vector<Rational> c, int order);

  int order() const { return order_; }
  int low_exponent() const { return low_; }
  bool is_zero() const { return coeffs_.empty(); }
  // No nonzero coefficient at a negative exponent.
  bool is_power_series() const { return low_ >= 0; }

  // Coefficient of q^e; zero below the stored range.
  Rational coefficient(int e) const;
  Rational operator[](int e) const { return coefficient(e); }

  // Copy with a lower truncation order (must not exceed the current one).
  FormalSeries truncated(int order) const;
  // Multiply by q^shift.
  FormalSeries shifted(int shift) const;

  FormalSeries& operator+=(const FormalSeries& rhs);
  FormalSeries& operator-=(const FormalSeries& rhs);
  FormalSeries& operator*=(const Rational& c);

  friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
  friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }
  friend FormalSeries operator-(FormalSeries a) { return a *= Rational(-1); }
  friend FormalSeries operator*(FormalSeries a, const Rational& c) { return a *= c; }
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
  friend bool operator==(const FormalSeries& a, const FormalSeries& b);

  // Dense coefficients for exponents 0..order(); requires a power series.
  std::vector<Rational> dense() const;

 private:
  void normalize();

  int low_;
  int order_;
  std::vector<Rational> coeffs_;
};

enum class SeriesOp { add, mul, invert, exp };

FormalSeries inverse(const FormalSeries& a);
// exp(a) for a series without constant or negative-exponent terms.
FormalSeries exp(const FormalSeries& a);
FormalSeries pow(const FormalSeries& a, unsigned n);

// Dispatch form; b is ignored for invert and exp.
FormalSeries series_arith(const FormalSeries& a, const FormalSeries& b, SeriesOp op);

// JSON array of [exponent, "p/q"] pairs for the nonzero coefficients.
nlohmann::json to_json(const FormalSeries& s);
FormalSeries series_from_json(const nlohmann::json& terms, int order);

}  // namespace seqfree::exact
