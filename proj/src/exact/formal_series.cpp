#include "seqfree/exact/formal_series.hpp"

#include <algorithm>
#include <optional>

#include "seqfree/error.hpp"

namespace seqfree::exact {

FormalSeries::FormalSeries(int low_exponent, std::vector<Rational> coefficients, int order)
    : low_(low_exponent), order_(order), coeffs_(std::move(coefficients)) {
  // Drop anything beyond the order; pad up to it.
  const long want = static_cast<long>(order_) - low_ + 1;
  if (want <= 0) {
    coeffs_.clear();
  } else {
    coeffs_.resize(static_cast<std::size_t>(want));
  }
  normalize();
}

FormalSeries FormalSeries::zero(int order) { return FormalSeries(order + 1, {}, order); }

FormalSeries FormalSeries::monomial(const Rational& c, int exponent, int order) {
  return FormalSeries(exponent, {c}, order);
}

FormalSeries FormalSeries::from_coefficients(std::vector<Rational> c, int order) {
  return FormalSeries(0, std::move(c), order);
}

void FormalSeries::normalize() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = order_ + 1;
    return;
  }
  if (first > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(first));
    low_ += static_cast<int>(first);
  }
}

Rational FormalSeries::coefficient(int e) const {
  if (e > order_)
    throw Error(ErrorCode::TruncationViolation,
                "coefficient of q^" + std::to_string(e) + " beyond order " + std::to_string(order_));
  if (e < low_) return 0;
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

FormalSeries FormalSeries::truncated(int order) const {
  if (order > order_)
    throw Error(ErrorCode::TruncationViolation,
                "cannot extend order " + std::to_string(order_) + " to " + std::to_string(order));
  return FormalSeries(low_, coeffs_, order);
}

FormalSeries FormalSeries::shifted(int shift) const {
  FormalSeries r = *this;
  r.low_ += shift;
  r.order_ += shift;
  return r;
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& rhs) {
  const int order = std::min(order_, rhs.order_);
  const int low = std::min(low_, rhs.low_);
  std::vector<Rational> out(order >= low ? static_cast<std::size_t>(order - low + 1) : 0);
  for (int e = low; e <= order; ++e) {
    auto& slot = out[static_cast<std::size_t>(e - low)];
    if (e >= low_ && e - low_ < static_cast<int>(coeffs_.size())) slot += coeffs_[static_cast<std::size_t>(e - low_)];
    if (e >= rhs.low_ && e - rhs.low_ < static_cast<int>(rhs.coeffs_.size()))
      slot += rhs.coeffs_[static_cast<std::size_t>(e - rhs.low_)];
  }
  *this = FormalSeries(low, std::move(out), order);
  return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& rhs) { return *this += -rhs; }

FormalSeries& FormalSeries::operator*=(const Rational& c) {
  if (c == 0) return *this = zero(order_);
  for (auto& x : coeffs_) x *= c;
  return *this;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
  const long ob = static_cast<long>(a.order_) + b.low_;
  const long oa = static_cast<long>(b.order_) + a.low_;
  const int order = static_cast<int>(std::min(oa, ob));
  if (a.is_zero() || b.is_zero()) return FormalSeries::zero(order);
  const int low = a.low_ + b.low_;
  if (order < low) return FormalSeries::zero(order);
  std::vector<Rational> out(static_cast<std::size_t>(order - low + 1));
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < a.coeffs_.size() && i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    const std::size_t jmax = std::min(b.coeffs_.size(), n - i);
    for (std::size_t j = 0; j < jmax; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return FormalSeries(low, std::move(out), order);
}

bool operator==(const FormalSeries& a, const FormalSeries& b) {
  return a.order_ == b.order_ && a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
}

std::vector<Rational> FormalSeries::dense() const {
  if (!is_power_series())
    throw Error(ErrorCode::InvalidArgument, "dense() needs a power series, lowest exponent is " + std::to_string(low_));
  std::vector<Rational> out(order_ >= 0 ? static_cast<std::size_t>(order_ + 1) : 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(low_) + i] = coeffs_[i];
  return out;
}

FormalSeries inverse(const FormalSeries& a) {
  if (a.is_zero()) throw Error(ErrorCode::InvertAtZero, "series has no nonzero coefficient up to its order");
  // a = c q^v (1 + u(q)); 1/a = q^{-v} (1/c) (1 + u)^{-1}.
  const int v = a.low_exponent();
  const int len = a.order() - v + 1;  // known coefficients of the unit part
  std::vector<Rational> u(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) u[static_cast<std::size_t>(i)] = a.coefficient(v + i);
  std::vector<Rational> r(static_cast<std::size_t>(len));
  const Rational inv0 = 1 / u[0];
  r[0] = inv0;
  for (int n = 1; n < len; ++n) {
    Rational acc = 0;
    for (int i = 1; i <= n; ++i)
      if (u[static_cast<std::size_t>(i)] != 0) acc += u[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(n - i)];
    r[static_cast<std::size_t>(n)] = -acc * inv0;
  }
  return FormalSeries(-v, std::move(r), a.order() - 2 * v);
}

FormalSeries exp(const FormalSeries& a) {
  if (!a.is_zero() && a.low_exponent() < 1)
    throw Error(ErrorCode::ExpWithConstantTerm, "exp needs a series with no terms at exponent <= 0");
  const int order = a.order();
  if (order < 0) return FormalSeries::zero(order);
  // n r_n = sum_{i=1}^{n} i a_i r_{n-i}
  std::vector<Rational> r(static_cast<std::size_t>(order + 1));
  r[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int i = std::max(1, a.low_exponent()); i <= n; ++i) {
      const Rational ai = a.coefficient(i);
      if (ai != 0) acc += Rational(i) * ai * r[static_cast<std::size_t>(n - i)];
    }
    r[static_cast<std::size_t>(n)] = acc / Rational(n);
  }
  return FormalSeries(0, std::move(r), order);
}

FormalSeries pow(const FormalSeries& a, unsigned n) {
  std::optional<FormalSeries> result;
  FormalSeries base = a;
  while (n > 0) {
    if (n & 1U) result = result ? *result * base : base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result ? *result : FormalSeries::one(a.order());
}

FormalSeries series_arith(const FormalSeries& a, const FormalSeries& b, SeriesOp op) {
  switch (op) {
    case SeriesOp::add: return a + b;
    case SeriesOp::mul: return a * b;
    case SeriesOp::invert: return inverse(a);
    case SeriesOp::exp: return exp(a);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown series operation");
}

nlohmann::json to_json(const FormalSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (int e = s.low_exponent(); e <= s.order(); ++e) {
    const Rational c = s.coefficient(e);
    if (c != 0) terms.push_back({e, to_string(c)});
  }
  return terms;
}

FormalSeries series_from_json(const nlohmann::json& terms, int order) {
  if (!terms.is_array()) throw Error(ErrorCode::InvalidArgument, "series JSON must be an array");
  FormalSeries out = FormalSeries::zero(order);
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 2) throw Error(ErrorCode::InvalidArgument, "series term must be [exponent, \"p/q\"]");
    out += FormalSeries::monomial(parse_rational(t[1].get<std::string>()), t[0].get<int>(), order);
  }
  return out;
}

}  // namespace seqfree::exact
