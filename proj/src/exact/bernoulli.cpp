#include "seqfree/exact/bernoulli.hpp"

#include <mutex>

namespace seqfree::exact {

namespace {

// Grows on demand from sum_{i<=m} C(m+1,i) B_i = 0. Entries are never
// modified once appended, so returned copies are stable.
class BernoulliTable {
 public:
  std::vector<Rational> upto(unsigned m) {
    std::lock_guard lock(mutex_);
    if (table_.empty()) table_.push_back(1);
    while (table_.size() <= m) {
      const unsigned n = static_cast<unsigned>(table_.size());
      Rational acc = 0;
      for (unsigned i = 0; i < n; ++i) acc += Rational(binomial(n + 1, i)) * table_[i];
      table_.push_back(-acc / Rational(n + 1));
    }
    return {table_.begin(), table_.begin() + m + 1};
  }

 private:
  std::mutex mutex_;
  std::vector<Rational> table_;
};

BernoulliTable& table() {
  static BernoulliTable t;
  return t;
}

}  // namespace

std::vector<Rational> bernoulli_numbers(unsigned m) { return table().upto(m); }

Rational bernoulli_number(unsigned m) { return table().upto(m).back(); }

Polynomial bernoulli_polynomial(unsigned m) {
  const auto b = bernoulli_numbers(m);
  std::vector<Rational> c(m + 1);
  for (unsigned i = 0; i <= m; ++i) c[m - i] = Rational(binomial(m, i)) * b[i];
  return Polynomial(std::move(c));
}

}  // namespace seqfree::exact
