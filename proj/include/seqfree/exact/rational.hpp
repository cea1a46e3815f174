#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace seqfree::exact {

// Exact unbounded rational. mpq_class keeps values canonical after every
// arithmetic operation; the factories below canonicalize on construction.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// "p/q" when the denominator is not 1, otherwise "p".
std::string to_string(const Rational& r);

// Accepts "p/q", "p", and plain decimals such as "-0.025" or "1e-3".
Rational parse_rational(std::string_view text);

Rational pow(const Rational& base, unsigned exponent);
Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);

}  // namespace seqfree::exact
