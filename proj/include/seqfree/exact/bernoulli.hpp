#pragma once

#include <vector>

#include "seqfree/exact/polynomial.hpp"
#include "seqfree/exact/rational.hpp"

namespace seqfree::exact {

// Convention B_1 = -1/2, so that B_m = B_m(0).
Rational bernoulli_number(unsigned m);

// B_0 .. B_m inclusive.
std::vector<Rational> bernoulli_numbers(unsigned m);

// B_m(x) = sum_i C(m,i) B_i x^{m-i}.
Polynomial bernoulli_polynomial(unsigned m);

}  // namespace seqfree::exact
