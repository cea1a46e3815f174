#pragma once

#include "seqfree/hires/bigreal.hpp"

namespace seqfree::hires {

// Extra bits carried internally on top of the requested precision.
inline constexpr mpfr_prec_t kWorkingGuardBits = 64;
// Slack allowed when comparing a result with its precision-doubled rerun.
inline constexpr mpfr_prec_t kContractGuardBits = 8;

struct EvalConfig {
  mpfr_prec_t precision_bits = 256;
  // Relative size below which product factors (distance from 1) and series
  // terms are dropped.
  BigReal tail_threshold = ldexp(BigReal(1L, 64), -256);
  long max_terms = 2'000'000;

  static EvalConfig with_precision(mpfr_prec_t bits);
  // Throws InvalidArgument when an invariant is broken.
  void validate() const;
  // Same budget with kWorkingGuardBits more bits and a matching threshold.
  EvalConfig working() const;
  EvalConfig widened(mpfr_prec_t extra_bits) const;
  EvalConfig doubled() const { return with_precision(2 * precision_bits); }
};

}  // namespace seqfree::hires
