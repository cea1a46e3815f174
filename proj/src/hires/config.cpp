#include "seqfree/hires/config.hpp"

#include "seqfree/error.hpp"

namespace seqfree::hires {

EvalConfig EvalConfig::with_precision(mpfr_prec_t bits) {
  EvalConfig c;
  c.precision_bits = bits;
  c.tail_threshold = ldexp(BigReal(1L, 64), -bits);
  return c;
}

void EvalConfig::validate() const {
  if (precision_bits < 64) throw Error(ErrorCode::InvalidArgument, "precision_bits must be >= 64");
  if (max_terms < 1) throw Error(ErrorCode::InvalidArgument, "max_terms must be >= 1");
  if (!(tail_threshold > 0L) || tail_threshold > ldexp(BigReal(1L, 64), -precision_bits))
    throw Error(ErrorCode::InvalidArgument, "tail_threshold must lie in (0, 2^-precision_bits]");
}

EvalConfig EvalConfig::widened(mpfr_prec_t extra_bits) const {
  EvalConfig c = *this;
  c.precision_bits += extra_bits;
  c.tail_threshold = ldexp(tail_threshold, -extra_bits);
  return c;
}

EvalConfig EvalConfig::working() const { return widened(kWorkingGuardBits); }

}  // namespace seqfree::hires
