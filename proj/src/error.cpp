#include "seqfree/error.hpp"

namespace seqfree {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvertAtZero: return "InvertAtZero";
    case ErrorCode::ExpWithConstantTerm: return "ExpWithConstantTerm";
    case ErrorCode::TruncationViolation: return "TruncationViolation";
    case ErrorCode::NonConvergent: return "NonConvergent";
    case ErrorCode::TermCapExceeded: return "TermCapExceeded";
    case ErrorCode::PoleAtNonpositive: return "PoleAtNonpositive";
    case ErrorCode::InvalidRho: return "InvalidRho";
    case ErrorCode::ReconstructionFailed: return "ReconstructionFailed";
    case ErrorCode::DivisionByZeroBeta: return "DivisionByZeroBeta";
  }
  return "Unknown";
}

}  // namespace seqfree
