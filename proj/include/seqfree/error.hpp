#pragma once

#include <stdexcept>
#include <string>

namespace seqfree {

enum class ErrorCode {
  InvalidK,
  InvalidArgument,
  InvertAtZero,
  ExpWithConstantTerm,
  TruncationViolation,
  NonConvergent,
  TermCapExceeded,
  PoleAtNonpositive,
  InvalidRho,
  ReconstructionFailed,
  DivisionByZeroBeta,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure surfaced by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void require_valid_k(int k) {
  if (k < 2) throw Error(ErrorCode::InvalidK, "k must be >= 2, got " + std::to_string(k));
}

}  // namespace seqfree
