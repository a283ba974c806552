#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace siegel {

enum class ErrorCode {
  SingularMatrix,
  NotSymmetric,
  OddDimension,
  DimensionMismatch,
  NonIntegerEntries,
  NotPositiveDefinite,
  NotSymplectic,
  NotInImage,
  NotInLocus,
  NotInGroup,
  MalformedBlockPattern,
  SingularDenominator,
  UnsupportedDimension,
  NoMatch,
  MultipleMatches,
  IterationLimit,
  ZeroVector,
  DivisionByZero,
  ModeMismatch,
  ParseError,
  TableError,
  InternalInconsistency,
  NonIntegerPullback,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (notably the CLI) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace siegel
