#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tcshift {

enum class ErrorCode {
  AtomAtZero,
  NotProbability,
  InvalidWeight,
  InvalidMeasure,
  DegenerateMeasure,
  NotSubnormal,
  DepthExceeded,
  PreconditionViolated,
  InvalidFlat,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map it to a stable outcome.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tcshift
