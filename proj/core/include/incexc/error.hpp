#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace incexc {

enum class ErrorCode {
  // input validation
  ParseError,
  InvalidParameter,
  NotNormalized,
  NegativeWeight,
  IndexOutOfRange,
  InvalidCertificate,
  // computation
  ZeroMass,
  BadK,
  InsufficientPrefix,
  NoCertificate,
  Diverges,
  // resource caps
  EventCapExceeded,
  WidthNotAchievable,
};

enum class ErrorCategory { Validation, Computation, Resource };

std::string_view error_name(ErrorCode code);
ErrorCategory error_category(ErrorCode code);

/// Library-wide exception. `name()` is the stable identifier ("BadK",
/// "NoCertificate", ...) surfaced by the command-line tool.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }
  ErrorCategory category() const noexcept { return error_category(code_); }

 private:
  ErrorCode code_;
};

}  // namespace incexc
