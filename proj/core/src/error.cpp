#include "incexc/error.hpp"

namespace incexc {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidCertificate: return "InvalidCertificate";
    case ErrorCode::ZeroMass: return "ZeroMass";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::InsufficientPrefix: return "InsufficientPrefix";
    case ErrorCode::NoCertificate: return "NoCertificate";
    case ErrorCode::WidthNotAchievable: return "WidthNotAchievable";
    case ErrorCode::Diverges: return "Diverges";
    case ErrorCode::EventCapExceeded: return "EventCapExceeded";
  }
  return "UnknownError";
}

ErrorCategory error_category(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidParameter:
    case ErrorCode::NotNormalized:
    case ErrorCode::NegativeWeight:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::InvalidCertificate:
      return ErrorCategory::Validation;
    case ErrorCode::EventCapExceeded:
    case ErrorCode::WidthNotAchievable:
      return ErrorCategory::Resource;
    default:
      return ErrorCategory::Computation;
  }
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

}  // namespace incexc
