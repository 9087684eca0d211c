#include "okbody/errors.hpp"

namespace okbody {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotNef: return "NotNef";
    case ErrorCode::NotInterior: return "NotInterior";
    case ErrorCode::NonIntegralAll: return "NonIntegralAll";
    case ErrorCode::SpanDeficiency: return "SpanDeficiency";
    case ErrorCode::BoxTooSmall: return "BoxTooSmall";
    case ErrorCode::Unstable: return "Unstable";
    case ErrorCode::ChamberResolutionFailure: return "ChamberResolutionFailure";
    case ErrorCode::VerificationFailure: return "VerificationFailure";
    case ErrorCode::NoMatch: return "NoMatch";
    case ErrorCode::Ambiguous: return "Ambiguous";
    case ErrorCode::NotAffine: return "NotAffine";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput:
    case ErrorCode::NotNef:
    case ErrorCode::NotInterior:
    case ErrorCode::NonIntegralAll:
      return 2;
    case ErrorCode::SpanDeficiency:
    case ErrorCode::BoxTooSmall:
    case ErrorCode::Unstable:
    case ErrorCode::ChamberResolutionFailure:
      return 3;
    case ErrorCode::VerificationFailure:
    case ErrorCode::NoMatch:
    case ErrorCode::Ambiguous:
    case ErrorCode::NotAffine:
    case ErrorCode::Internal:
      return 4;
  }
  return 4;
}

}  // namespace okbody
