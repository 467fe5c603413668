#include "realmult/errors.hpp"

namespace realmult {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::CompositumTooLarge: return "CompositumTooLarge";
    case ErrorCode::DegenerateRational: return "DegenerateRational";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::NotPeriodic: return "NotPeriodic";
    case ErrorCode::NoPerronRoot: return "NoPerronRoot";
    case ErrorCode::EmptyModule: return "EmptyModule";
    case ErrorCode::RationalSlope: return "RationalSlope";
    case ErrorCode::InvalidDiscriminant: return "InvalidDiscriminant";
    case ErrorCode::WrongOrder: return "WrongOrder";
    case ErrorCode::NotAnosov: return "NotAnosov";
    case ErrorCode::PositivityNotAchieved: return "PositivityNotAchieved";
    case ErrorCode::NonSeparating: return "NonSeparating";
    case ErrorCode::ClassCountMismatch: return "ClassCountMismatch";
    case ErrorCode::DiagnosticSkipped: return "DiagnosticSkipped";
    case ErrorCode::CacheCorrupt: return "CacheCorrupt";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace realmult
