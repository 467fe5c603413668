#pragma once

#include <stdexcept>
#include <string>

namespace realmult {

enum class ErrorCode {
  InvalidArgument,
  ZeroPolynomial,
  DegreeTooLarge,
  FieldMismatch,
  CompositumTooLarge,
  DegenerateRational,
  WrongDegree,
  NotPeriodic,
  NoPerronRoot,
  EmptyModule,
  RationalSlope,
  InvalidDiscriminant,
  WrongOrder,
  NotAnosov,
  PositivityNotAchieved,
  NonSeparating,
  ClassCountMismatch,
  DiagnosticSkipped,
  CacheCorrupt,
  ParseError,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// callers (the pipeline in particular) can record it instead of aborting.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace realmult
