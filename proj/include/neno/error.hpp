#pragma once

#include <stdexcept>
#include <string>

namespace neno {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  EmptyValue,
  WrongAlphabet,
  DisjointnessViolated,
  MixedLengths,
  SizeTooSmall,
  OutOfDomain,
  WitnessMismatch,
  WrongSize,
  NotInX,
  RepairFailed,
  MixedSizes,
  NotNonOverlapping,
  FrameIncompatible,
  WorkLimitExceeded,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto its exit-code contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace neno
