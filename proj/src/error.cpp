#include "neno/error.hpp"

namespace neno {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptyValue: return "EmptyValue";
    case ErrorCode::WrongAlphabet: return "WrongAlphabet";
    case ErrorCode::DisjointnessViolated: return "DisjointnessViolated";
    case ErrorCode::MixedLengths: return "MixedLengths";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::WitnessMismatch: return "WitnessMismatch";
    case ErrorCode::WrongSize: return "WrongSize";
    case ErrorCode::NotInX: return "NotInX";
    case ErrorCode::RepairFailed: return "RepairFailed";
    case ErrorCode::MixedSizes: return "MixedSizes";
    case ErrorCode::NotNonOverlapping: return "NotNonOverlapping";
    case ErrorCode::FrameIncompatible: return "FrameIncompatible";
    case ErrorCode::WorkLimitExceeded: return "WorkLimitExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace neno
