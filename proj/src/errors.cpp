#include "schroeder/errors.hpp"

namespace schroeder {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownToken: return "UnknownToken";
    case ErrorCode::OddHorizontalRun: return "OddHorizontalRun";
    case ErrorCode::NegativeHeight: return "NegativeHeight";
    case ErrorCode::NonzeroFinalHeight: return "NonzeroFinalHeight";
    case ErrorCode::NoMatch: return "NoMatch";
    case ErrorCode::NotDyck: return "NotDyck";
    case ErrorCode::NotHybrid: return "NotHybrid";
    case ErrorCode::NoHorizontal: return "NoHorizontal";
    case ErrorCode::WrongStartClass: return "WrongStartClass";
    case ErrorCode::InvalidMatching: return "InvalidMatching";
    case ErrorCode::HasKDistantCrossing: return "HasKDistantCrossing";
    case ErrorCode::NotLittleHybrid: return "NotLittleHybrid";
    case ErrorCode::NoSpecialEdge: return "NoSpecialEdge";
    case ErrorCode::NotHoriz: return "NotHoriz";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::Not231Avoiding: return "Not231Avoiding";
    case ErrorCode::NotSpecial: return "NotSpecial";
    case ErrorCode::DivisionByZeroConstantTerm: return "DivisionByZeroConstantTerm";
    case ErrorCode::NonSquareConstantTerm: return "NonSquareConstantTerm";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InternalMismatch: return "InternalMismatch";
    case ErrorCode::LengthTooLarge: return "LengthTooLarge";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(what), code_(code) {}

void fail(ErrorCode code, const std::string& detail) {
  std::string msg(error_name(code));
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  throw Error(code, msg);
}

}  // namespace schroeder
