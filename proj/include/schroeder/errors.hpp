#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schroeder {

enum class ErrorCode {
  UnknownToken,
  OddHorizontalRun,
  NegativeHeight,
  NonzeroFinalHeight,
  NoMatch,
  NotDyck,
  NotHybrid,
  NoHorizontal,
  WrongStartClass,
  InvalidMatching,
  HasKDistantCrossing,
  NotLittleHybrid,
  NoSpecialEdge,
  NotHoriz,
  InvalidPermutation,
  Not231Avoiding,
  NotSpecial,
  DivisionByZeroConstantTerm,
  NonSquareConstantTerm,
  OutOfRange,
  InternalMismatch,
  LengthTooLarge,
};

/// Stable identifier of an error code, e.g. "NotHybrid".
std::string_view error_name(ErrorCode code) noexcept;

/// Domain error carrying a machine-readable code. Every failing operation
/// in the library throws this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail = {});

}  // namespace schroeder
