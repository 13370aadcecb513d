#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hilb {

/// Failure categories raised by the library. The CLI maps the category
/// (parse / precondition / internal) onto its exit codes.
enum class ErrorCode {
  // parse
  Parse,
  // algebra-core
  AmbientMismatch,
  RingMismatch,
  NonUnitDivision,
  SingularMatrix,
  UnassignedParameter,
  // monomial ideals
  InvalidOrderIdeal,
  NotQuasiStable,
  InfiniteColength,
  // marked bases
  HeadMismatch,
  TailOutsideN,
  NonTermination,
  NotABasis,
  // tangent
  ModularDisagreement,
  BaseMismatch,
  NotFlat,
  // oracle
  NotZeroDimensional,
  // families
  ZeroParameters,
  DegenerateComplement,
  DiscriminantZero,
  B4Zero,
  PointInSupport,
  DuplicatePoint,
  QuasiStableNotFound,
  NotComplementary,
  UnsupportedChart,
  // generic
  InvalidArgument,
  Internal,
};

enum class ErrorCategory { Parse, Precondition, Internal };

constexpr std::string_view error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NonUnitDivision: return "NonUnitDivision";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::UnassignedParameter: return "UnassignedParameter";
    case ErrorCode::InvalidOrderIdeal: return "InvalidOrderIdeal";
    case ErrorCode::NotQuasiStable: return "NotQuasiStable";
    case ErrorCode::InfiniteColength: return "InfiniteColength";
    case ErrorCode::HeadMismatch: return "HeadMismatch";
    case ErrorCode::TailOutsideN: return "TailOutsideN";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::NotABasis: return "NotABasis";
    case ErrorCode::ModularDisagreement: return "ModularDisagreement";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::NotFlat: return "NotFlat";
    case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorCode::ZeroParameters: return "ZeroParameters";
    case ErrorCode::DegenerateComplement: return "DegenerateComplement";
    case ErrorCode::DiscriminantZero: return "DiscriminantZero";
    case ErrorCode::B4Zero: return "B4Zero";
    case ErrorCode::PointInSupport: return "PointInSupport";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::QuasiStableNotFound: return "QuasiStableNotFound";
    case ErrorCode::NotComplementary: return "NotComplementary";
    case ErrorCode::UnsupportedChart: return "UnsupportedChart";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

constexpr ErrorCategory error_category(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse: return ErrorCategory::Parse;
    case ErrorCode::NonTermination:
    case ErrorCode::ModularDisagreement:
    case ErrorCode::QuasiStableNotFound:
    case ErrorCode::Internal: return ErrorCategory::Internal;
    default: return ErrorCategory::Precondition;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return error_category(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace hilb
