#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace agb {

// Every domain failure carries one of these codes. The CLI prints the name.
enum class Errc {
  EmptyGenerators,
  InvalidGenerator,
  GcdNotOne,
  LengthTooSmall,
  WrongCardinality,
  NotSubsetOfH,
  LowRangeMismatch,
  ClosureViolation,
  MalformedAbundance,
  MalformedChain,
  ResultInvalid,
  IndexOutOfRange,
  NotAMember,
  NotIsometryDual,
  DeltaOutOfRange,
  EnumerationCapExceeded,
  InternalInvariantViolation,
  UnsupportedField,
  DivisionByZero,
  DimensionMismatch,
  UnsupportedParameter,
  SchemaError,
  InvariantViolation,
  BudgetOutOfRange,
  DependentInput,
  ZeroPivot,
  BudgetExceeded,
};

constexpr std::string_view to_string(Errc e) noexcept {
  switch (e) {
    case Errc::EmptyGenerators: return "EmptyGenerators";
    case Errc::InvalidGenerator: return "InvalidGenerator";
    case Errc::GcdNotOne: return "GcdNotOne";
    case Errc::LengthTooSmall: return "LengthTooSmall";
    case Errc::WrongCardinality: return "WrongCardinality";
    case Errc::NotSubsetOfH: return "NotSubsetOfH";
    case Errc::LowRangeMismatch: return "LowRangeMismatch";
    case Errc::ClosureViolation: return "ClosureViolation";
    case Errc::MalformedAbundance: return "MalformedAbundance";
    case Errc::MalformedChain: return "MalformedChain";
    case Errc::ResultInvalid: return "ResultInvalid";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotAMember: return "NotAMember";
    case Errc::NotIsometryDual: return "NotIsometryDual";
    case Errc::DeltaOutOfRange: return "DeltaOutOfRange";
    case Errc::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case Errc::InternalInvariantViolation: return "InternalInvariantViolation";
    case Errc::UnsupportedField: return "UnsupportedField";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::UnsupportedParameter: return "UnsupportedParameter";
    case Errc::SchemaError: return "SchemaError";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::BudgetOutOfRange: return "BudgetOutOfRange";
    case Errc::DependentInput: return "DependentInput";
    case Errc::ZeroPivot: return "ZeroPivot";
    case Errc::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return to_string(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

}  // namespace agb
