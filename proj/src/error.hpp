#pragma once

#include <stdexcept>
#include <string>

namespace charposet {

enum class ErrorCode {
  // input / ingestion
  ParseError,
  IoError,
  InvalidInput,
  NotAssociative,
  NoIdentity,
  NoInverse,
  UnknownFamily,
  // resource caps
  ClosureTooLarge,
  OrderCapExceeded,
  LatticeTooLarge,
  // domain preconditions
  EmptyInput,
  NotNormal,
  NotAbelian,
  NotASubgroup,
  ConductorMismatch,
  InvalidExponent,
  NotPGroup,
  // witness construction
  PreconditionFailed,
  // internal consistency (bug signals)
  NotRationalInteger,
  NotDivisible,
  IncompleteIrr,
  NoConstituent,
  ChoiceExhausted,
  LemmaViolation,
  NotMultipleOfLinear,
  BoundViolation,
  CriterionViolation,
};

/// Coarse grouping used for process exit codes.
enum class ErrorClass { Input, Domain, Witness, Internal };

const char* to_string(ErrorCode code) noexcept;
ErrorClass classify(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace charposet
