#include "error.hpp"

namespace charposet {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::ClosureTooLarge: return "ClosureTooLarge";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::LatticeTooLarge: return "LatticeTooLarge";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::ConductorMismatch: return "ConductorMismatch";
    case ErrorCode::InvalidExponent: return "InvalidExponent";
    case ErrorCode::NotPGroup: return "NotPGroup";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotRationalInteger: return "NotRationalInteger";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::IncompleteIrr: return "IncompleteIrr";
    case ErrorCode::NoConstituent: return "NoConstituent";
    case ErrorCode::ChoiceExhausted: return "ChoiceExhausted";
    case ErrorCode::LemmaViolation: return "LemmaViolation";
    case ErrorCode::NotMultipleOfLinear: return "NotMultipleOfLinear";
    case ErrorCode::BoundViolation: return "BoundViolation";
    case ErrorCode::CriterionViolation: return "CriterionViolation";
  }
  return "UnknownError";
}

ErrorClass classify(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::IoError:
    case ErrorCode::InvalidInput:
    case ErrorCode::NotAssociative:
    case ErrorCode::NoIdentity:
    case ErrorCode::NoInverse:
    case ErrorCode::UnknownFamily:
    case ErrorCode::ClosureTooLarge:
    case ErrorCode::OrderCapExceeded:
      return ErrorClass::Input;
    case ErrorCode::LatticeTooLarge:
    case ErrorCode::EmptyInput:
    case ErrorCode::NotNormal:
    case ErrorCode::NotAbelian:
    case ErrorCode::NotASubgroup:
    case ErrorCode::ConductorMismatch:
    case ErrorCode::InvalidExponent:
    case ErrorCode::NotPGroup:
      return ErrorClass::Domain;
    case ErrorCode::PreconditionFailed:
      return ErrorClass::Witness;
    default:
      return ErrorClass::Internal;
  }
}

}  // namespace charposet
