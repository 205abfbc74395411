#include "mqmap/error.hpp"

namespace mqm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::Reducible: return "Reducible";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::DomainTooLarge: return "DomainTooLarge";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::CharMismatch: return "CharMismatch";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NonzeroRadical: return "NonzeroRadical";
    case ErrorCode::NotFQuadratic: return "NotFQuadratic";
    case ErrorCode::NotVerified: return "NotVerified";
    case ErrorCode::UnexpectedDimension: return "UnexpectedDimension";
    case ErrorCode::TooManyFactors: return "TooManyFactors";
    case ErrorCode::Inconsistency: return "Inconsistency";
  }
  return "Unknown";
}

}  // namespace mqm
