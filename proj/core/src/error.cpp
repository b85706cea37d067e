#include "lehmer/error.hpp"

namespace lehmer {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquarefreeD: return "NonSquarefreeD";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::RationalElement: return "RationalElement";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotGreaterThanOne: return "NotGreaterThanOne";
    case ErrorCode::NotNormMinusOne: return "NotNormMinusOne";
    case ErrorCode::KNotOdd: return "KNotOdd";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::IncompleteFactorization: return "IncompleteFactorization";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DerivationMismatch: return "DerivationMismatch";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace lehmer
