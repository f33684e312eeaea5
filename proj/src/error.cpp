#include "conepit/error.hpp"

namespace conepit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::CharTooSmall: return "CharTooSmall";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ArityTooSmall: return "ArityTooSmall";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::DuplicateNodes: return "DuplicateNodes";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NotIsolating: return "NotIsolating";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::DesignTooSmall: return "DesignTooSmall";
    case ErrorKind::RaggedInput: return "RaggedInput";
    case ErrorKind::RankZero: return "RankZero";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace conepit
