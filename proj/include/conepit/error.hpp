#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conepit {

enum class ErrorKind {
  ZeroInverse,
  MixedFields,
  FieldMismatch,
  CharTooSmall,
  ArityMismatch,
  ArityTooSmall,
  ZeroPolynomial,
  TooLarge,
  ParseError,
  ValidationError,
  DuplicateNodes,
  EmptyInput,
  NotIsolating,
  VerificationFailed,
  BadParameters,
  DesignTooSmall,
  RaggedInput,
  RankZero,
  Overflow,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI's exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace conepit
