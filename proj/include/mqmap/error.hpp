#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mqm {

enum class ErrorCode {
  InvalidArgument,
  NotPrime,
  Reducible,
  DivisionByZero,
  ZeroArgument,
  DomainTooLarge,
  TooLarge,
  CharMismatch,
  AxiomViolation,
  NotAnIdeal,
  NonzeroRadical,
  NotFQuadratic,
  NotVerified,
  UnexpectedDimension,
  TooManyFactors,
  Inconsistency,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library. The optional witness carries the
// element indices that demonstrate the failure (e.g. the domain point where a
// table disagrees with its quadratic expansion).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::uint32_t> witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::uint32_t>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::uint32_t> witness_;
};

}  // namespace mqm
