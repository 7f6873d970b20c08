#pragma once

#include <stdexcept>
#include <string>

namespace cyc {

// Domain error carrying the spec'd failure category in its type.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotDivisorError : DomainError {
  using DomainError::DomainError;
};

struct LevelMismatchError : DomainError {
  using DomainError::DomainError;
};

struct BadDenominatorError : DomainError {
  using DomainError::DomainError;
};

// Ghost solving failed: no exact division at component `level`.
struct NonIntegralError : DomainError {
  long level;
  explicit NonIntegralError(long k, const std::string& msg) : DomainError(msg), level(k) {}
};

// Division by an integer is ambiguous because the ring has torsion.
struct TorsionRingError : DomainError {
  using DomainError::DomainError;
};

// A map does not descend to the requested quotient; message names a witness.
struct NotWellDefinedError : DomainError {
  using DomainError::DomainError;
};

struct UnsupportedRingError : DomainError {
  using DomainError::DomainError;
};

struct RingMismatchError : DomainError {
  using DomainError::DomainError;
};

struct OutOfBoundError : DomainError {
  using DomainError::DomainError;
};

// Internal invariant failure: a universal polynomial came out non-integral.
struct IntegralityFailure : std::logic_error {
  using std::logic_error::logic_error;
};

// Malformed CLI/JSON input.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cyc
