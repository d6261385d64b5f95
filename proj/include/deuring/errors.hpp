#pragma once

#include <stdexcept>
#include <string>

namespace deuring {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the domain of an operation (constant polynomial passed to an
/// irreducibility test, non-monic modulus, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operands live in incompatible rings (unrelated fields, different q).
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class UndefinedGcd : public Error {
 public:
  UndefinedGcd() : Error("gcd(0, 0) is undefined") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Raised when an exact division leaves a remainder.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

class InvalidPrime : public Error {
 public:
  using Error::Error;
};

class DegenerateLambda : public Error {
 public:
  DegenerateLambda() : Error("lambda lies in F_q, so lambda^q - lambda = 0") {}
};

class CharacteristicMismatch : public Error {
 public:
  using Error::Error;
};

/// The commutation recurrence would divide by gamma(T^(q^k) - T) = 0.
class RecurrenceBreakdown : public Error {
 public:
  explicit RecurrenceBreakdown(unsigned k)
      : Error("recurrence breakdown: gamma(T^(q^" + std::to_string(k) + ") - T) = 0"), step(k) {}
  unsigned step;
};

/// An algebraic cross-check failed; signals corrupted input data.
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

/// A polynomial does not split in the field it was asked to split in.
class AmbientTooSmall : public Error {
 public:
  AmbientTooSmall(std::size_t found, std::size_t expected)
      : Error("ambient field too small: found " + std::to_string(found) + " of " +
              std::to_string(expected) + " roots"),
        found_roots(found),
        expected_roots(expected) {}
  std::size_t found_roots;
  std::size_t expected_roots;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace deuring
