#pragma once

#include <stdexcept>
#include <string>

namespace abhk {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary scalar operation on values from different coefficient fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different algebras (or different base families).
class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

/// Precondition of a mathematical operation was violated by the caller
/// (division by zero, non-invertible element, unsupported family, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The operation needs a Hopf structure that has not been attached or verified.
class NotHopfError : public Error {
 public:
  using Error::Error;
};

/// Malformed user input: expression syntax, spec document schema, literals.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An identity that holds for every valid input was found to fail. This
/// always signals a defect in the engine rather than in the input.
class InvariantBreach : public Error {
 public:
  using Error::Error;
};

}  // namespace abhk
