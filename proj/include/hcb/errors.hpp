#pragma once

#include <stdexcept>
#include <string>

namespace hcb {

/// Malformed input: bad partition text, bad rational, sizes that do not match.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter outside the range an operation is defined on (m < 2, m > n, ...).
class ParameterError : public InputError {
 public:
  using InputError::InputError;
};

class ShapeMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// Failures of the algebra engine that are about the mathematics, not the input syntax.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotFiniteDimensional : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonAdmissible : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace hcb
