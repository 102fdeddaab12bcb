#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace multlab {

/// Base of every error raised by the library. The three direct subclasses
/// map one-to-one onto the command-line exit codes 2, 3 and 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inadmissible input (exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A computation that did not settle within its configured limits (exit code 3).
class ComputationError : public Error {
 public:
  using Error::Error;
};

/// A mathematical property that must hold was found violated (exit code 4).
class PropertyViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariable : public ParseError {
 public:
  using ParseError::ParseError;
};

class ExponentOverflow : public ParseError {
 public:
  using ParseError::ParseError;
};

class BackendMismatch : public InputError {
 public:
  using InputError::InputError;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class PreconditionFailed : public InputError {
 public:
  using InputError::InputError;
};

class RestrictionViolated : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

class CommonComponent : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

class NotAtOrigin : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

class NonStabilizing : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class NotSystemOfParameters : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class InsufficientRange : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class CeilingReached : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class NonConstant : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class ResourceLimit : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class NegativeChi : public PropertyViolation {
 public:
  using PropertyViolation::PropertyViolation;
};

inline int exit_code_for(const Error& e) {
  if (dynamic_cast<const InputError*>(&e) != nullptr) return 2;
  if (dynamic_cast<const ComputationError*>(&e) != nullptr) return 3;
  if (dynamic_cast<const PropertyViolation*>(&e) != nullptr) return 4;
  return 1;
}

}  // namespace multlab
