#pragma once

#include <stdexcept>
#include <string>

namespace liext {

// Base for every failure raised by the library. The CLI maps these to exit
// code 2 (input problems) unless noted otherwise.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

// Operands built over different parameter declarations.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

class EvaluationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A cochain that was supposed to be split along M (+) W maps MW or M^2 into W.
class NotAnIdeal : public InputError {
 public:
  using InputError::InputError;
};

// Exact linear algebra was requested on coefficients that still carry free
// parameters.
class NeedsInstantiation : public Error {
 public:
  using Error::Error;
};

// An algebraic identity the construction relies on failed, e.g. an induced
// differential does not square to zero. Signals a violated precondition.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace liext
