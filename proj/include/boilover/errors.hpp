#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace boilover {

// Base of every error the library throws. The CLI maps the two families
// (input vs. regime) onto distinct exit codes.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Input-side failures: the caller supplied something unusable.
class InputError : public Error {
public:
  using Error::Error;
};

// Physics-side failures: inputs are well formed but outside the validity
// domain of the requested solution or numerical scheme.
class RegimeError : public Error {
public:
  using Error::Error;
};

class MissingInput : public InputError {
public:
  using InputError::InputError;
};

class Conflict : public InputError {
public:
  using InputError::InputError;
};

class ValidationError : public InputError {
public:
  using InputError::InputError;
};

class DomainError : public InputError {
public:
  using InputError::InputError;
};

class UnitError : public InputError {
public:
  using InputError::InputError;
};

class SchemaError : public InputError {
public:
  SchemaError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

class InvalidRegime : public RegimeError {
public:
  using RegimeError::RegimeError;
};

class Instability : public RegimeError {
public:
  using RegimeError::RegimeError;
};

class NonConvergence : public RegimeError {
public:
  using RegimeError::RegimeError;
};

}  // namespace boilover
