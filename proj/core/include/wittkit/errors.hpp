#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wittkit {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input from the caller: malformed data, out-of-range labels, caps.
class UserError : public Error {
 public:
  using Error::Error;
};

/// A library invariant failed. Seeing one of these means a bug (or a
/// counterexample to a theorem the code relies on).
class InternalError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public UserError {
 public:
  using UserError::UserError;
};

class Overflow : public UserError {
 public:
  using UserError::UserError;
};

/// Quadratic-form data that does not satisfy the axioms on its group.
class IllFormed : public UserError {
 public:
  using UserError::UserError;
};

class NotIsotropic : public UserError {
 public:
  using UserError::UserError;
};

class Degenerate : public UserError {
 public:
  using UserError::UserError;
};

class LabelOutOfRange : public UserError {
 public:
  using UserError::UserError;
};

class InvalidChannel : public UserError {
 public:
  using UserError::UserError;
};

class EvenLevel : public UserError {
 public:
  using UserError::UserError;
};

class LevelNotMultipleOf4 : public UserError {
 public:
  using UserError::UserError;
};

class ParseError : public UserError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : UserError(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Gauss sum of a nondegenerate form did not land on an eighth root of unity.
class SnapFailed : public InternalError {
 public:
  using InternalError::InternalError;
};

/// An isotropic subgroup of a product refused the graph decomposition.
class TheoremViolation : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace wittkit
