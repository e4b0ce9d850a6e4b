#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kz {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Objects from different ambient rings or of incompatible shapes were mixed.
class AmbientMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A chain map expected to be null-homotopic is not.
class NotNullHomotopic : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A computation exceeded its degree, step, or retry budget; partial state is discarded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A construction produced an object that fails its own verification. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// The randomized regular-sequence search ran out of retries.
class SearchFailed : public Error {
 public:
  SearchFailed(const std::string& what, std::vector<std::string> attempted)
      : Error(what), attempted_(std::move(attempted)) {}
  const std::vector<std::string>& attempted() const { return attempted_; }

 private:
  std::vector<std::string> attempted_;
};

/// Session text could not be parsed or validated.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        detail_(what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }
  /// Message without the location prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  int line_;
  int column_;
};

/// A command was invoked with an unknown name or unresolvable arguments.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Session text parsed but an object failed validation (d∘d != 0, shapes, homogeneity, names).
class ValidationError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace kz
