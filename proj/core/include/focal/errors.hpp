#pragma once

#include <stdexcept>
#include <string>

namespace focal {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller mistakes: dimension mismatch, wrong ambient, bad arguments.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed curve file or expression text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Numeric failure of a well-formed request.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Evaluation outside the domain of a formula (negative radicand, pole, ...).
class DomainError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Request too close to a lightlike point for arc-length machinery.
class ConditioningError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// A quantity the construction divides by vanishes (k = 0, tau = 0, ...).
class DegenerateError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace focal
