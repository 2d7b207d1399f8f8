#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Evaluation hit a zero of the stored denominator.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Operands live on different charts, or a coordinate is not in the chart.
class ChartMismatch : public Error {
 public:
  using Error::Error;
};

/// A constructor's mathematical precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace gg
