#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slater {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition or structural invariant of an input value does not hold.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An exact solver or oracle was asked to run above its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Text input deviates from one of the file formats. Line and column are 1-based.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace slater
