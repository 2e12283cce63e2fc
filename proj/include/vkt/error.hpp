#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vkt {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula text. `column` is 1-based and counts code points.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t column)
      : Error(message + " at column " + std::to_string(column)), column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Well-formed but inconsistent input: unknown state, undeclared atom,
/// mismatched relation endpoints, broken topology, and so on.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A requested enumeration exceeds the configured size bound.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace vkt
