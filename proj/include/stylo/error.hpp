#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stylo {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Failure to open, read or write a file.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input data; carries the 1-based line number when known.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line = 0)
      : Error(line ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Input that parses but violates an operation's preconditions
// (empty document, degenerate profile, single-class dataset, ...).
class DataError : public Error {
 public:
  using Error::Error;
};

// Invalid experiment configuration (bad flag combination, missing path).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Broken internal invariant; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace stylo
