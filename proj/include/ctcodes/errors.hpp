#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ctc {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (bad point,
/// shape mismatch, unsupported parameter pair).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Caller violated a documented precondition (e.g. fewer than two codewords
/// where a minimum distance is required).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration budget would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. `line()` is 1-based; 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ctc
