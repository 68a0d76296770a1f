#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oddtown {

// Base of everything the library throws. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad parameters: out-of-range construction arguments, infeasible search specs.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : Error("ground size mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

class UniformityError : public Error {
 public:
  using Error::Error;
};

class ParityError : public Error {
 public:
  using Error::Error;
};

// A computation would exceed a configured cap (enumeration size, exact-mode family size).
class ResourceError : public Error {
 public:
  using Error::Error;
};

class EnumerationTooLarge : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

class DuplicateMember : public Error {
 public:
  using Error::Error;
};

// A design failed its cover check; the message names the offending t-set.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace oddtown
