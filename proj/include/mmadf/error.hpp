#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mmadf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownArgument : public Error {
 public:
  using Error::Error;
};

/// Two labellings (or a labelling and a framework) disagree on their domain.
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

/// Frameworks compared or mapped across different attack graphs.
class GraphMismatch : public Error {
 public:
  using Error::Error;
};

/// A framework, scale or condition table violates its construction invariants.
class InvalidFramework : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed a configured cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Fixpoint iteration produced a step that is not increasing in the
/// information order.
class NonMonotoneStep : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mmadf
