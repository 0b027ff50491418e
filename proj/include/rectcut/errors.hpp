#pragma once

#include <stdexcept>
#include <string>

namespace rectcut {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by zero, mixed radicands and similar field-level failures.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Malformed scalar, polynomial, netlist or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Coefficient vectors whose length does not match the variable list.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Sketch coordinates that do not form a tiling, or missing exact data.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Structural problems with a resistor network.
class NetlistError : public Error {
 public:
  using Error::Error;
};

/// Input outside an operation's domain (e.g. a polynomial with repeated roots).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition that the caller asked us to check failed.
class MathError : public Error {
 public:
  using Error::Error;
};

/// Raised when a result contradicts a theorem the code relies on.
class InternalError : public Error {
 public:
  using Error::Error;
};

class SizingError : public MathError {
 public:
  enum class Kind { inconsistent, underdetermined, degenerate };

  SizingError(Kind kind, const std::string& what) : MathError(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace rectcut
