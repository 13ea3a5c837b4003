#pragma once

#include <stdexcept>
#include <string>

namespace knotvol {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed PD text. line() is 1-based; 0 when the input is empty.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Arc labels that do not describe a 4-valent graph (label count != 2, bad orientation).
class StructuralError : public Error {
 public:
  using Error::Error;
};

class ConnectivityError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on a diagram that does not meet its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a configured crossing or frontier budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class ExtractionError : public Error {
 public:
  using Error::Error;
};

/// Coefficient signs or stability checks that contradict the head/tail sign pattern.
class ConventionError : public Error {
 public:
  using Error::Error;
};

class TableError : public Error {
 public:
  using Error::Error;
};

}  // namespace knotvol
