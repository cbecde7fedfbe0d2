#pragma once

#include <stdexcept>
#include <string>

namespace mdred {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by builders when a structural self-check fails; always a bug in
/// the construction code, never a property of the input.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// An input exceeded a guard meant to keep exhaustive searches tractable.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace mdred
