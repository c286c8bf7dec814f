#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace upn {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller passed an index or argument outside the documented domain.
struct UsageError : Error {
  using Error::Error;
};

// An operation was invoked without its precondition, e.g. firing a disabled transition.
struct ContractViolation : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

struct ValidationError : Error {
  explicit ValidationError(std::vector<std::string> diags);
  std::vector<std::string> diagnostics;
};

// A radix code contains a zero digit below its leading digit.
struct MalformedCode : Error {
  using Error::Error;
};

// Turing machine has no rule for the current (symbol, state) pair.
struct UndefinedTransition : Error {
  using Error::Error;
};

struct SnapshotError : Error {
  using Error::Error;
};

struct MalformedConfiguration : Error {
  using Error::Error;
};

struct SystemInvalid : Error {
  using Error::Error;
};

struct BridgeError : Error {
  using Error::Error;
};

}  // namespace upn
