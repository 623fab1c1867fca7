#pragma once

#include <stdexcept>
#include <string>

namespace camoforge {

/// Base class for all camoforge errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text (PLA or JSON). Carries the 1-based line number
/// when the format is line oriented.
struct ParseError : Error {
  int line = 0;
  ParseError(int line_no, const std::string& msg)
      : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// A structural invariant of a netlist or plan does not hold.
struct ValidationError : Error {
  using Error::Error;
};

/// Evaluation attempted on a netlist that cannot be evaluated
/// (e.g. unresolved CAMO cells).
struct EvalError : Error {
  using Error::Error;
};

/// Configuration values outside the supported envelope
/// (caps exceeded, inconsistent device parameters, ...).
struct ConfigError : Error {
  using Error::Error;
};

} // namespace camoforge
