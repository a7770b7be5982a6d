// Error types shared across the mcat library.
#pragma once

#include <stdexcept>
#include <string>

namespace mcat {

// Engine/computation error: invalid mathematical operation, failed
// precondition, budget exceeded, malformed input data.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invocation error: unknown builtin name, missing required option, unreadable
// input file. The CLI reports these with a distinct exit code.
struct UsageError : Error {
  using Error::Error;
};

// Error in source text (presentation DSL or coefficient expressions), carrying
// a 1-based line/column position.
struct ParseError : Error {
  std::string message;  // without the position suffix
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int column_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
        message(msg),
        line(line_),
        column(column_) {}
};

}  // namespace mcat
