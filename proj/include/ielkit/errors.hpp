#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ielkit {

// Byte offset into the source text, for parser diagnostics.
struct SourcePos {
  std::size_t offset = 0;
  std::size_t line = 1;
  std::size_t column = 1;

  std::string to_string() const {
    return std::to_string(line) + ":" + std::to_string(column);
  }
};

struct ParseError : std::runtime_error {
  SourcePos pos;
  ParseError(const std::string& msg, SourcePos p)
      : std::runtime_error(msg + " (at " + p.to_string() + ")"), pos(p) {}
};

// A formula uses a constructor that does not belong to the requested
// object language (e.g. [] inside an IEL formula).
struct LanguageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A Position does not address a node of the given formula.
struct PositionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated precondition of a proof-transforming operation.
struct DerivationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ielkit
