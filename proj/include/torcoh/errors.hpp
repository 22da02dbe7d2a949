#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace torcoh {

// Bad user input: malformed files, unknown entries, precondition violations.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A parse error in an arrangement file, with a 1-based line number.
struct ParseError : InputError {
  ParseError(std::size_t line_no, const std::string& what)
      : InputError("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
  std::size_t line;
};

// An internal cross-check failed: the computation contradicts itself.
struct InconsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace torcoh
