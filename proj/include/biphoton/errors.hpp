#pragma once

#include <stdexcept>
#include <string>

namespace biphoton {

// A requested parameter is outside the numerically supported range
// (e.g. a pump bandwidth too narrow to resolve on the grid).
struct UnsupportedParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Two values that must live on the same frequency grid do not.
struct IncompatibleGrids : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A state (or a normalization constant) vanished where a non-zero one is required.
struct DegenerateState : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateNormalization : DegenerateState {
  using DegenerateState::DegenerateState;
};

// Text input that does not conform to the amplitude-file grammar; carries the
// 1-based line number of the offending line.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + message), line(line_no) {}
};

}  // namespace biphoton
