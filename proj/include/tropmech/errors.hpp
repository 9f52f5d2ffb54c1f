#pragma once

#include <stdexcept>
#include <string>

namespace tropmech {

// Error categories; the CLI maps each onto a distinct exit code.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;  // exit code 2
};
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;  // exit code 3
};
struct SizeGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;  // exit code 4
};
struct RenderDimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;  // exit code 5
};

}  // namespace tropmech
