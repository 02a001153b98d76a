#pragma once

#include <stdexcept>
#include <string>

namespace staircase {

// Base class for every error thrown by the engine.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally bad input: wrong vector length, unknown names, bad parameters.
struct malformed_input : error {
  using error::error;
};

// Defining ideal equal to the unit ideal.
struct invalid_ring : error {
  using error::error;
};

// A documented precondition does not hold (not m-primary, zero ideal, ...).
struct precondition_error : error {
  using error::error;
};

// A consistency check that should be unreachable failed.
struct internal_error : error {
  using error::error;
};

}  // namespace staircase
