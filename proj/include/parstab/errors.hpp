#pragma once

#include <stdexcept>

namespace parstab {

// Malformed input text: cycle strings, rationals, JSON files.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured resource limit was hit (enumeration size, node budget).
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An identity the construction guarantees failed to hold. Any throw here
// is an implementation bug, never a data error.
struct TheoremViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace parstab
