#pragma once

#include <stdexcept>

namespace theta {

// Domain errors surfaced by the library. Resource exhaustion is left to the
// allocator; these are contract violations a caller can act on.

struct TableTooShort : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidInvert : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CorruptCache : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NegativeM : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OrderTooHigh : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GammaTooShort : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RegimeViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateB : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace theta
