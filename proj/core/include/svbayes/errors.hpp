#pragma once

#include <stdexcept>
#include <string>

namespace svbayes {

// Error taxonomy shared by the library and the CLI. Each class maps to a
// distinct process exit code (see tools/), so callers can tell a bad config
// from a bad grid from a numerical blow-up.

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coarse evaluation grid t_k = kT/(2N+1) cannot be matched to the
// observation grid within tolerance.
struct AlignmentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite state, degenerate variance, or similar numerical failure.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SamplerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace svbayes
