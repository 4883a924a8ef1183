#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace wzw {

/// Bad user input: invalid (n, k), malformed or out-of-alcove weights,
/// violated preconditions. The CLI maps this to exit status 1.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical self-check failed (non-unitary S, Verlinde residual,
/// Z not commuting with S or T). Always an implementation or convention
/// bug; the CLI maps this to exit status 2.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical tolerances used across the library.
struct Tolerances {
  double general = 1e-9;     // matrix identities, |a|^2, c0 comparisons
  double verlinde = 1e-6;    // max distance of a Verlinde sum from an integer
  double zero_rel = 1e-8;    // |S| < zero_rel * max|S| counts as zero
  double unitarity = 1e-9;   // post-normalization unitarity assertion

  /// Defaults, with `WZW_TOL` (if set and parseable) overriding `general`
  /// and `unitarity`.
  static Tolerances from_env() {
    Tolerances t;
    if (const char* env = std::getenv("WZW_TOL")) {
      char* end = nullptr;
      const double v = std::strtod(env, &end);
      if (end != env && v > 0.0) {
        t.general = v;
        t.unitarity = v;
      }
    }
    return t;
  }
};

}  // namespace wzw
