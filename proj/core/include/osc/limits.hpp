#pragma once

#include <stdexcept>
#include <string>

namespace osc {

// Thrown when an operation that enumerates S_n (or builds an n! x n!
// matrix) is asked for a degree above the configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when a mathematical guarantee the code relies on fails to hold.
// Seeing one of these means a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Limits {
  // Largest n for full-algebra work (8! = 40320 basis elements).
  int algebra_cap = 8;
  // Largest n for minimal polynomials of right-multiplication operators.
  int minpoly_cap = 5;
  // Largest matrix dimension accepted by the characteristic polynomial oracle.
  int charpoly_dim_cap = 120;

  // Defaults, with OSC_ALGEBRA_CAP (if set) overriding algebra_cap.
  static Limits from_environment();

  void require_algebra(int n, const char* what) const;
  void require_minpoly(int n, const char* what) const;
};

inline constexpr const char* kAlgebraCapEnv = "OSC_ALGEBRA_CAP";

}  // namespace osc
