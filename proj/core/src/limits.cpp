#include "osc/limits.hpp"

#include <cstdlib>

namespace osc {

Limits Limits::from_environment() {
  Limits limits;
  if (const char* raw = std::getenv(kAlgebraCapEnv); raw != nullptr && *raw != '\0') {
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 1 || value > 12) {
      throw std::invalid_argument(std::string(kAlgebraCapEnv) + " must be an integer in [1, 12]");
    }
    limits.algebra_cap = static_cast<int>(value);
  }
  return limits;
}

void Limits::require_algebra(int n, const char* what) const {
  if (n > algebra_cap) {
    throw CapExceeded(std::string(what) + ": n = " + std::to_string(n) +
                      " exceeds the algebra cap " + std::to_string(algebra_cap) +
                      " (raise it with --cap or " + kAlgebraCapEnv + ")");
  }
}

void Limits::require_minpoly(int n, const char* what) const {
  if (n > minpoly_cap) {
    throw CapExceeded(std::string(what) + ": n = " + std::to_string(n) +
                      " exceeds the minimal-polynomial cap " + std::to_string(minpoly_cap));
  }
}

}  // namespace osc
