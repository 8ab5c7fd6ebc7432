#pragma once

#include <optional>
#include <string>
#include <vector>

#include "osc/algebra.hpp"
#include "osc/limits.hpp"

namespace osc {

struct IdentityCheck {
  std::string name;
  std::vector<int> params;
  bool passed = false;
  // For checks expecting zero: the surviving terms of the residual.
  std::size_t residual_terms = 0;
  std::optional<Permutation> smallest_residual;
};

struct IdentityReport {
  int n = 0;
  std::vector<IdentityCheck> checks;

  bool all_passed() const;
  std::size_t failures() const;
};

// For every 1 <= i < j <= n: [t_i, t_j]^e = 0 with e = j-i+1 and with
// e = ceil((n-j)/2)+1, each checked on its own. At n = 6 also checks that
// [t_1, t_3]^2 is nonzero while [t_1, t_3]^3 vanishes.
IdentityReport commutator_nilpotency(int n, const Limits& limits = {});

// The six product identities among t_1, ..., t_n and s_1, ..., s_{n-1}, over
// every admissible index tuple.
IdentityReport identity_suite(int n, const Limits& limits = {});

// [t_{k_1}, t_j] [t_{k_2}, t_j] ... [t_{k_m}, t_j]
AlgebraElement mixed_commutator_product(int n, int j, const std::vector<int>& ks);
// True when m >= j - k_m + 1 or 2m >= n - j + 2, the two conditions under
// which the product above is known to vanish.
bool mixed_product_vanishes(int n, int j, const std::vector<int>& ks);
// Checks the product against that prediction: zero when a condition holds,
// and otherwise only reports what was found (passed = true).
IdentityCheck mixed_product_check(int n, int j, const std::vector<int>& ks,
                                  const Limits& limits = {});

}  // namespace osc
