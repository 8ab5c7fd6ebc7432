#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "osc/limits.hpp"
#include "osc/shuffles.hpp"

namespace osc {

struct SuiteCheck {
  std::string suite;
  std::string name;
  std::string detail;
  bool passed = false;
};

// Upper-triangularity of R(t_l) in the a basis under increasing Q-index,
// with diagonal m_{Q_{Qind w}, l}, for every l.
std::vector<SuiteCheck> verify_triangularity(int n, const Limits& limits = {});
// prod over lacunar I of (t - g_I) = 0 for the all-ones, random-to-below,
// top-to-random and one fixed pseudo-random weight vector.
std::vector<SuiteCheck> verify_annihilator(int n, const Limits& limits = {});
// f(a_p, b_q) = [p = q]; S(t_l) = t'_l; R(t'_l) upper-triangular in the b
// basis under decreasing Q-index; R(sum lambda t') = S L(sum lambda t) S.
std::vector<SuiteCheck> verify_duality(int n, const Limits& limits = {});
// Commutator nilpotency and the product identities.
std::vector<SuiteCheck> verify_identities(int n, const Limits& limits = {});
// Every J inside [n-1] lies in exactly one interval [I', [n-1] \ I] with I
// lacunar.
std::vector<SuiteCheck> verify_boolean_partition(int n);

inline constexpr std::string_view kSuiteNames[] = {"triangularity", "annihilator", "duality",
                                                   "identities", "boolean-partition"};
// name is one of kSuiteNames or "all".
std::vector<SuiteCheck> run_suite(std::string_view name, int n, const Limits& limits = {});

// The weight vector used as "pseudo-random" by the suites: lambda_l is
// drawn from {1..9}/{1..7} with a fixed seed.
WeightVector fixed_random_weights(int n, unsigned salt = 0);

}  // namespace osc
