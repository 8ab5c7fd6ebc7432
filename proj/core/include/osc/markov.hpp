#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "osc/permutation.hpp"
#include "osc/rational.hpp"
#include "osc/rng.hpp"
#include "osc/shuffles.hpp"

namespace osc {

// Deck positions run 1..n from the top. below counts the cards strictly
// under the bookmark; it starts at 1 and the walk stops once it reaches n.
struct DeckState {
  Permutation order;
  int below = 1;

  static DeckState initial(int n);
  int n() const { return order.degree(); }
  bool stopped() const { return below >= n(); }
};

// Moves the card at position from to position to (from <= to), i.e. right
// multiplies the deck by cyc_{from,...,to}. The card lands under the
// bookmark iff from <= n - below <= to: a card reinserted into the
// bookmark's own gap goes below it.
DeckState apply_move(const DeckState& state, int from, int to);

// Draws positions from a PositionDistribution exactly: the probabilities
// are scaled to a common 64-bit denominator.
class PositionSampler {
 public:
  explicit PositionSampler(const PositionDistribution& distribution);
  int n() const { return static_cast<int>(thresholds_.size()); }
  int operator()(Xoshiro256& rng) const;

 private:
  std::uint64_t denominator_;
  std::vector<std::uint64_t> thresholds_;
};

DeckState step(const DeckState& state, const PositionSampler& sampler, Xoshiro256& rng);

struct SimulationResult {
  int n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string rng = kRngAlgorithm;
  bool fast = false;
  double mean = 0;
  double standard_error = 0;
  // histogram[k] = number of trials with tau = k
  std::vector<std::uint64_t> histogram;
  // deck_counts[r] = number of trials stopping at the deck of lex rank r;
  // empty unless requested.
  std::vector<std::uint64_t> deck_counts;
};

// Runs the bookmark walk until the bookmark reaches the top, once per trial.
// Refuses P(1) = 0: the top card then never moves and no such time exists.
SimulationResult simulate_sst(const PositionDistribution& distribution, std::uint64_t trials,
                              std::uint64_t seed, bool record_decks = false);

// Random-to-below only: tau as a sum of independent geometric stage lengths,
// one per bookmark level i = 2..n, with success probability
// (i/n)(H_n - H_{i-1}).
SimulationResult fast_bookmark_sim(int n, std::uint64_t trials, std::uint64_t seed);

Rational harmonic(int m);
// (i/n)(H_n - H_{i-1}), the chance the bookmark climbs from level i under
// random-to-below (level i means i - 1 cards below the bookmark).
Rational climb_probability(int n, int level);

inline constexpr int kExactTauMax = 256;
// sum over i = 2..n of n / (i (H_n - H_{i-1})); 2 <= n <= kExactTauMax.
Rational exact_expected_tau(int n);
// Same sum in long double, using suffix harmonic sums; any n >= 2.
long double expected_tau_extended(int n);

struct TauBounds {
  long double upper = 0;
  // n log n + n log log n; only for n >= 3.
  std::optional<long double> conjectured_lower;
};
TauBounds bounds(int n);

// Pearson statistic of counts against the uniform distribution.
double chi_square_statistic(const std::vector<std::uint64_t>& counts);
// Upper alpha quantile of the chi-square distribution with df degrees.
double chi_square_critical(double degrees_of_freedom, double alpha);

}  // namespace osc
