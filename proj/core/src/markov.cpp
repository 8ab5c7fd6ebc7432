#include "osc/markov.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/math/distributions/chi_squared.hpp>

namespace osc {

namespace {

bool lands_below(int n, int below, int from, int to) {
  const int gap = n - below;
  return from <= gap && to >= gap;
}

void summarize(SimulationResult& result, const std::vector<std::uint64_t>& taus) {
  long double sum = 0;
  long double sum_sq = 0;
  std::uint64_t longest = 0;
  for (std::uint64_t tau : taus) {
    sum += static_cast<long double>(tau);
    sum_sq += static_cast<long double>(tau) * static_cast<long double>(tau);
    longest = std::max(longest, tau);
  }
  const auto count = static_cast<long double>(taus.size());
  const long double mean = sum / count;
  const long double variance = taus.size() > 1 ? (sum_sq - count * mean * mean) / (count - 1) : 0;
  result.mean = static_cast<double>(mean);
  result.standard_error = static_cast<double>(std::sqrt(std::max(variance, 0.0L) / count));
  result.histogram.assign(longest + 1, 0);
  for (std::uint64_t tau : taus) ++result.histogram[tau];
}

}  // namespace

DeckState DeckState::initial(int n) { return {Permutation::identity(n), 1}; }

DeckState apply_move(const DeckState& state, int from, int to) {
  const int n = state.n();
  if (from < 1 || from > to || to > n) {
    throw std::out_of_range("apply_move: need 1 <= from <= to <= n");
  }
  std::vector<int> indices(static_cast<std::size_t>(to - from + 1));
  std::iota(indices.begin(), indices.end(), from);
  DeckState next{state.order * Permutation::cycle(n, indices), state.below};
  if (!state.stopped() && lands_below(n, state.below, from, to)) ++next.below;
  return next;
}

PositionSampler::PositionSampler(const PositionDistribution& distribution) {
  BigInt common = 1;
  for (const Rational& p : distribution.values()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), p.get_den_mpz_t());
  if (!common.fits_ulong_p()) {
    throw std::invalid_argument("position distribution denominators exceed 64 bits");
  }
  denominator_ = common.get_ui();
  std::uint64_t running = 0;
  for (const Rational& p : distribution.values()) {
    const BigInt scaled = p.get_num() * (common / p.get_den());
    running += scaled.get_ui();
    thresholds_.push_back(running);
  }
}

int PositionSampler::operator()(Xoshiro256& rng) const {
  const std::uint64_t u = rng.below(denominator_);
  const auto it = std::upper_bound(thresholds_.begin(), thresholds_.end(), u);
  return static_cast<int>(it - thresholds_.begin()) + 1;
}

DeckState step(const DeckState& state, const PositionSampler& sampler, Xoshiro256& rng) {
  const int n = state.n();
  if (sampler.n() != n) throw std::invalid_argument("step: sampler and deck sizes differ");
  const int from = sampler(rng);
  const int to = from + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - from + 1)));
  return apply_move(state, from, to);
}

SimulationResult simulate_sst(const PositionDistribution& distribution, std::uint64_t trials,
                              std::uint64_t seed, bool record_decks) {
  const int n = distribution.n();
  if (is_zero(distribution(1))) {
    throw std::invalid_argument(
        "simulate: P(1) = 0 means the top card never moves, so the bookmark never reaches the "
        "top and no strong stationary time exists");
  }
  if (trials == 0) throw std::invalid_argument("simulate: trials must be positive");
  if (record_decks && n > 8) throw std::invalid_argument("simulate: deck recording needs n <= 8");
  const PositionSampler sampler(distribution);

  SimulationResult result;
  result.n = n;
  result.trials = trials;
  result.seed = seed;
  if (record_decks) result.deck_counts.assign(all_permutations(n).size(), 0);

  std::vector<std::uint64_t> taus(trials);
  std::vector<int> deck(static_cast<std::size_t>(n));
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Xoshiro256 rng(seed, trial);
    std::iota(deck.begin(), deck.end(), 1);
    int below = 1;
    std::uint64_t tau = 0;
    while (below < n) {
      const int from = sampler(rng);
      const int to = from + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - from + 1)));
      std::rotate(deck.begin() + (from - 1), deck.begin() + from, deck.begin() + to);
      if (lands_below(n, below, from, to)) ++below;
      ++tau;
    }
    taus[trial] = tau;
    if (record_decks) ++result.deck_counts[lex_rank(Permutation::from_word(deck))];
  }
  summarize(result, taus);
  return result;
}

SimulationResult fast_bookmark_sim(int n, std::uint64_t trials, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("fast simulation needs n >= 1");
  if (trials == 0) throw std::invalid_argument("simulate: trials must be positive");
  // log(1 - p_i) for each stage; p_i < 1 except in degenerate n = 1.
  std::vector<long double> log_fail;
  long double suffix = 0;  // H_n - H_{i-1}
  std::vector<long double> p(static_cast<std::size_t>(n + 1));
  for (int i = n; i >= 2; --i) {
    suffix += 1.0L / i;
    p[static_cast<std::size_t>(i)] = static_cast<long double>(i) / n * suffix;
  }
  for (int i = 2; i <= n; ++i) log_fail.push_back(std::log1p(-p[static_cast<std::size_t>(i)]));

  SimulationResult result;
  result.n = n;
  result.trials = trials;
  result.seed = seed;
  result.fast = true;
  std::vector<std::uint64_t> taus(trials);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Xoshiro256 rng(seed, trial);
    std::uint64_t tau = 0;
    for (long double lf : log_fail) {
      const long double u = rng.unit_open_closed();
      tau += lf == 0 ? 1 : 1 + static_cast<std::uint64_t>(std::floor(std::log(u) / lf));
    }
    taus[trial] = tau;
  }
  summarize(result, taus);
  return result;
}

Rational harmonic(int m) {
  Rational h = 0;
  for (int k = 1; k <= m; ++k) h += Rational(1, k);
  return h;
}

Rational climb_probability(int n, int level) {
  if (level < 1 || level > n) throw std::out_of_range("climb_probability: level outside [n]");
  return Rational(level, n) * (harmonic(n) - harmonic(level - 1));
}

Rational exact_expected_tau(int n) {
  if (n < 2) throw std::invalid_argument("exact_expected_tau needs n >= 2");
  if (n > kExactTauMax) {
    throw std::invalid_argument("exact_expected_tau: n above " + std::to_string(kExactTauMax) +
                                "; use expected_tau_extended");
  }
  Rational total = 0;
  Rational suffix = 0;  // H_n - H_{i-1}
  for (int i = n; i >= 2; --i) {
    suffix += Rational(1, i);
    total += Rational(n) / (Rational(i) * suffix);
  }
  return total;
}

long double expected_tau_extended(int n) {
  if (n < 2) throw std::invalid_argument("expected_tau_extended needs n >= 2");
  long double total = 0;
  long double suffix = 0;
  for (int i = n; i >= 2; --i) {
    suffix += 1.0L / i;
    total += static_cast<long double>(n) / (i * suffix);
  }
  return total;
}

TauBounds bounds(int n) {
  if (n < 2) throw std::invalid_argument("bounds need n >= 2");
  const long double nn = n;
  const long double log_n = std::log(nn);
  const long double log_log_n = std::log(log_n);
  TauBounds out;
  out.upper = nn * log_n + nn * log_log_n + nn * std::log(2.0L) + 1;
  if (n >= 3) out.conjectured_lower = nn * log_n + nn * log_log_n;
  return out;
}

double chi_square_statistic(const std::vector<std::uint64_t>& counts) {
  if (counts.empty()) throw std::invalid_argument("chi_square_statistic: no cells");
  long double total = 0;
  for (std::uint64_t c : counts) total += static_cast<long double>(c);
  const long double expected = total / static_cast<long double>(counts.size());
  long double stat = 0;
  for (std::uint64_t c : counts) {
    const long double d = static_cast<long double>(c) - expected;
    stat += d * d / expected;
  }
  return static_cast<double>(stat);
}

double chi_square_critical(double degrees_of_freedom, double alpha) {
  const boost::math::chi_squared dist(degrees_of_freedom);
  return boost::math::quantile(boost::math::complement(dist, alpha));
}

}  // namespace osc
