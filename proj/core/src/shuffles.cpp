#include "osc/shuffles.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace osc {

namespace {

void check_position(int n, int ell, const char* what) {
  if (ell < 1 || ell > n) {
    throw std::out_of_range(std::string(what) + ": l = " + std::to_string(ell) + " not in [" +
                            std::to_string(n) + "]");
  }
}

std::vector<int> run(int from, int to) {
  std::vector<int> out;
  if (from <= to) {
    for (int k = from; k <= to; ++k) out.push_back(k);
  } else {
    for (int k = from; k >= to; --k) out.push_back(k);
  }
  return out;
}

}  // namespace

WeightVector WeightVector::top_to_random(int n) {
  WeightVector w{std::vector<Rational>(static_cast<std::size_t>(n))};
  w.values.at(0) = 1;
  return w;
}

WeightVector WeightVector::random_to_below(int n) {
  return PositionDistribution::uniform(n).weights();
}

WeightVector WeightVector::unweighted(int n) {
  return constant(n, Rational(2, n * (n + 1)));
}

WeightVector WeightVector::constant(int n, const Rational& value) {
  if (n < 1) throw std::invalid_argument("weight vector needs n >= 1");
  return WeightVector{std::vector<Rational>(static_cast<std::size_t>(n), value)};
}

PositionDistribution::PositionDistribution(std::vector<Rational> probabilities)
    : p_(std::move(probabilities)) {
  if (p_.empty()) throw std::invalid_argument("position distribution needs n >= 1");
  Rational total = 0;
  for (const Rational& p : p_) {
    if (sgn(p) < 0) throw std::invalid_argument("position distribution has a negative entry");
    total += p;
  }
  if (total != 1) {
    throw std::invalid_argument("position distribution sums to " + display_string(total) +
                                ", not 1");
  }
}

PositionDistribution PositionDistribution::uniform(int n) {
  if (n < 1) throw std::invalid_argument("position distribution needs n >= 1");
  return PositionDistribution(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1, n)));
}

PositionDistribution PositionDistribution::point_mass(int n, int position) {
  check_position(n, position, "point_mass");
  std::vector<Rational> p(static_cast<std::size_t>(n));
  p[static_cast<std::size_t>(position - 1)] = 1;
  return PositionDistribution(std::move(p));
}

WeightVector PositionDistribution::weights() const {
  const int size = n();
  WeightVector w{std::vector<Rational>(p_.size())};
  for (int ell = 1; ell <= size; ++ell) {
    w.values[static_cast<std::size_t>(ell - 1)] = (*this)(ell) / Rational(size + 1 - ell);
  }
  return w;
}

AlgebraElement somewhere_to_below(int n, int ell) {
  check_position(n, ell, "somewhere_to_below");
  AlgebraElement out(n);
  for (int j = ell; j <= n; ++j) out.add_term(Permutation::cycle(n, run(ell, j)), 1);
  return out;
}

AlgebraElement below_to_somewhere(int n, int ell) {
  check_position(n, ell, "below_to_somewhere");
  AlgebraElement out(n);
  for (int j = ell; j <= n; ++j) out.add_term(Permutation::cycle(n, run(j, ell)), 1);
  return out;
}

AlgebraElement one_sided_cycle_shuffle(const WeightVector& weights) {
  const int n = weights.n();
  AlgebraElement out(n);
  for (int ell = 1; ell <= n; ++ell) {
    if (is_zero(weights[ell])) continue;
    out += weights[ell] * somewhere_to_below(n, ell);
  }
  return out;
}

AlgebraElement one_sided_cycle_shuffle_prime(const WeightVector& weights) {
  const int n = weights.n();
  AlgebraElement out(n);
  for (int ell = 1; ell <= n; ++ell) {
    if (is_zero(weights[ell])) continue;
    out += weights[ell] * below_to_somewhere(n, ell);
  }
  return out;
}

AlgebraElement build_osc(const PositionDistribution& distribution) {
  return one_sided_cycle_shuffle(distribution.weights());
}

RationalMatrix transition_matrix(const AlgebraElement& x, const Limits& limits) {
  const int n = x.degree();
  limits.require_algebra(n, "transition_matrix");
  Rational total = 0;
  for (const auto& [w, c] : x.terms()) {
    if (sgn(c) < 0) throw std::invalid_argument("transition_matrix: negative coefficient");
    total += c;
  }
  if (total != 1) {
    throw std::invalid_argument("transition_matrix: coefficients sum to " +
                                display_string(total) + ", not 1");
  }
  const std::vector<Permutation> perms = all_permutations(n);
  RationalMatrix m(perms.size(), perms.size());
  for (std::size_t row = 0; row < perms.size(); ++row) {
    for (const auto& [step, c] : x.terms()) m(row, lex_rank(perms[row] * step)) = c;
  }
  return m;
}

RationalMatrix right_multiplication_matrix(const AlgebraElement& x, const Limits& limits) {
  const int n = x.degree();
  limits.require_algebra(n, "right_multiplication_matrix");
  const std::vector<Permutation> perms = all_permutations(n);
  RationalMatrix m(perms.size(), perms.size());
  for (std::size_t col = 0; col < perms.size(); ++col) {
    for (const auto& [step, c] : x.terms()) m(lex_rank(perms[col] * step), col) += c;
  }
  return m;
}

RationalMatrix left_multiplication_matrix(const AlgebraElement& x, const Limits& limits) {
  const int n = x.degree();
  limits.require_algebra(n, "left_multiplication_matrix");
  const std::vector<Permutation> perms = all_permutations(n);
  RationalMatrix m(perms.size(), perms.size());
  for (std::size_t col = 0; col < perms.size(); ++col) {
    for (const auto& [step, c] : x.terms()) m(lex_rank(step * perms[col]), col) += c;
  }
  return m;
}

RationalMatrix antipode_matrix(int n, const Limits& limits) {
  limits.require_algebra(n, "antipode_matrix");
  const std::vector<Permutation> perms = all_permutations(n);
  RationalMatrix m(perms.size(), perms.size());
  for (std::size_t col = 0; col < perms.size(); ++col) m(lex_rank(perms[col].inverse()), col) = 1;
  return m;
}

}  // namespace osc
