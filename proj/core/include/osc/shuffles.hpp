#pragma once

#include <vector>

#include "osc/algebra.hpp"
#include "osc/limits.hpp"
#include "osc/matrix.hpp"
#include "osc/rational.hpp"

namespace osc {

// Coefficients (lambda_1, ..., lambda_n) of a one-sided cycle shuffle
// lambda_1 t_1 + ... + lambda_n t_n.
struct WeightVector {
  std::vector<Rational> values;

  int n() const { return static_cast<int>(values.size()); }
  const Rational& operator[](int ell) const { return values[static_cast<std::size_t>(ell - 1)]; }

  // lambda = e_1: top-to-random (t_1 itself, unnormalized).
  static WeightVector top_to_random(int n);
  // lambda_l = 1 / (n (n+1-l)): osc with the uniform position distribution.
  static WeightVector random_to_below(int n);
  // lambda_l = 2 / (n (n+1)): every move cyc_{i..j} with i <= j equally likely.
  static WeightVector unweighted(int n);
  static WeightVector constant(int n, const Rational& value);
};

// A probability distribution (P(1), ..., P(n)) on card positions.
class PositionDistribution {
 public:
  // Throws std::invalid_argument unless every P(i) >= 0 and they sum to 1.
  explicit PositionDistribution(std::vector<Rational> probabilities);

  static PositionDistribution uniform(int n);
  static PositionDistribution point_mass(int n, int position);

  int n() const { return static_cast<int>(p_.size()); }
  const Rational& operator()(int position) const { return p_[static_cast<std::size_t>(position - 1)]; }
  const std::vector<Rational>& values() const { return p_; }

  // lambda_l = P(l) / (n + 1 - l)
  WeightVector weights() const;

 private:
  std::vector<Rational> p_;
};

// t_l = cyc_l + cyc_{l,l+1} + ... + cyc_{l,...,n}
AlgebraElement somewhere_to_below(int n, int ell);
// t'_l = cyc_l + cyc_{l+1,l} + ... + cyc_{n,...,l}
AlgebraElement below_to_somewhere(int n, int ell);

// sum of lambda_l t_l
AlgebraElement one_sided_cycle_shuffle(const WeightVector& weights);
// sum of lambda_l t'_l
AlgebraElement one_sided_cycle_shuffle_prime(const WeightVector& weights);
// osc(P, n) = sum of P(l)/(n+1-l) t_l
AlgebraElement build_osc(const PositionDistribution& distribution);

// Markov kernel of the right random walk driven by x:
// M[tau][sigma] = [tau^{-1} sigma] x, rows and columns in lexicographic
// order of S_n. Requires nonnegative coefficients summing to 1.
RationalMatrix transition_matrix(const AlgebraElement& x, const Limits& limits = {});

// Matrices in the standard basis (lexicographic order); column w holds the
// coordinates of the image of w.
RationalMatrix right_multiplication_matrix(const AlgebraElement& x, const Limits& limits = {});
RationalMatrix left_multiplication_matrix(const AlgebraElement& x, const Limits& limits = {});
RationalMatrix antipode_matrix(int n, const Limits& limits = {});

}  // namespace osc
