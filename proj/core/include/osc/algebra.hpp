#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "osc/permutation.hpp"
#include "osc/rational.hpp"

namespace osc {

// An element of the group algebra Q[S_n]: a finite sum of permutations with
// rational coefficients. Terms are kept in lexicographic order of the
// permutations and zero coefficients are never stored, so two elements are
// equal exactly when their term maps are equal.
class AlgebraElement {
 public:
  using Terms = std::map<Permutation, Rational>;

  explicit AlgebraElement(int n);
  AlgebraElement(const Permutation& w, Rational coefficient = 1);

  static AlgebraElement zero(int n) { return AlgebraElement(n); }
  static AlgebraElement one(int n) { return AlgebraElement(Permutation::identity(n)); }
  static AlgebraElement scalar(int n, const Rational& c);
  // Takes ownership of a term map; drops zero coefficients and checks that
  // every key has degree n.
  static AlgebraElement from_terms(int n, Terms terms);

  int degree() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // [w]x: the coefficient of w, or 0.
  Rational coefficient(const Permutation& w) const;

  // Adds c*w, pruning the term if it cancels.
  void add_term(const Permutation& w, const Rational& c);

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Rational& c);

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  void check_degree(const Permutation& w) const;
  void check_degree(const AlgebraElement& other, const char* what) const;

  int n_;
  Terms terms_;
};

// Sum of c_k * x_k; throws on mismatched degrees or an empty sequence.
AlgebraElement linear_combine(std::span<const std::pair<Rational, AlgebraElement>> pairs);

// Convolution: [w](xy) = sum over uv = w of [u]x [v]y.
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

// x^k by repeated squaring; x^0 = 1.
AlgebraElement power(const AlgebraElement& x, unsigned exponent);

// [x, y] = xy - yx
AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y);

// S: w -> w^{-1}, extended linearly.
AlgebraElement antipode(const AlgebraElement& x);

// f(x, y) = sum over w of [w]x [w]y.
Rational bilinear_form(const AlgebraElement& x, const AlgebraElement& y);

// Free-function spelling of AlgebraElement::coefficient.
Rational coefficient(const AlgebraElement& x, const Permutation& w);

AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y);
AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y);
AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement operator*(const Rational& c, AlgebraElement x);

// Coefficients in lexicographic-rank coordinates: out[lex_rank(w)] = [w]x.
std::vector<Rational> to_dense(const AlgebraElement& x);
AlgebraElement from_dense(int n, std::span<const Rational> coordinates);

}  // namespace osc
