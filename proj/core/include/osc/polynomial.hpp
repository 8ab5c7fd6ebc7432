#pragma once

#include <string>
#include <utility>
#include <vector>

#include "osc/matrix.hpp"
#include "osc/rational.hpp"

namespace osc {

// Univariate polynomial over Q. Coefficients are stored constant term first
// with no trailing zeros, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial x();
  // x - root
  static Polynomial linear(const Rational& root);
  // prod (x - r)^k over (r, k)
  static Polynomial from_roots(const std::vector<std::pair<Rational, unsigned>>& roots);

  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const;
  Rational coefficient(std::size_t k) const;

  Polynomial monic() const;
  Rational operator()(const Rational& value) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& c, const Polynomial& a);

// (quotient, remainder); throws std::domain_error on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& d, const Polynomial& a);
// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);
// Monic lcm.
Polynomial lcm(const Polynomial& a, const Polynomial& b);
// Largest k with (x - root)^k dividing p; p must be nonzero.
unsigned root_multiplicity(const Polynomial& p, const Rational& root);

// p(M) by Horner's rule.
RationalMatrix evaluate(const Polynomial& p, const RationalMatrix& m);

// "x^3 - 2x + 1/2"
std::string to_string(const Polynomial& p);
// Writes p as prod (x - r)^k over the given candidate roots; "(x-10)(x-4)^2".
// Any cofactor that does not split over the candidates is appended in
// expanded form.
std::string factored_string(const Polynomial& p, const std::vector<Rational>& candidates);

}  // namespace osc
