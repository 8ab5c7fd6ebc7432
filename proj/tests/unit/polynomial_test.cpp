#include <gtest/gtest.h>

#include "osc/matrix.hpp"
#include "osc/polynomial.hpp"

using osc::Polynomial;
using osc::Rational;

TEST(Polynomial, ArithmeticAndPrinting) {
  const Polynomial p = Polynomial::from_roots({{1, 2}, {Rational(-1, 2), 1}});
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(osc::to_string(p), "x^3 - 3/2x^2 + 1/2");
  EXPECT_EQ(p(Rational(1)), 0);
  EXPECT_EQ(osc::to_string(Polynomial()), "0");
}

TEST(Polynomial, DivisionGcdLcm) {
  const Polynomial a = Polynomial::from_roots({{2, 2}, {3, 1}});
  const Polynomial b = Polynomial::from_roots({{2, 1}, {5, 1}});
  const auto [q, r] = osc::divmod(a, b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
  EXPECT_EQ(osc::gcd(a, b), Polynomial::linear(2));
  EXPECT_EQ(osc::lcm(a, b), Polynomial::from_roots({{2, 2}, {3, 1}, {5, 1}}));
  EXPECT_EQ(osc::root_multiplicity(a, 2), 2U);
  EXPECT_TRUE(osc::divides(b, osc::lcm(a, b)));
  EXPECT_THROW(osc::divmod(a, Polynomial()), std::domain_error);
}

TEST(Polynomial, FactoredString) {
  const Polynomial p = Polynomial::from_roots({{10, 1}, {6, 1}, {4, 2}, {2, 1}});
  EXPECT_EQ(osc::factored_string(p, {10, 6, 4, 2}), "(x-10)(x-6)(x-4)^2(x-2)");
}

TEST(Polynomial, EvaluateAtMatrix) {
  osc::RationalMatrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 1;
  m(1, 1) = 1;
  // (x - 1)^2 kills a Jordan block, x - 1 does not.
  EXPECT_EQ(osc::evaluate(Polynomial::from_roots({{1, 2}}), m), osc::RationalMatrix(2, 2));
  EXPECT_NE(osc::evaluate(Polynomial::linear(1), m), osc::RationalMatrix(2, 2));
}
