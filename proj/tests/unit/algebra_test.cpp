#include <gtest/gtest.h>

#include <random>

#include "osc/algebra.hpp"

using osc::AlgebraElement;
using osc::Permutation;
using osc::Rational;

namespace {

AlgebraElement random_element(int n, std::mt19937& gen, int terms) {
  AlgebraElement x(n);
  const auto all = osc::all_permutations(n);
  for (int k = 0; k < terms; ++k) {
    Rational c(static_cast<long>(gen() % 11) - 5, 1 + gen() % 4);
    c.canonicalize();
    x.add_term(all[gen() % all.size()], c);
  }
  return x;
}

Permutation perm(std::initializer_list<int> word) {
  return Permutation::from_word(std::vector<int>(word));
}

}  // namespace

TEST(Algebra, ZeroCoefficientsArePruned) {
  AlgebraElement x(3);
  x.add_term(perm({2, 1, 3}), 2);
  x.add_term(perm({2, 1, 3}), -2);
  EXPECT_TRUE(x.is_zero());
  EXPECT_EQ(x, AlgebraElement::zero(3));
}

TEST(Algebra, ProductOfTranspositions) {
  const AlgebraElement s1 = AlgebraElement(Permutation::simple_transposition(3, 1));
  const AlgebraElement one = AlgebraElement::one(3);
  // (1 + s1)^2 = 2 (1 + s1)
  const AlgebraElement sum = one + s1;
  EXPECT_EQ(sum * sum, Rational(2) * sum);
  EXPECT_EQ(osc::power(sum, 0), one);
}

TEST(Algebra, AntipodeAndBilinearForm) {
  AlgebraElement x(Permutation::parse("2,3,1"), Rational(1, 2));
  x.add_term(Permutation::parse("1,3,2"), 3);
  const AlgebraElement sx = osc::antipode(x);
  EXPECT_EQ(sx.coefficient(Permutation::parse("3,1,2")), Rational(1, 2));
  EXPECT_EQ(osc::bilinear_form(x, x), Rational(37, 4));
  EXPECT_EQ(osc::bilinear_form(x, AlgebraElement::one(3)), 0);
}

TEST(Algebra, DenseRoundTrip) {
  std::mt19937 gen(7);
  const AlgebraElement x = random_element(4, gen, 9);
  EXPECT_EQ(osc::from_dense(4, osc::to_dense(x)), x);
}

TEST(Algebra, RingAxiomsOnRandomElements) {
  std::mt19937 gen(1234567);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 3);
    const AlgebraElement x = random_element(n, gen, 5);
    const AlgebraElement y = random_element(n, gen, 5);
    const AlgebraElement z = random_element(n, gen, 5);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(osc::antipode(x * y), osc::antipode(y) * osc::antipode(x));
    EXPECT_EQ(osc::commutator(x, y), x * y - y * x);
    EXPECT_EQ(osc::power(x, 3), x * x * x);
  }
}

TEST(Algebra, DegreeMismatchThrows) {
  EXPECT_THROW(AlgebraElement::one(3) + AlgebraElement::one(4), std::invalid_argument);
  EXPECT_THROW(AlgebraElement::one(3) * AlgebraElement::one(4), std::invalid_argument);
}
