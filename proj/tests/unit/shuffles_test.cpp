#include <gtest/gtest.h>

#include <random>

#include "osc/matrix.hpp"
#include "osc/shuffles.hpp"

using osc::AlgebraElement;
using osc::Permutation;
using osc::PositionDistribution;
using osc::Rational;
using osc::WeightVector;

TEST(Shuffles, SomewhereToBelowTerms) {
  const AlgebraElement t2 = osc::somewhere_to_below(4, 2);
  ASSERT_EQ(t2.term_count(), 3U);
  EXPECT_EQ(t2.coefficient(Permutation::identity(4)), 1);
  EXPECT_EQ(t2.coefficient(Permutation::parse("1,3,2,4")), 1);
  EXPECT_EQ(t2.coefficient(Permutation::parse("1,3,4,2")), 1);
  EXPECT_EQ(osc::somewhere_to_below(4, 4), AlgebraElement::one(4));
}

TEST(Shuffles, BelowToSomewhereIsTheAntipode) {
  for (int n = 1; n <= 6; ++n) {
    for (int ell = 1; ell <= n; ++ell) {
      EXPECT_EQ(osc::antipode(osc::somewhere_to_below(n, ell)), osc::below_to_somewhere(n, ell));
    }
  }
}

TEST(Shuffles, PresetWeights) {
  const WeightVector r2b = WeightVector::random_to_below(3);
  EXPECT_EQ(r2b[1], Rational(1, 9));
  EXPECT_EQ(r2b[2], Rational(1, 6));
  EXPECT_EQ(r2b[3], Rational(1, 3));
  EXPECT_EQ(PositionDistribution::uniform(3).weights().values, r2b.values);
  EXPECT_EQ(WeightVector::top_to_random(3).values, (std::vector<Rational>{1, 0, 0}));
}

TEST(Shuffles, DistributionValidation) {
  EXPECT_THROW(PositionDistribution({Rational(1, 2), Rational(1, 3)}), std::invalid_argument);
  EXPECT_THROW(PositionDistribution({Rational(3, 2), Rational(-1, 2)}), std::invalid_argument);
  EXPECT_NO_THROW(PositionDistribution({Rational(1, 2), Rational(1, 2)}));
}

TEST(Shuffles, TransitionMatrixOfTopToRandom) {
  const auto m = osc::transition_matrix(osc::build_osc(PositionDistribution::point_mass(3, 1)));
  const Rational third(1, 3);
  const int pattern[6][6] = {{1, 0, 1, 1, 0, 0}, {0, 1, 0, 0, 1, 1}, {1, 1, 1, 0, 0, 0},
                             {0, 0, 0, 1, 1, 1}, {1, 1, 0, 0, 1, 0}, {0, 0, 1, 1, 0, 1}};
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t c = 0; c < 6; ++c) EXPECT_EQ(m(r, c), pattern[r][c] * third);
  }
}

TEST(Shuffles, TransitionMatrixRejectsNonStochastic) {
  EXPECT_THROW(osc::transition_matrix(osc::somewhere_to_below(3, 1)), std::invalid_argument);
}

TEST(Shuffles, RowSumsForRandomDistributions) {
  std::mt19937 gen(99);
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Rational> p(static_cast<std::size_t>(n));
      Rational total = 0;
      for (Rational& v : p) {
        v = Rational(static_cast<long>(gen() % 7), 1);
        total += v;
      }
      if (total == 0) p[0] = total = 1;
      for (Rational& v : p) v /= total;
      const auto m = osc::transition_matrix(osc::build_osc(PositionDistribution(p)));
      for (const Rational& s : m.row_sums()) EXPECT_EQ(s, 1);
    }
  }
}

TEST(Shuffles, MultiplicationMatricesActOnColumns) {
  const AlgebraElement x = osc::somewhere_to_below(3, 1);
  const auto right = osc::right_multiplication_matrix(x);
  const auto all = osc::all_permutations(3);
  for (std::size_t c = 0; c < all.size(); ++c) {
    const AlgebraElement image = AlgebraElement(all[c]) * x;
    for (std::size_t r = 0; r < all.size(); ++r) EXPECT_EQ(right(r, c), image.coefficient(all[r]));
  }
  const auto s = osc::antipode_matrix(3);
  EXPECT_EQ(s * s, osc::RationalMatrix::identity(6));
}
