#include <gtest/gtest.h>

#include <cmath>

#include "osc/markov.hpp"
#include "osc/rng.hpp"
#include "osc/shuffles.hpp"

using osc::DeckState;
using osc::PositionDistribution;
using osc::Rational;

TEST(Rng, DeterministicPerSeedAndStream) {
  osc::Xoshiro256 a(42, 0), b(42, 0), c(42, 1);
  for (int k = 0; k < 16; ++k) {
    const auto x = a.below(1000);
    EXPECT_EQ(x, b.below(1000));
    EXPECT_LT(x, 1000U);
  }
  osc::Xoshiro256 d(42, 0);
  bool differs = false;
  for (int k = 0; k < 16; ++k) differs |= (c.below(1U << 30) != d.below(1U << 30));
  EXPECT_TRUE(differs);
}

TEST(Bookmark, CrossingRule) {
  DeckState s = DeckState::initial(4);
  EXPECT_EQ(s.below, 1);
  // Bookmark sits between positions 3 and 4.
  EXPECT_EQ(osc::apply_move(s, 1, 2).below, 1);
  EXPECT_EQ(osc::apply_move(s, 3, 3).below, 2);
  EXPECT_EQ(osc::apply_move(s, 2, 4).below, 2);
  EXPECT_EQ(osc::apply_move(s, 4, 4).below, 1);
  const DeckState moved = osc::apply_move(s, 1, 4);
  EXPECT_EQ(moved.order, osc::Permutation::parse("2,3,4,1"));
}

TEST(Bookmark, ExactExpectation) {
  EXPECT_EQ(osc::exact_expected_tau(2), 2);
  EXPECT_EQ(osc::exact_expected_tau(3), Rational(24, 5));
  EXPECT_EQ(osc::climb_probability(4, 4), Rational(1, 4));
  EXPECT_EQ(osc::climb_probability(4, 2), Rational(13, 24));
  EXPECT_NEAR(static_cast<double>(osc::expected_tau_extended(3)), 4.8, 1e-12);
  EXPECT_THROW(osc::exact_expected_tau(1), std::invalid_argument);
}

TEST(Bookmark, ExactBelowUpperBound) {
  for (int n = 2; n <= 10000; n += (n < 300 ? 1 : 97)) {
    EXPECT_LE(osc::expected_tau_extended(n), osc::bounds(n).upper) << "n = " << n;
  }
}

TEST(Bookmark, SimulationIsReproducible) {
  const auto a = osc::simulate_sst(PositionDistribution::uniform(5), 2000, 11);
  const auto b = osc::simulate_sst(PositionDistribution::uniform(5), 2000, 11);
  EXPECT_EQ(a.histogram, b.histogram);
  EXPECT_EQ(a.mean, b.mean);
}

TEST(Bookmark, SimulationMeanMatchesExact) {
  const auto result = osc::simulate_sst(PositionDistribution::uniform(6), 40000, 3);
  const double exact = osc::exact_expected_tau(6).get_d();
  EXPECT_LT(std::abs(result.mean - exact), 4 * result.standard_error);
}

TEST(Bookmark, RejectsUnmovableTop) {
  EXPECT_THROW(osc::simulate_sst(PositionDistribution::point_mass(3, 2), 10, 1),
               std::invalid_argument);
}

TEST(Bookmark, ChiSquareCritical) {
  EXPECT_NEAR(osc::chi_square_critical(1, 0.05), 3.841458820694124, 1e-9);
  EXPECT_EQ(osc::chi_square_statistic({5, 5, 5, 5}), 0.0);
}
