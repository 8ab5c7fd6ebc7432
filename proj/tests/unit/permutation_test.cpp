#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "osc/permutation.hpp"

using osc::IndexSubset;
using osc::Permutation;

namespace {

Permutation perm(std::initializer_list<int> word) {
  return Permutation::from_word(std::vector<int>(word));
}

}  // namespace

TEST(Permutation, ComposesRightToLeft) {
  const Permutation p = perm({2, 3, 1});
  const Permutation q = perm({2, 1, 3});
  // (pq)(1) = p(q(1)) = p(2) = 3
  EXPECT_EQ(p * q, perm({3, 2, 1}));
  EXPECT_EQ(q * p, perm({1, 3, 2}));
}

TEST(Permutation, CycleNotation) {
  EXPECT_EQ(Permutation::cycle(4, std::vector<int>{1, 2, 3}), perm({2, 3, 1, 4}));
  EXPECT_EQ(Permutation::cycle(4, std::vector<int>{2}), Permutation::identity(4));
  EXPECT_EQ(Permutation::simple_transposition(4, 3), perm({1, 2, 4, 3}));
  EXPECT_THROW(Permutation::cycle(4, std::vector<int>{1, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation::simple_transposition(4, 4), std::invalid_argument);
}

TEST(Permutation, RejectsBadWords) {
  EXPECT_THROW(perm({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(perm({0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("1,2,x"), std::invalid_argument);
  EXPECT_THROW(perm({1, 2}) * perm({1, 2, 3}), std::invalid_argument);
}

TEST(Permutation, ParseAndPrintRoundTrip) {
  const Permutation w = Permutation::parse("3,2,4,1");
  EXPECT_EQ(w, perm({3, 2, 4, 1}));
  EXPECT_EQ(w.to_string(), "3,2,4,1");
  EXPECT_EQ(w.compact_string(), "3241");
}

TEST(Permutation, DescentSet) {
  EXPECT_EQ(descent_set(perm({3, 1, 4, 2})).elements(), (std::vector<int>{1, 3}));
  EXPECT_TRUE(descent_set(Permutation::identity(5)).empty());
  EXPECT_EQ(descent_set(Permutation::reversal(4)), IndexSubset::full(3));
}

TEST(Permutation, YoungSubgroupSizes) {
  EXPECT_EQ(young_subgroup(4, IndexSubset::from_elements(3, std::vector<int>{1, 3})).size(), 4U);
  EXPECT_EQ(young_subgroup(5, IndexSubset::from_elements(4, std::vector<int>{1, 2, 4})).size(), 12U);
  EXPECT_EQ(young_subgroup(4, IndexSubset(3)).size(), 1U);
  EXPECT_EQ(young_subgroup(4, IndexSubset::full(3)).size(), 24U);
}

TEST(Permutation, LexRankRoundTrip) {
  const auto all = osc::all_permutations(5);
  ASSERT_EQ(all.size(), 120U);
  for (std::size_t r = 0; r < all.size(); ++r) {
    EXPECT_EQ(osc::lex_rank(all[r]), r);
    EXPECT_EQ(osc::lex_unrank(5, r), all[r]);
    if (r > 0) {
      EXPECT_LT(all[r - 1], all[r]);
    }
  }
}

TEST(Permutation, GroupAxiomsOnRandomTriples) {
  std::mt19937 gen(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 9);
    auto draw = [&] {
      std::vector<int> word(static_cast<std::size_t>(n));
      std::iota(word.begin(), word.end(), 1);
      std::shuffle(word.begin(), word.end(), gen);
      return Permutation::from_word(word);
    };
    const Permutation p = draw(), q = draw(), r = draw();
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_TRUE((p * p.inverse()).is_identity());
    EXPECT_EQ((p * q).inverse(), q.inverse() * p.inverse());
  }
}
