#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "osc/subset.hpp"

namespace osc {

// A permutation of [n] in one-line notation: the word (w(1), ..., w(n)).
// Every public interface is 1-indexed. Storage is inline, so degrees are
// bounded by kMaxDegree.
class Permutation {
 public:
  static constexpr int kMaxDegree = 32;

  Permutation() = default;

  static Permutation identity(int n);
  // Validates that word is a rearrangement of 1..n.
  static Permutation from_word(std::span<const int> word);
  // cyc_{i1,...,ik}: i1 -> i2 -> ... -> ik -> i1, everything else fixed.
  static Permutation cycle(int n, std::span<const int> indices);
  // s_i = cyc_{i,i+1}, for i in [n-1].
  static Permutation simple_transposition(int n, int i);
  // (n, n-1, ..., 1)
  static Permutation reversal(int n);
  // Parses a comma-separated one-line word such as "3,2,4,1".
  static Permutation parse(std::string_view text);

  int degree() const { return n_; }
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  std::vector<int> word() const;

  Permutation inverse() const;
  bool is_identity() const;

  // "3,2,4,1"
  std::string to_string() const;
  // "3241"; only unambiguous for n <= 9, used for compact labels.
  std::string compact_string() const;

  // Same degree: lexicographic order on one-line words.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxDegree> word_{};

  friend Permutation compose(const Permutation& p, const Permutation& q);
};

// (pq)(i) = p(q(i)). Throws std::invalid_argument on mismatched degrees.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

// Lexicographic comparison; throws on mismatched degrees.
std::strong_ordering lex_compare(const Permutation& u, const Permutation& v);

// {i in [n-1] : w(i) > w(i+1)}, as a subset of [n-1].
IndexSubset descent_set(const Permutation& w);

// G(I): the subgroup generated by {s_i : i in I}, I a subset of [n-1].
// Enumerated as the product of the full symmetric groups on the blocks
// formed by the maximal runs of I; returned in lexicographic order.
std::vector<Permutation> young_subgroup(int n, const IndexSubset& generators);

// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

// Position of w in the lexicographic enumeration of S_n (0-based).
std::size_t lex_rank(const Permutation& w);
Permutation lex_unrank(int n, std::size_t rank);

}  // namespace osc
