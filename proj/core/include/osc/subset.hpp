#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace osc {

// A subset of [universe] = {1, ..., universe}, stored as a bitmask where bit
// k marks the element k. Descent sets and lacunar sets live in [n-1]; the
// sets I fed to m-values and non-shadows may live in [n].
class IndexSubset {
 public:
  static constexpr int kMaxUniverse = 62;

  IndexSubset() = default;
  explicit IndexSubset(int universe, std::uint64_t bits = 0);

  static IndexSubset from_elements(int universe, std::span<const int> elements);
  static IndexSubset full(int universe);

  int universe() const { return universe_; }
  std::uint64_t bits() const { return bits_; }

  bool contains(int k) const {
    return k >= 1 && k <= universe_ && ((bits_ >> k) & 1U) != 0;
  }
  bool empty() const { return bits_ == 0; }
  int size() const;
  int sum() const;
  std::vector<int> elements() const;

  // Containment of members only; universes may differ.
  bool is_subset_of(const IndexSubset& other) const { return (bits_ & ~other.bits_) == 0; }

  // No two consecutive integers.
  bool is_lacunar() const { return (bits_ & (bits_ >> 1)) == 0; }

  // [universe] minus this set.
  IndexSubset complement() const;

  // "{2,3}" or "{}".
  std::string to_string() const;

  friend bool operator==(const IndexSubset&, const IndexSubset&) = default;

 private:
  int universe_ = 0;
  std::uint64_t bits_ = 0;
};

inline std::uint64_t universe_mask(int universe) {
  // bits 1..universe
  return universe <= 0 ? 0 : (((std::uint64_t{1} << universe) - 1) << 1);
}

}  // namespace osc
