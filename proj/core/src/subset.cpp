#include "osc/subset.hpp"

#include <bit>
#include <stdexcept>

namespace osc {

IndexSubset::IndexSubset(int universe, std::uint64_t bits) : universe_(universe), bits_(bits) {
  if (universe < 0 || universe > kMaxUniverse) {
    throw std::out_of_range("subset universe must lie in [0, " + std::to_string(kMaxUniverse) +
                            "], got " + std::to_string(universe));
  }
  if ((bits & ~universe_mask(universe)) != 0) {
    throw std::out_of_range("subset has members outside [" + std::to_string(universe) + "]");
  }
}

IndexSubset IndexSubset::from_elements(int universe, std::span<const int> elements) {
  std::uint64_t bits = 0;
  for (int k : elements) {
    if (k < 1 || k > universe) {
      throw std::out_of_range("element " + std::to_string(k) + " not in [" +
                              std::to_string(universe) + "]");
    }
    bits |= std::uint64_t{1} << k;
  }
  return IndexSubset(universe, bits);
}

IndexSubset IndexSubset::full(int universe) { return IndexSubset(universe, universe_mask(universe)); }

int IndexSubset::size() const { return std::popcount(bits_); }

int IndexSubset::sum() const {
  int total = 0;
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) total += std::countr_zero(rest);
  return total;
}

std::vector<int> IndexSubset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

IndexSubset IndexSubset::complement() const {
  return IndexSubset(universe_, universe_mask(universe_) & ~bits_);
}

std::string IndexSubset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int k : elements()) {
    if (!first) out += ',';
    out += std::to_string(k);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace osc
