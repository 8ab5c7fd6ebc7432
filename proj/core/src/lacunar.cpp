#include "osc/lacunar.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "osc/limits.hpp"

namespace osc {

BigInt fibonacci(unsigned m) {
  BigInt result;
  mpz_fib_ui(result.get_mpz_t(), m);
  return result;
}

int m_value(const IndexSubset& set, int n, int ell) {
  if (ell < 1 || ell > n) {
    throw std::out_of_range("m_value: l = " + std::to_string(ell) + " not in [" +
                            std::to_string(n) + "]");
  }
  if (!set.is_subset_of(IndexSubset::full(n))) {
    throw std::invalid_argument("m_value: set is not inside [n]");
  }
  const std::uint64_t at_or_above = set.bits() >> ell;
  if (at_or_above == 0) return n + 1 - ell;
  return std::countr_zero(at_or_above);
}

std::vector<int> m_vector(const IndexSubset& set, int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int ell = 1; ell <= n; ++ell) out[static_cast<std::size_t>(ell - 1)] = m_value(set, n, ell);
  return out;
}

IndexSubset non_shadow(const IndexSubset& set, int n) {
  if (n < 1) throw std::invalid_argument("non_shadow: n must be positive");
  if (!set.is_subset_of(IndexSubset::full(n))) {
    throw std::invalid_argument("non_shadow: set is not inside [n]");
  }
  const std::uint64_t shadow = set.bits() | (set.bits() >> 1);
  return IndexSubset(n - 1, universe_mask(n - 1) & ~shadow);
}

namespace {

void collect_lacunar(int top, int next, std::uint64_t bits, std::vector<std::uint64_t>& out) {
  out.push_back(bits);
  for (int k = next; k <= top; ++k) collect_lacunar(top, k + 2, bits | (std::uint64_t{1} << k), out);
}

}  // namespace

LacunarCatalog::LacunarCatalog(int n) : n_(n) {
  if (n < 1 || n > kMaxDegree) {
    throw std::invalid_argument("lacunar catalog needs 1 <= n <= " + std::to_string(kMaxDegree) +
                                ", got " + std::to_string(n));
  }
  std::vector<std::uint64_t> masks;
  collect_lacunar(n - 1, 1, 0, masks);

  struct Keyed {
    int sum;
    int size;
    std::uint64_t bits;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(masks.size());
  for (std::uint64_t bits : masks) {
    IndexSubset s(n - 1, bits);
    keyed.push_back({s.sum(), s.size(), bits});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.sum != b.sum) return a.sum < b.sum;
    if (a.size != b.size) return a.size < b.size;
    // Equal sizes: the sorted element lists first differ at the smallest
    // element of the symmetric difference.
    const std::uint64_t differ = a.bits ^ b.bits;
    return (a.bits & differ & (~differ + 1)) != 0;
  });

  sets_.reserve(keyed.size());
  shadows_.reserve(keyed.size());
  for (const Keyed& k : keyed) {
    sets_.emplace_back(n - 1, k.bits);
    shadows_.push_back(non_shadow(sets_.back(), n));
  }
}

const IndexSubset& LacunarCatalog::set(std::size_t i) const {
  if (i < 1 || i > sets_.size()) throw std::out_of_range("catalog index out of range");
  return sets_[i - 1];
}

const IndexSubset& LacunarCatalog::non_shadow_of(std::size_t i) const {
  if (i < 1 || i > shadows_.size()) throw std::out_of_range("catalog index out of range");
  return shadows_[i - 1];
}

std::size_t LacunarCatalog::index_of(const IndexSubset& set) const {
  for (std::size_t k = 0; k < sets_.size(); ++k) {
    if (sets_[k].bits() == set.bits()) return k + 1;
  }
  throw std::invalid_argument("set " + set.to_string() + " is not a lacunar subset of [" +
                              std::to_string(n_ - 1) + "]");
}

std::size_t locate_interval(const IndexSubset& j_set, const LacunarCatalog& catalog,
                            bool check_unique) {
  const int n = catalog.n();
  if (!j_set.is_subset_of(IndexSubset::full(n - 1))) {
    throw std::invalid_argument("locate_interval: J is not inside [n-1]");
  }
  std::size_t found = 0;
  for (std::size_t i = 1; i <= catalog.size(); ++i) {
    const bool lower = catalog.non_shadow_of(i).is_subset_of(j_set);
    const bool upper = (j_set.bits() & catalog.set(i).bits()) == 0;
    if (!(lower && upper)) continue;
    if (found != 0) {
      throw InvariantViolation("locate_interval: J = " + j_set.to_string() +
                               " lies in two Boolean intervals");
    }
    found = i;
    if (!check_unique) break;
  }
  if (found == 0) {
    throw InvariantViolation("locate_interval: no lacunar interval contains J = " +
                             j_set.to_string());
  }
  return found;
}

}  // namespace osc
