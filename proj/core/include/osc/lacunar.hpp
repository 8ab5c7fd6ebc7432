#pragma once

#include <cstddef>
#include <vector>

#include "osc/rational.hpp"
#include "osc/subset.hpp"

namespace osc {

// f_0 = 0, f_1 = 1, f_m = f_{m-1} + f_{m-2}.
BigInt fibonacci(unsigned m);

// m_{I,l}: distance from l up to the smallest element of {0} u I u {n+1}
// that is >= l. I is a subset of [n] and l lies in [n].
int m_value(const IndexSubset& set, int n, int ell);

// (m_{I,1}, ..., m_{I,n})
std::vector<int> m_vector(const IndexSubset& set, int n);

// I' = [n-1] \ (I u (I-1)): the i in [n-1] with neither i nor i+1 in I.
IndexSubset non_shadow(const IndexSubset& set, int n);

// All lacunar subsets Q_1, ..., Q_{f_{n+1}} of [n-1], ordered by sum, then
// by size, then lexicographically by their sorted element lists. Indices
// into the catalog are 1-based throughout the library, so that set(i) is Q_i.
class LacunarCatalog {
 public:
  static constexpr int kMaxDegree = 34;

  explicit LacunarCatalog(int n);

  int n() const { return n_; }
  std::size_t size() const { return sets_.size(); }
  const std::vector<IndexSubset>& sets() const { return sets_; }
  // Q_i, 1 <= i <= size()
  const IndexSubset& set(std::size_t i) const;
  // Q_i' for every i, cached alongside the sets.
  const IndexSubset& non_shadow_of(std::size_t i) const;
  // Catalog position of a lacunar subset of [n-1]; throws if absent.
  std::size_t index_of(const IndexSubset& set) const;

 private:
  int n_;
  std::vector<IndexSubset> sets_;
  std::vector<IndexSubset> shadows_;
};

inline LacunarCatalog enumerate_lacunar(int n) { return LacunarCatalog(n); }

// The unique lacunar I with I' <= J <= [n-1] \ I. Scans the catalog and
// returns the first match (1-based catalog index); with check_unique the
// scan continues and throws InvariantViolation on a second match.
std::size_t locate_interval(const IndexSubset& j_set, const LacunarCatalog& catalog,
                            bool check_unique = false);

}  // namespace osc
