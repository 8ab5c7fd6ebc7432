#include "osc/permutation.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace osc {

namespace {

void check_degree(int n) {
  if (n < 1 || n > Permutation::kMaxDegree) {
    throw std::invalid_argument("permutation degree must lie in [1, " +
                                std::to_string(Permutation::kMaxDegree) + "], got " +
                                std::to_string(n));
  }
}

void check_same_degree(const Permutation& p, const Permutation& q, const char* what) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument(std::string(what) + ": degree mismatch (" +
                                std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()) + ")");
  }
}

}  // namespace

Permutation Permutation::identity(int n) {
  check_degree(n);
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  return from_word(word);
}

Permutation Permutation::from_word(std::span<const int> word) {
  const int n = static_cast<int>(word.size());
  check_degree(n);
  std::array<bool, kMaxDegree + 1> seen{};
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int k = 0; k < n; ++k) {
    const int value = word[static_cast<std::size_t>(k)];
    if (value < 1 || value > n || seen[static_cast<std::size_t>(value)]) {
      throw std::invalid_argument("not a permutation word of [" + std::to_string(n) + "]");
    }
    seen[static_cast<std::size_t>(value)] = true;
    p.word_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(value);
  }
  return p;
}

Permutation Permutation::cycle(int n, std::span<const int> indices) {
  check_degree(n);
  if (indices.empty()) throw std::invalid_argument("cycle needs at least one index");
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int i : indices) {
    if (i < 1 || i > n) {
      throw std::invalid_argument("cycle index " + std::to_string(i) + " not in [" +
                                  std::to_string(n) + "]");
    }
    if (used[static_cast<std::size_t>(i)]) {
      throw std::invalid_argument("cycle index " + std::to_string(i) + " repeated");
    }
    used[static_cast<std::size_t>(i)] = true;
  }
  const std::size_t k = indices.size();
  for (std::size_t j = 0; j < k; ++j) {
    word[static_cast<std::size_t>(indices[j] - 1)] = indices[(j + 1) % k];
  }
  return from_word(word);
}

Permutation Permutation::simple_transposition(int n, int i) {
  if (i < 1 || i >= n) {
    throw std::invalid_argument("s_i needs i in [n-1], got i = " + std::to_string(i));
  }
  const int pair[] = {i, i + 1};
  return cycle(n, pair);
}

Permutation Permutation::reversal(int n) {
  check_degree(n);
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) word[static_cast<std::size_t>(k)] = n - k;
  return from_word(word);
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> word;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string token(text.substr(pos, comma - pos));
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (token.empty() || !std::all_of(token.begin(), token.end(), ::isdigit) ||
        token.size() > 4) {
      throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
    }
    word.push_back(std::stoi(token));
    pos = comma + 1;
  }
  return from_word(word);
}

std::vector<int> Permutation::word() const {
  return std::vector<int>(word_.begin(), word_.begin() + n_);
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.n_ = n_;
  for (int k = 0; k < n_; ++k) {
    r.word_[static_cast<std::size_t>(word_[static_cast<std::size_t>(k)] - 1)] =
        static_cast<std::uint8_t>(k + 1);
  }
  return r;
}

bool Permutation::is_identity() const {
  for (int k = 0; k < n_; ++k) {
    if (word_[static_cast<std::size_t>(k)] != k + 1) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (int k = 0; k < n_; ++k) {
    if (k > 0) out += ',';
    out += std::to_string(word_[static_cast<std::size_t>(k)]);
  }
  return out;
}

std::string Permutation::compact_string() const {
  if (n_ > 9) return to_string();
  std::string out;
  for (int k = 0; k < n_; ++k) out += static_cast<char>('0' + word_[static_cast<std::size_t>(k)]);
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  check_same_degree(p, q, "compose");
  Permutation r;
  r.n_ = p.n_;
  for (int k = 0; k < p.n_; ++k) {
    r.word_[static_cast<std::size_t>(k)] =
        p.word_[static_cast<std::size_t>(q.word_[static_cast<std::size_t>(k)] - 1)];
  }
  return r;
}

std::strong_ordering lex_compare(const Permutation& u, const Permutation& v) {
  check_same_degree(u, v, "lex_compare");
  return u <=> v;
}

IndexSubset descent_set(const Permutation& w) {
  const int n = w.degree();
  std::uint64_t bits = 0;
  for (int i = 1; i < n; ++i) {
    if (w(i) > w(i + 1)) bits |= std::uint64_t{1} << i;
  }
  return IndexSubset(n - 1, bits);
}

std::vector<Permutation> young_subgroup(int n, const IndexSubset& generators) {
  check_degree(n);
  if (!generators.is_subset_of(IndexSubset::full(n - 1))) {
    throw std::invalid_argument("young_subgroup: generator set is not inside [n-1]");
  }
  // Blocks of positions [first, last] (1-indexed), one per maximal run of I.
  std::vector<std::pair<int, int>> blocks;
  for (int i = 1; i < n; ++i) {
    if (!generators.contains(i)) continue;
    int j = i;
    while (j + 1 < n && generators.contains(j + 1)) ++j;
    blocks.emplace_back(i, j + 1);
    i = j;
  }

  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  // Odometer over the blocks, each cycling through its permutations in
  // lexicographic order; std::next_permutation wraps to sorted on exhaustion.
  while (true) {
    out.push_back(Permutation::from_word(word));
    std::size_t b = blocks.size();
    bool advanced = false;
    while (b > 0) {
      --b;
      auto first = word.begin() + (blocks[b].first - 1);
      auto last = word.begin() + blocks[b].second;
      if (std::next_permutation(first, last)) {
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  check_degree(n);
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_word(word));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

std::size_t lex_rank(const Permutation& w) {
  const int n = w.degree();
  std::size_t rank = 0;
  std::uint64_t used = 0;
  for (int k = 1; k <= n; ++k) {
    const int value = w(k);
    // unused values smaller than w(k)
    const std::uint64_t below = ((std::uint64_t{1} << value) - 1) & ~used & ~std::uint64_t{1};
    rank = rank * static_cast<std::size_t>(n - k + 1) +
           static_cast<std::size_t>(std::popcount(below));
    used |= std::uint64_t{1} << value;
  }
  return rank;
}

Permutation lex_unrank(int n, std::size_t rank) {
  check_degree(n);
  std::vector<std::size_t> digits(static_cast<std::size_t>(n));
  for (int k = n; k >= 1; --k) {
    const auto base = static_cast<std::size_t>(n - k + 1);
    digits[static_cast<std::size_t>(k - 1)] = rank % base;
    rank /= base;
  }
  if (rank != 0) throw std::out_of_range("lex_unrank: rank exceeds n!");
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(n));
  for (std::size_t d : digits) {
    word.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return Permutation::from_word(word);
}

}  // namespace osc
