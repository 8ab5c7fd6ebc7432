#include "osc/identities.hpp"

#include <algorithm>
#include <stdexcept>

#include "osc/shuffles.hpp"

namespace osc {

bool IdentityReport::all_passed() const { return failures() == 0; }

std::size_t IdentityReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const IdentityCheck& c) { return !c.passed; }));
}

namespace {

IdentityCheck expect_zero(std::string name, std::vector<int> params, const AlgebraElement& residual) {
  IdentityCheck check{std::move(name), std::move(params), residual.is_zero(), residual.term_count(),
                      std::nullopt};
  if (!residual.is_zero()) check.smallest_residual = residual.terms().begin()->first;
  return check;
}

IdentityCheck expect_nonzero(std::string name, std::vector<int> params, const AlgebraElement& value) {
  return {std::move(name), std::move(params), !value.is_zero(), value.term_count(), std::nullopt};
}

class Generators {
 public:
  explicit Generators(int n) : n_(n) {
    for (int ell = 1; ell <= n; ++ell) t_.push_back(somewhere_to_below(n, ell));
    for (int i = 1; i < n; ++i) s_.emplace_back(Permutation::simple_transposition(n, i));
  }
  const AlgebraElement& t(int ell) const { return t_[static_cast<std::size_t>(ell - 1)]; }
  const AlgebraElement& s(int i) const { return s_[static_cast<std::size_t>(i - 1)]; }
  AlgebraElement one() const { return AlgebraElement::one(n_); }

 private:
  int n_;
  std::vector<AlgebraElement> t_;
  std::vector<AlgebraElement> s_;
};

int ceil_half(int k) { return (k + 1) / 2; }

}  // namespace

IdentityReport commutator_nilpotency(int n, const Limits& limits) {
  limits.require_algebra(n, "commutator_nilpotency");
  const Generators g(n);
  IdentityReport report{n, {}};
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const AlgebraElement c = commutator(g.t(i), g.t(j));
      const int span_exponent = j - i + 1;
      const int tail_exponent = ceil_half(n - j) + 1;
      const int needed = std::max(span_exponent, tail_exponent);
      // powers[k] = c^k, stopping early once a power vanishes
      std::vector<AlgebraElement> powers{AlgebraElement::one(n), c};
      while (static_cast<int>(powers.size()) <= needed && !powers.back().is_zero()) {
        powers.push_back(powers.back() * c);
      }
      auto power_of = [&](int k) -> const AlgebraElement& {
        return k < static_cast<int>(powers.size()) ? powers[static_cast<std::size_t>(k)]
                                                   : powers.back();
      };
      report.checks.push_back(
          expect_zero("commutator power j-i+1", {i, j, span_exponent}, power_of(span_exponent)));
      report.checks.push_back(expect_zero("commutator power ceil((n-j)/2)+1", {i, j, tail_exponent},
                                          power_of(tail_exponent)));
    }
  }
  if (n == 6) {
    const AlgebraElement c = commutator(g.t(1), g.t(3));
    const AlgebraElement square = c * c;
    report.checks.push_back(expect_nonzero("commutator square nonzero", {1, 3, 2}, square));
    report.checks.push_back(expect_zero("commutator cube", {1, 3, 3}, square * c));
  }
  return report;
}

IdentityReport identity_suite(int n, const Limits& limits) {
  limits.require_algebra(n, "identity_suite");
  const Generators g(n);
  const AlgebraElement one = g.one();
  IdentityReport report{n, {}};

  for (int i = 1; i < n; ++i) {
    report.checks.push_back(
        expect_zero("t_i = 1 + s_i t_{i+1}", {i}, g.t(i) - (one + g.s(i) * g.t(i + 1))));
  }
  // j = n is left out: s_n does not exist, and [t_i, t_n] = 0 since t_n = 1.
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      report.checks.push_back(expect_zero("(1 + s_j)[t_i, t_j] = 0", {i, j},
                                          (one + g.s(j)) * commutator(g.t(i), g.t(j))));
    }
  }
  if (n >= 2) {
    for (int i = 1; i <= n; ++i) {
      report.checks.push_back(expect_zero("t_{n-1}[t_i, t_{n-1}] = 0", {i},
                                          g.t(n - 1) * commutator(g.t(i), g.t(n - 1))));
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      AlgebraElement run = one;
      for (int k = i; k < j; ++k) run = run * g.s(k);
      report.checks.push_back(expect_zero(
          "[t_i, t_j] = [s_i ... s_{j-1}, t_j] t_j", {i, j},
          commutator(g.t(i), g.t(j)) - commutator(run, g.t(j)) * g.t(j)));
    }
  }
  for (int i = 1; i < n; ++i) {
    report.checks.push_back(expect_zero("t_{i+1} t_i = (t_i - 1) t_i", {i},
                                        g.t(i + 1) * g.t(i) - (g.t(i) - one) * g.t(i)));
  }
  for (int i = 1; i + 1 < n; ++i) {
    report.checks.push_back(
        expect_zero("t_{i+2}(t_i - 1) = (t_i - 1)(t_{i+1} - 1)", {i},
                    g.t(i + 2) * (g.t(i) - one) - (g.t(i) - one) * (g.t(i + 1) - one)));
  }
  return report;
}

AlgebraElement mixed_commutator_product(int n, int j, const std::vector<int>& ks) {
  if (j < 1 || j > n) throw std::out_of_range("mixed_commutator_product: j outside [n]");
  if (ks.empty()) throw std::invalid_argument("mixed_commutator_product: empty index sequence");
  const AlgebraElement tj = somewhere_to_below(n, j);
  AlgebraElement out = AlgebraElement::one(n);
  for (int k : ks) {
    if (k < 1 || k > j) throw std::out_of_range("mixed_commutator_product: index outside [j]");
    out = out * commutator(somewhere_to_below(n, k), tj);
    if (out.is_zero()) break;
  }
  return out;
}

bool mixed_product_vanishes(int n, int j, const std::vector<int>& ks) {
  const int m = static_cast<int>(ks.size());
  return m >= j - ks.back() + 1 || 2 * m >= n - j + 2;
}

IdentityCheck mixed_product_check(int n, int j, const std::vector<int>& ks, const Limits& limits) {
  limits.require_algebra(n, "mixed_product_check");
  const AlgebraElement product = mixed_commutator_product(n, j, ks);
  std::vector<int> params{j};
  params.insert(params.end(), ks.begin(), ks.end());
  if (mixed_product_vanishes(n, j, ks)) return expect_zero("mixed commutator product", params, product);
  IdentityCheck check{"mixed commutator product (no prediction)", params, true, product.term_count(),
                      std::nullopt};
  if (!product.is_zero()) check.smallest_residual = product.terms().begin()->first;
  return check;
}

}  // namespace osc
