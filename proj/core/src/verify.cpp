#include "osc/verify.hpp"

#include <stdexcept>

#include "osc/basis.hpp"
#include "osc/identities.hpp"
#include "osc/lacunar.hpp"
#include "osc/rng.hpp"
#include "osc/spectrum.hpp"

namespace osc {

namespace {

std::string weights_string(const WeightVector& w) {
  std::string out = "(";
  for (int ell = 1; ell <= w.n(); ++ell) out += (ell > 1 ? "," : "") + display_string(w[ell]);
  return out + ")";
}

}  // namespace

WeightVector fixed_random_weights(int n, unsigned salt) {
  Xoshiro256 rng(0x5eed0f05c111ULL, salt);
  WeightVector w{std::vector<Rational>(static_cast<std::size_t>(n))};
  for (Rational& v : w.values) {
    v = Rational(static_cast<long>(1 + rng.below(9)), static_cast<unsigned long>(1 + rng.below(7)));
    v.canonicalize();
  }
  return w;
}

std::vector<SuiteCheck> verify_triangularity(int n, const Limits& limits) {
  const BasisFamily a = BasisFamily::descent_destroying(n, limits);
  const LacunarCatalog catalog(n);
  const std::vector<std::size_t> order = basis_order(n, Ordering::qindex, limits);
  const std::vector<std::size_t> qind = q_indices(catalog, limits);
  std::vector<SuiteCheck> out;
  for (int ell = 1; ell <= n; ++ell) {
    const RationalMatrix m = rmul_matrix(somewhere_to_below(n, ell), a, Ordering::qindex, limits);
    const std::vector<Rational> diagonal = m.diagonal();
    std::size_t bad_diagonal = 0;
    for (std::size_t k = 0; k < diagonal.size(); ++k) {
      if (diagonal[k] != m_value(catalog.set(qind[order[k]]), n, ell)) ++bad_diagonal;
    }
    const bool upper = m.is_upper_triangular();
    out.push_back({"triangularity", "R(t_" + std::to_string(ell) + ") in a basis, Q-index order",
                   upper ? (bad_diagonal == 0 ? "upper triangular, diagonal m_{Q,l}"
                                              : std::to_string(bad_diagonal) + " diagonal mismatches")
                         : "entries below the diagonal",
                   upper && bad_diagonal == 0});
  }
  return out;
}

std::vector<SuiteCheck> verify_annihilator(int n, const Limits& limits) {
  const std::vector<std::pair<std::string, WeightVector>> cases{
      {"all ones", WeightVector::constant(n, 1)},
      {"random-to-below", WeightVector::random_to_below(n)},
      {"top-to-random", WeightVector::top_to_random(n)},
      {"fixed random", fixed_random_weights(n)},
  };
  std::vector<SuiteCheck> out;
  for (const auto& [label, weights] : cases) {
    const AnnihilatorResult result = annihilator_check(weights, limits);
    out.push_back({"annihilator", "prod (t - g_I) = 0, " + label,
                   result.annihilates ? weights_string(weights)
                                      : std::to_string(result.residual.term_count()) +
                                            " surviving terms",
                   result.annihilates});
  }
  return out;
}

std::vector<SuiteCheck> verify_duality(int n, const Limits& limits) {
  const BasisFamily a = BasisFamily::descent_destroying(n, limits);
  const BasisFamily b = dual_basis(a);
  std::vector<SuiteCheck> out;

  std::size_t bad = 0;
  for (std::size_t p = 0; p < a.size(); ++p) {
    for (std::size_t q = 0; q < b.size(); ++q) {
      if (bilinear_form(a.element(p), b.element(q)) != (p == q ? 1 : 0)) ++bad;
    }
  }
  out.push_back({"duality", "f(a_p, b_q) = [p = q]",
                 bad == 0 ? "Gram matrix is the identity" : std::to_string(bad) + " bad entries",
                 bad == 0});

  for (int ell = 1; ell <= n; ++ell) {
    const bool same = antipode(somewhere_to_below(n, ell)) == below_to_somewhere(n, ell);
    out.push_back({"duality", "S(t_" + std::to_string(ell) + ") = t'_" + std::to_string(ell), "",
                   same});
  }

  for (int ell = 1; ell <= n; ++ell) {
    const RationalMatrix m =
        rmul_matrix(below_to_somewhere(n, ell), b, Ordering::qindex_desc, limits);
    out.push_back({"duality",
                   "R(t'_" + std::to_string(ell) + ") in b basis, decreasing Q-index order",
                   m.is_upper_triangular() ? "upper triangular" : "entries below the diagonal",
                   m.is_upper_triangular()});
  }

  // S is the permutation matrix of w -> w^{-1}, so S L S is L with rows and
  // columns relabelled by inversion.
  const std::vector<Permutation> perms = all_permutations(n);
  std::vector<std::size_t> inverse_rank;
  for (const Permutation& w : perms) inverse_rank.push_back(lex_rank(w.inverse()));
  for (const WeightVector& weights : {WeightVector::constant(n, 1), fixed_random_weights(n)}) {
    const RationalMatrix right =
        right_multiplication_matrix(one_sided_cycle_shuffle_prime(weights), limits);
    const RationalMatrix left = left_multiplication_matrix(one_sided_cycle_shuffle(weights), limits);
    const bool same = right == left.permuted(inverse_rank);
    out.push_back({"duality", "R(sum lambda t') = S L(sum lambda t) S^{-1}", weights_string(weights),
                   same});
  }
  return out;
}

std::vector<SuiteCheck> verify_identities(int n, const Limits& limits) {
  std::vector<SuiteCheck> out;
  for (const IdentityReport& report : {commutator_nilpotency(n, limits), identity_suite(n, limits)}) {
    for (const IdentityCheck& check : report.checks) {
      std::string detail;
      for (std::size_t k = 0; k < check.params.size(); ++k) {
        detail += (k ? "," : "") + std::to_string(check.params[k]);
      }
      if (!check.passed) {
        detail += ": " + std::to_string(check.residual_terms) + " surviving terms";
        if (check.smallest_residual) detail += ", smallest " + check.smallest_residual->to_string();
      }
      out.push_back({"identities", check.name, detail, check.passed});
    }
  }
  return out;
}

std::vector<SuiteCheck> verify_boolean_partition(int n) {
  const LacunarCatalog catalog(n);
  const std::uint64_t full = universe_mask(n - 1);
  std::uint64_t bad = 0;
  std::uint64_t total = 0;
  // Walk every J inside [n-1] as a submask of full.
  for (std::uint64_t j = full;; j = (j - 1) & full) {
    ++total;
    std::size_t matches = 0;
    for (std::size_t i = 1; i <= catalog.size(); ++i) {
      const std::uint64_t set = catalog.set(i).bits();
      const std::uint64_t shadow = catalog.non_shadow_of(i).bits();
      if ((shadow & ~j) == 0 && (j & set) == 0) ++matches;
    }
    if (matches != 1) ++bad;
    if (j == 0) break;
  }
  return {{"boolean-partition", "each J in exactly one [I', [n-1] \\ I]",
           std::to_string(total) + " subsets J, " + std::to_string(bad) + " violations", bad == 0}};
}

std::vector<SuiteCheck> run_suite(std::string_view name, int n, const Limits& limits) {
  if (name == "triangularity") return verify_triangularity(n, limits);
  if (name == "annihilator") return verify_annihilator(n, limits);
  if (name == "duality") return verify_duality(n, limits);
  if (name == "identities") return verify_identities(n, limits);
  if (name == "boolean-partition") return verify_boolean_partition(n);
  if (name == "all") {
    std::vector<SuiteCheck> out;
    for (std::string_view suite : kSuiteNames) {
      std::vector<SuiteCheck> part = run_suite(suite, n, limits);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace osc
