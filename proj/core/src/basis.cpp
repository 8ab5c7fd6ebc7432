#include "osc/basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace osc {

namespace {

std::size_t factorial_size(int n) {
  std::size_t out = 1;
  for (int k = 2; k <= n; ++k) out *= static_cast<std::size_t>(k);
  return out;
}

}  // namespace

AlgebraElement a_element(const Permutation& w) {
  AlgebraElement::Terms terms;
  for (const Permutation& sigma : young_subgroup(w.degree(), descent_set(w))) {
    terms.emplace(w * sigma, 1);
  }
  return AlgebraElement::from_terms(w.degree(), std::move(terms));
}

std::size_t q_index(const Permutation& w, const LacunarCatalog& catalog) {
  if (w.degree() != catalog.n()) throw std::invalid_argument("q_index: degree mismatch");
  const IndexSubset descents = descent_set(w);
  for (std::size_t i = 1; i <= catalog.size(); ++i) {
    if (catalog.non_shadow_of(i).is_subset_of(descents)) return i;
  }
  throw InvariantViolation("q_index: no lacunar set fits Des " + descents.to_string());
}

std::vector<std::size_t> q_indices(const LacunarCatalog& catalog, const Limits& limits) {
  limits.require_algebra(catalog.n(), "q_indices");
  std::vector<std::size_t> out;
  for (const Permutation& w : all_permutations(catalog.n())) out.push_back(q_index(w, catalog));
  return out;
}

BasisFamily BasisFamily::standard(int n, const Limits& limits) {
  limits.require_algebra(n, "standard basis");
  BasisFamily family(n, BasisKind::standard);
  family.labels_ = all_permutations(n);
  for (const Permutation& w : family.labels_) family.elements_.emplace_back(w);
  return family;
}

BasisFamily BasisFamily::descent_destroying(int n, const Limits& limits) {
  limits.require_algebra(n, "descent-destroying basis");
  BasisFamily family(n, BasisKind::a);
  family.labels_ = all_permutations(n);
  for (const Permutation& w : family.labels_) {
    AlgebraElement a = a_element(w);
    std::vector<std::size_t> support;
    for (const auto& term : a.terms()) support.push_back(lex_rank(term.first));
    family.a_support_.push_back(std::move(support));
    family.elements_.push_back(std::move(a));
  }
  return family;
}

std::vector<Rational> BasisFamily::coordinates(const AlgebraElement& y) const {
  if (y.degree() != n_) throw std::invalid_argument("coordinates: degree mismatch");
  return coordinates(to_dense(y));
}

std::vector<Rational> BasisFamily::coordinates(std::vector<Rational> dense) const {
  if (dense.size() != labels_.size()) {
    throw std::invalid_argument("coordinates: expected n! dense coordinates");
  }
  switch (kind_) {
    case BasisKind::standard:
      return dense;
    case BasisKind::a: {
      // a_r = perm(r) + lex-smaller terms, so peel from the top rank down.
      std::vector<Rational> out(dense.size());
      for (std::size_t r = dense.size(); r-- > 0;) {
        if (is_zero(dense[r])) continue;
        const Rational c = dense[r];
        for (std::size_t v : a_support_[r]) dense[v] -= c;
        out[r] = c;
      }
      return out;
    }
    case BasisKind::b: {
      std::vector<Rational> out(dense.size());
      for (std::size_t r = 0; r < dense.size(); ++r) {
        for (std::size_t v : a_support_[r]) out[r] += dense[v];
      }
      return out;
    }
  }
  throw std::logic_error("coordinates: unknown basis kind");
}

BasisFamily dual_basis(const BasisFamily& family) {
  if (family.kind_ != BasisKind::a) {
    throw std::invalid_argument("dual_basis: needs the descent-destroying family");
  }
  BasisFamily dual(family.n_, BasisKind::b);
  dual.labels_ = family.labels_;
  dual.a_support_ = family.a_support_;
  const std::size_t size = family.labels_.size();
  // Column q of A^{-T} by forward substitution: sum over v in supp(a_p) of
  // B[v][q] equals [p = q], and B[v][q] = 0 for v < q.
  std::vector<Rational> column(size);
  for (std::size_t q = 0; q < size; ++q) {
    std::fill(column.begin(), column.end(), Rational(0));
    AlgebraElement::Terms terms;
    for (std::size_t p = q; p < size; ++p) {
      Rational value = p == q ? 1 : 0;
      for (std::size_t v : family.a_support_[p]) {
        if (v != p && v >= q) value -= column[v];
      }
      if (!is_zero(value)) terms.emplace_hint(terms.end(), family.labels_[p], value);
      column[p] = std::move(value);
    }
    dual.elements_.push_back(AlgebraElement::from_terms(family.n_, std::move(terms)));
  }
  return dual;
}

std::vector<std::size_t> basis_order(int n, Ordering ordering, const Limits& limits) {
  limits.require_algebra(n, "basis_order");
  std::vector<std::size_t> order(factorial_size(n));
  for (std::size_t r = 0; r < order.size(); ++r) order[r] = r;
  if (ordering == Ordering::lex) return order;
  const std::vector<std::size_t> qind = q_indices(LacunarCatalog(n), limits);
  if (ordering == Ordering::qindex) {
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return qind[a] < qind[b]; });
  } else {
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return qind[a] > qind[b]; });
  }
  return order;
}

RationalMatrix rmul_matrix(const AlgebraElement& x, const BasisFamily& family, Ordering ordering,
                           const Limits& limits) {
  if (x.degree() != family.n()) throw std::invalid_argument("rmul_matrix: degree mismatch");
  const std::vector<std::size_t> order = basis_order(family.n(), ordering, limits);
  std::vector<std::size_t> position(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = k;

  RationalMatrix out(order.size(), order.size());
  std::vector<Rational> dense;
  Rational product;
  for (std::size_t col = 0; col < order.size(); ++col) {
    dense.assign(order.size(), Rational(0));
    for (const auto& [v, c] : family.element(order[col]).terms()) {
      for (const auto& [step, d] : x.terms()) {
        mpq_mul(product.get_mpq_t(), c.get_mpq_t(), d.get_mpq_t());
        dense[lex_rank(v * step)] += product;
      }
    }
    const std::vector<Rational> coords = family.coordinates(std::move(dense));
    for (std::size_t r = 0; r < coords.size(); ++r) {
      if (!is_zero(coords[r])) out(position[r], col) = coords[r];
    }
  }
  return out;
}

std::vector<BigInt> filtration_dimensions(const LacunarCatalog& catalog, const Limits& limits) {
  std::vector<BigInt> dims(catalog.size() + 1);
  for (std::size_t i : q_indices(catalog, limits)) dims[i] += 1;
  for (std::size_t i = 1; i < dims.size(); ++i) dims[i] += dims[i - 1];
  return dims;
}

const char* to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::standard: return "std";
    case BasisKind::a: return "a";
    case BasisKind::b: return "b";
  }
  return "?";
}

const char* to_string(Ordering ordering) {
  switch (ordering) {
    case Ordering::lex: return "lex";
    case Ordering::qindex: return "qindex";
    case Ordering::qindex_desc: return "qindex-desc";
  }
  return "?";
}

}  // namespace osc
