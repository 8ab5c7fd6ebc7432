#include "osc/spectrum.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "osc/basis.hpp"

namespace osc {

Rational eigenvalue_for_set(const WeightVector& weights, const IndexSubset& set) {
  const int n = weights.n();
  if (!set.is_lacunar()) {
    throw std::invalid_argument("eigenvalue_for_set: " + set.to_string() + " is not lacunar");
  }
  if (!set.is_subset_of(IndexSubset(n - 1, universe_mask(n - 1)))) {
    throw std::invalid_argument("eigenvalue_for_set: " + set.to_string() + " is not inside [" +
                                std::to_string(n - 1) + "]");
  }
  Rational g = 0;
  for (int ell = 1; ell <= n; ++ell) {
    if (is_zero(weights[ell])) continue;
    g += weights[ell] * m_value(set, n, ell);
  }
  return g;
}

BigInt delta(std::size_t i, const LacunarCatalog& catalog) {
  const int n = catalog.n();
  std::vector<int> cuts{1};
  for (int e : catalog.set(i).elements()) cuts.push_back(e);
  cuts.push_back(n + 1);
  BigInt out = factorial(static_cast<unsigned>(n));
  for (std::size_t k = 1; k < cuts.size(); ++k) {
    const int j = cuts[k] - cuts[k - 1];
    out /= factorial(static_cast<unsigned>(j));
    if (k >= 2) out *= j - 1;
  }
  return out;
}

std::vector<BigInt> deltas(const LacunarCatalog& catalog) {
  std::vector<BigInt> out;
  out.reserve(catalog.size());
  for (std::size_t i = 1; i <= catalog.size(); ++i) out.push_back(delta(i, catalog));
  return out;
}

std::vector<BigInt> deltas_by_counting(const LacunarCatalog& catalog, const Limits& limits) {
  std::vector<BigInt> out(catalog.size());
  for (std::size_t i : q_indices(catalog, limits)) out[i - 1] += 1;
  return out;
}

BigInt delta_by_counting(std::size_t i, const LacunarCatalog& catalog, const Limits& limits) {
  if (i < 1 || i > catalog.size()) throw std::out_of_range("delta_by_counting: bad index");
  return deltas_by_counting(catalog, limits)[i - 1];
}

namespace {

std::vector<std::pair<Rational, BigInt>> merge_descending(const std::vector<SpectrumRow>& rows) {
  std::map<Rational, BigInt> merged;
  for (const SpectrumRow& row : rows) merged[row.eigenvalue] += row.multiplicity;
  return {merged.rbegin(), merged.rend()};
}

}  // namespace

SpectrumReport full_spectrum(const WeightVector& weights) {
  const int n = weights.n();
  const LacunarCatalog catalog(n);
  SpectrumReport report;
  report.n = n;
  report.weights = weights;
  report.rows.reserve(catalog.size());
  for (std::size_t i = 1; i <= catalog.size(); ++i) {
    const IndexSubset& set = catalog.set(i);
    report.rows.push_back({set, m_vector(set, n), eigenvalue_for_set(weights, set), delta(i, catalog)});
  }
  report.aggregate = merge_descending(report.rows);
  return report;
}

std::vector<Rational> distinct_eigenvalues(const WeightVector& weights) {
  const LacunarCatalog catalog(weights.n());
  std::vector<Rational> values;
  for (const IndexSubset& set : catalog.sets()) values.push_back(eigenvalue_for_set(weights, set));
  std::sort(values.begin(), values.end(), std::greater<>());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

AnnihilatorResult annihilator_check(const WeightVector& weights, const Limits& limits) {
  const int n = weights.n();
  limits.require_algebra(n, "annihilator_check");
  const AlgebraElement t = one_sided_cycle_shuffle(weights);
  const LacunarCatalog catalog(n);
  AlgebraElement acc = AlgebraElement::one(n);
  for (const IndexSubset& set : catalog.sets()) {
    acc = acc * (t - AlgebraElement::scalar(n, eigenvalue_for_set(weights, set)));
    if (acc.is_zero()) break;
  }
  return {acc.is_zero(), std::move(acc)};
}

namespace {

std::vector<Rational> matrix_times(const RationalMatrix& m, const std::vector<Rational>& v) {
  std::vector<Rational> out(m.rows());
  Rational product;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_zero(v[c])) continue;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (is_zero(m(r, c))) continue;
      mpq_mul(product.get_mpq_t(), m(r, c).get_mpq_t(), v[c].get_mpq_t());
      out[r] += product;
    }
  }
  return out;
}

}  // namespace

Polynomial vector_annihilator(const RationalMatrix& m, const std::vector<Rational>& v) {
  if (!m.is_square() || v.size() != m.rows()) {
    throw std::invalid_argument("vector_annihilator: shape mismatch");
  }
  // Echelon rows of the power sequence v, Mv, M^2 v, ..., each tagged with
  // the combination of powers that produced it.
  struct Row {
    std::vector<Rational> values;
    std::size_t pivot;
    std::vector<Rational> combo;
  };
  std::vector<Row> rows;
  std::vector<Rational> current = v;
  for (std::size_t k = 0; k <= m.rows(); ++k) {
    std::vector<Rational> reduced = current;
    std::vector<Rational> combo(k + 1);
    combo[k] = 1;
    for (const Row& row : rows) {
      if (is_zero(reduced[row.pivot])) continue;
      const Rational f = reduced[row.pivot] / row.values[row.pivot];
      for (std::size_t c = row.pivot; c < reduced.size(); ++c) {
        if (!is_zero(row.values[c])) reduced[c] -= f * row.values[c];
      }
      for (std::size_t c = 0; c < row.combo.size(); ++c) combo[c] -= f * row.combo[c];
    }
    const auto nonzero = std::find_if(reduced.begin(), reduced.end(),
                                      [](const Rational& q) { return !is_zero(q); });
    if (nonzero == reduced.end()) return Polynomial(std::move(combo));
    const auto pivot = static_cast<std::size_t>(nonzero - reduced.begin());
    rows.push_back({std::move(reduced), pivot, std::move(combo)});
    current = matrix_times(m, current);
  }
  throw InvariantViolation("vector_annihilator: no dependence within dimension + 1 powers");
}

Polynomial matrix_minimal_polynomial(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("matrix_minimal_polynomial: not square");
  Polynomial out = Polynomial::constant(1);
  std::vector<Rational> unit(m.rows());
  for (std::size_t k = 0; k < m.rows(); ++k) {
    unit.assign(m.rows(), Rational(0));
    unit[k] = 1;
    out = lcm(out, vector_annihilator(m, unit));
  }
  return out;
}

Polynomial minimal_polynomial(const AlgebraElement& x, const Limits& limits) {
  const int n = x.degree();
  limits.require_minpoly(n, "minimal_polynomial");
  const RationalMatrix r = right_multiplication_matrix(x, limits);
  std::vector<Rational> seed(r.rows());
  seed[0] = 1;  // the identity has lex rank 0
  Polynomial p = vector_annihilator(r, seed);
  if (evaluate(p, r) == RationalMatrix(r.rows(), r.cols())) return p;
  return matrix_minimal_polynomial(r);
}

Polynomial char_poly_oracle(const RationalMatrix& m, const Limits& limits) {
  if (!m.is_square()) throw std::invalid_argument("char_poly_oracle: matrix must be square");
  const std::size_t size = m.rows();
  if (size > static_cast<std::size_t>(limits.charpoly_dim_cap)) {
    throw CapExceeded("char_poly_oracle: dimension " + std::to_string(size) + " exceeds cap " +
                      std::to_string(limits.charpoly_dim_cap));
  }
  RationalMatrix h = m;
  // Similarity transforms down to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 < size; ++col) {
    const std::size_t target = col + 1;
    std::size_t pivot = target;
    while (pivot < size && is_zero(h(pivot, col))) ++pivot;
    if (pivot == size) continue;
    if (pivot != target) {
      for (std::size_t c = 0; c < size; ++c) std::swap(h(pivot, c), h(target, c));
      for (std::size_t r = 0; r < size; ++r) std::swap(h(r, pivot), h(r, target));
    }
    for (std::size_t row = target + 1; row < size; ++row) {
      if (is_zero(h(row, col))) continue;
      const Rational u = h(row, col) / h(target, col);
      for (std::size_t c = 0; c < size; ++c) {
        if (!is_zero(h(target, c))) h(row, c) -= u * h(target, c);
      }
      for (std::size_t r = 0; r < size; ++r) {
        if (!is_zero(h(r, row))) h(r, target) += u * h(r, row);
      }
    }
  }
  // p_{k+1} = (x - h_kk) p_k - sum_i h_{k-i,k} (h_{k,k-1} ... h_{k-i+1,k-i}) p_{k-i}
  std::vector<Polynomial> p{Polynomial::constant(1)};
  for (std::size_t k = 0; k < size; ++k) {
    Polynomial next = Polynomial::linear(h(k, k)) * p[k];
    Rational sub = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      sub *= h(k - i + 1, k - i);
      if (is_zero(sub)) break;
      if (!is_zero(h(k - i, k))) next = next - (sub * h(k - i, k)) * p[k - i];
    }
    p.push_back(std::move(next));
  }
  return p.back();
}

DiagonalizabilityCertificate diagonalizable_certificate(const WeightVector& weights) {
  const LacunarCatalog catalog(weights.n());
  return distinct_eigenvalues(weights).size() == catalog.size()
             ? DiagonalizabilityCertificate::certified_diagonalizable
             : DiagonalizabilityCertificate::inconclusive;
}

const char* to_string(DiagonalizabilityCertificate certificate) {
  return certificate == DiagonalizabilityCertificate::certified_diagonalizable
             ? "certified_diagonalizable"
             : "inconclusive";
}

}  // namespace osc
