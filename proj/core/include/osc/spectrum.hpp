#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "osc/algebra.hpp"
#include "osc/lacunar.hpp"
#include "osc/limits.hpp"
#include "osc/matrix.hpp"
#include "osc/polynomial.hpp"
#include "osc/shuffles.hpp"

namespace osc {

// g_I = lambda_1 m_{I,1} + ... + lambda_n m_{I,n}. I must be a lacunar subset
// of [n-1], where n is the length of the weight vector.
Rational eigenvalue_for_set(const WeightVector& weights, const IndexSubset& set);

// delta_i by the multinomial formula, for catalog index i (1-based).
BigInt delta(std::size_t i, const LacunarCatalog& catalog);
std::vector<BigInt> deltas(const LacunarCatalog& catalog);
// Number of w in S_n with Qind w = i. Enumerates S_n.
BigInt delta_by_counting(std::size_t i, const LacunarCatalog& catalog, const Limits& limits = {});
std::vector<BigInt> deltas_by_counting(const LacunarCatalog& catalog, const Limits& limits = {});

struct SpectrumRow {
  IndexSubset set;
  std::vector<int> m;
  Rational eigenvalue;
  BigInt multiplicity;
};

struct SpectrumReport {
  int n = 0;
  WeightVector weights;
  // Catalog order.
  std::vector<SpectrumRow> rows;
  // Distinct eigenvalues, descending, with summed multiplicities.
  std::vector<std::pair<Rational, BigInt>> aggregate;
};

SpectrumReport full_spectrum(const WeightVector& weights);

// Distinct g_I over all lacunar I, descending.
std::vector<Rational> distinct_eigenvalues(const WeightVector& weights);

struct AnnihilatorResult {
  bool annihilates = false;
  // prod over lacunar I of (t - g_I), evaluated in the group algebra.
  AlgebraElement residual;
};

AnnihilatorResult annihilator_check(const WeightVector& weights, const Limits& limits = {});

// Monic generator of {p : p(M) v = 0}.
Polynomial vector_annihilator(const RationalMatrix& m, const std::vector<Rational>& v);
// Minimal polynomial of a square matrix, as the lcm of the annihilators of
// the standard unit vectors.
Polynomial matrix_minimal_polynomial(const RationalMatrix& m);

// Minimal polynomial of R(x): y -> yx. Seeds the power sequence at the
// identity (R(x)^k 1 = x^k), then checks the result against the full
// matrix, and falls back to matrix_minimal_polynomial if that check fails.
Polynomial minimal_polynomial(const AlgebraElement& x, const Limits& limits = {});

// det(x I - M) via reduction to upper Hessenberg form.
Polynomial char_poly_oracle(const RationalMatrix& m, const Limits& limits = {});

enum class DiagonalizabilityCertificate { certified_diagonalizable, inconclusive };

// certified_diagonalizable iff the g_I are pairwise distinct.
DiagonalizabilityCertificate diagonalizable_certificate(const WeightVector& weights);
const char* to_string(DiagonalizabilityCertificate certificate);

}  // namespace osc
