#pragma once

#include <cstddef>
#include <vector>

#include "osc/algebra.hpp"
#include "osc/lacunar.hpp"
#include "osc/limits.hpp"
#include "osc/matrix.hpp"

namespace osc {

enum class BasisKind { standard, a, b };
enum class Ordering { lex, qindex, qindex_desc };

// a_w = sum of w*sigma over sigma in G(Des w). Equals w plus lex-smaller
// permutations.
AlgebraElement a_element(const Permutation& w);

// Smallest catalog index i (1-based) with Q_i' contained in Des w.
std::size_t q_index(const Permutation& w, const LacunarCatalog& catalog);
// q_index of every permutation, indexed by lex rank.
std::vector<std::size_t> q_indices(const LacunarCatalog& catalog, const Limits& limits = {});

// A basis of Q[S_n] whose members are labelled by permutations. Members are
// stored by lex rank of their label. The b family is the f-dual of the a
// family and keeps the a family's supports around for coordinate work.
class BasisFamily {
 public:
  static BasisFamily standard(int n, const Limits& limits = {});
  static BasisFamily descent_destroying(int n, const Limits& limits = {});

  int n() const { return n_; }
  BasisKind kind() const { return kind_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<Permutation>& labels() const { return labels_; }
  const AlgebraElement& element(std::size_t rank) const { return elements_[rank]; }
  const std::vector<AlgebraElement>& elements() const { return elements_; }

  // Coordinates of y in this basis, indexed by lex rank of the label.
  std::vector<Rational> coordinates(const AlgebraElement& y) const;
  // Same, for y given by its dense standard coordinates.
  std::vector<Rational> coordinates(std::vector<Rational> dense) const;

  friend BasisFamily dual_basis(const BasisFamily& family);

 private:
  BasisFamily(int n, BasisKind kind) : n_(n), kind_(kind) {}

  int n_;
  BasisKind kind_;
  std::vector<Permutation> labels_;
  std::vector<AlgebraElement> elements_;
  // Lex ranks of the terms of a_w, for the a and b kinds.
  std::vector<std::vector<std::size_t>> a_support_;
};

// b_w with f(a_p, b_q) = [p = q]. Requires the a family.
BasisFamily dual_basis(const BasisFamily& family);

// Lex ranks of the labels, listed in the requested order. Q-index ties are
// broken by ascending lex order.
std::vector<std::size_t> basis_order(int n, Ordering ordering, const Limits& limits = {});

// Matrix of y -> y*x in the given basis; rows and columns both follow order.
// Column j holds the coordinates of (member order[j]) * x.
RationalMatrix rmul_matrix(const AlgebraElement& x, const BasisFamily& family,
                           Ordering ordering = Ordering::lex, const Limits& limits = {});

// dim F_0, ..., dim F_{f_{n+1}} by counting permutations with Qind <= i.
std::vector<BigInt> filtration_dimensions(const LacunarCatalog& catalog, const Limits& limits = {});

const char* to_string(BasisKind kind);
const char* to_string(Ordering ordering);

}  // namespace osc
