#include "osc/algebra.hpp"

#include <stdexcept>
#include <string>

namespace osc {

AlgebraElement::AlgebraElement(int n) : n_(n) {
  if (n < 1 || n > Permutation::kMaxDegree) {
    throw std::invalid_argument("algebra degree must lie in [1, " +
                                std::to_string(Permutation::kMaxDegree) + "]");
  }
}

AlgebraElement::AlgebraElement(const Permutation& w, Rational coefficient) : n_(w.degree()) {
  if (n_ < 1) throw std::invalid_argument("algebra element from an empty permutation");
  if (!osc::is_zero(coefficient)) terms_.emplace(w, std::move(coefficient));
}

AlgebraElement AlgebraElement::scalar(int n, const Rational& c) {
  return AlgebraElement(Permutation::identity(n), c);
}

AlgebraElement AlgebraElement::from_terms(int n, Terms terms) {
  AlgebraElement out(n);
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.degree() != n) {
      throw std::invalid_argument("term of degree " + std::to_string(it->first.degree()) +
                                  " in an element of degree " + std::to_string(n));
    }
    if (osc::is_zero(it->second)) {
      it = terms.erase(it);
    } else {
      ++it;
    }
  }
  out.terms_ = std::move(terms);
  return out;
}

void AlgebraElement::check_degree(const Permutation& w) const {
  if (w.degree() != n_) {
    throw std::invalid_argument("permutation of degree " + std::to_string(w.degree()) +
                                " used with an element of degree " + std::to_string(n_));
  }
}

void AlgebraElement::check_degree(const AlgebraElement& other, const char* what) const {
  if (other.n_ != n_) {
    throw std::invalid_argument(std::string(what) + ": degree mismatch (" + std::to_string(n_) +
                                " vs " + std::to_string(other.n_) + ")");
  }
}

Rational AlgebraElement::coefficient(const Permutation& w) const {
  check_degree(w);
  const auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const Permutation& w, const Rational& c) {
  check_degree(w);
  if (osc::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (osc::is_zero(it->second)) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  check_degree(other, "add");
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  check_degree(other, "subtract");
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (osc::is_zero(c)) {
    terms_.clear();
  } else {
    for (auto& [w, value] : terms_) value *= c;
  }
  return *this;
}

AlgebraElement linear_combine(std::span<const std::pair<Rational, AlgebraElement>> pairs) {
  if (pairs.empty()) throw std::invalid_argument("linear_combine: empty sequence");
  AlgebraElement out(pairs.front().second.degree());
  for (const auto& [c, x] : pairs) {
    if (x.degree() != out.degree()) throw std::invalid_argument("linear_combine: degree mismatch");
    if (osc::is_zero(c)) continue;
    for (const auto& [w, value] : x.terms()) out.add_term(w, c * value);
  }
  return out;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.degree() != y.degree()) {
    throw std::invalid_argument("multiply: degree mismatch (" + std::to_string(x.degree()) +
                                " vs " + std::to_string(y.degree()) + ")");
  }
  AlgebraElement::Terms acc;
  Rational product;
  for (const auto& [u, a] : x.terms()) {
    for (const auto& [v, b] : y.terms()) {
      mpq_mul(product.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
      auto [it, inserted] = acc.try_emplace(compose(u, v), product);
      if (!inserted) mpq_add(it->second.get_mpq_t(), it->second.get_mpq_t(), product.get_mpq_t());
    }
  }
  return AlgebraElement::from_terms(x.degree(), std::move(acc));
}

AlgebraElement power(const AlgebraElement& x, unsigned exponent) {
  AlgebraElement result = AlgebraElement::one(x.degree());
  AlgebraElement base = x;
  while (exponent > 0) {
    if (exponent & 1U) result = multiply(result, base);
    exponent >>= 1U;
    if (exponent > 0) base = multiply(base, base);
  }
  return result;
}

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out = multiply(x, y);
  out -= multiply(y, x);
  return out;
}

AlgebraElement antipode(const AlgebraElement& x) {
  AlgebraElement::Terms terms;
  for (const auto& [w, c] : x.terms()) terms.emplace(w.inverse(), c);
  return AlgebraElement::from_terms(x.degree(), std::move(terms));
}

Rational bilinear_form(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.degree() != y.degree()) throw std::invalid_argument("bilinear_form: degree mismatch");
  Rational total = 0;
  // Merge walk over the two sorted term maps.
  auto a = x.terms().begin();
  auto b = y.terms().begin();
  while (a != x.terms().end() && b != y.terms().end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      total += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return total;
}

Rational coefficient(const AlgebraElement& x, const Permutation& w) { return x.coefficient(w); }

AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) { return multiply(x, y); }
AlgebraElement operator*(const Rational& c, AlgebraElement x) { return x *= c; }

std::vector<Rational> to_dense(const AlgebraElement& x) {
  const BigInt size = factorial(static_cast<unsigned>(x.degree()));
  if (size > 40320 * 9) throw std::invalid_argument("to_dense: n! too large");
  std::vector<Rational> out(size.get_ui());
  for (const auto& [w, c] : x.terms()) out[lex_rank(w)] = c;
  return out;
}

AlgebraElement from_dense(int n, std::span<const Rational> coordinates) {
  const std::vector<Permutation> perms = all_permutations(n);
  if (coordinates.size() != perms.size()) {
    throw std::invalid_argument("from_dense: expected n! coordinates");
  }
  AlgebraElement::Terms terms;
  for (std::size_t r = 0; r < perms.size(); ++r) {
    if (!osc::is_zero(coordinates[r])) terms.emplace_hint(terms.end(), perms[r], coordinates[r]);
  }
  return AlgebraElement::from_terms(n, std::move(terms));
}

}  // namespace osc
