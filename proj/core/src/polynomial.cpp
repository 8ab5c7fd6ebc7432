#include "osc/polynomial.hpp"

#include <stdexcept>

namespace osc {

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && osc::is_zero(c_.back())) c_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }
Polynomial Polynomial::x() { return Polynomial({0, 1}); }
Polynomial Polynomial::linear(const Rational& root) { return Polynomial({-root, 1}); }

Polynomial Polynomial::from_roots(const std::vector<std::pair<Rational, unsigned>>& roots) {
  Polynomial out = constant(1);
  for (const auto& [root, k] : roots) {
    for (unsigned j = 0; j < k; ++j) out = out * linear(root);
  }
  return out;
}

const Rational& Polynomial::leading() const {
  if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return c_.back();
}

Rational Polynomial::coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

Polynomial Polynomial::monic() const {
  if (c_.empty()) return *this;
  return Rational(1) / leading() * *this;
}

Rational Polynomial::operator()(const Rational& value) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * value + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Rational(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<Rational> c(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) c[i + j] += x[i] * y[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  std::vector<Rational> out = a.coefficients();
  for (Rational& v : out) v *= c;
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem = a.coefficients();
  const auto& d = b.coefficients();
  const std::size_t shift_max = rem.size() - d.size();
  std::vector<Rational> quot(shift_max + 1);
  for (std::size_t s = shift_max + 1; s-- > 0;) {
    const Rational q = rem[s + d.size() - 1] / d.back();
    quot[s] = q;
    if (is_zero(q)) continue;
    for (std::size_t k = 0; k < d.size(); ++k) rem[s + k] -= q * d[k];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

bool divides(const Polynomial& d, const Polynomial& a) { return divmod(a, d).second.is_zero(); }

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return divmod(a * b, gcd(a, b)).first.monic();
}

unsigned root_multiplicity(const Polynomial& p, const Rational& root) {
  if (p.is_zero()) throw std::domain_error("root_multiplicity of the zero polynomial");
  unsigned k = 0;
  Polynomial rest = p;
  const Polynomial factor = Polynomial::linear(root);
  for (;;) {
    auto [q, r] = divmod(rest, factor);
    if (!r.is_zero()) return k;
    rest = std::move(q);
    ++k;
  }
}

RationalMatrix evaluate(const Polynomial& p, const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("evaluate: matrix must be square");
  RationalMatrix acc(m.rows(), m.cols());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * m;
    for (std::size_t k = 0; k < m.rows(); ++k) acc(k, k) += *it;
  }
  return acc;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (is_zero(c[k])) continue;
    Rational magnitude = abs(c[k]);
    if (out.empty()) {
      if (sgn(c[k]) < 0) out += "-";
    } else {
      out += sgn(c[k]) < 0 ? " - " : " + ";
    }
    if (k == 0 || magnitude != 1) out += display_string(magnitude);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::string factored_string(const Polynomial& p, const std::vector<Rational>& candidates) {
  if (p.is_zero()) return "0";
  std::string out;
  Polynomial rest = p;
  for (const Rational& root : candidates) {
    const unsigned k = root_multiplicity(rest, root);
    if (k == 0) continue;
    for (unsigned j = 0; j < k; ++j) rest = divmod(rest, Polynomial::linear(root)).first;
    std::string factor;
    if (is_zero(root)) {
      factor = "x";
    } else {
      factor = "(x" + std::string(sgn(root) > 0 ? "-" : "+") + display_string(abs(root)) + ")";
    }
    out += factor;
    if (k > 1) out += "^" + std::to_string(k);
  }
  if (rest.degree() > 0) {
    out += "(" + to_string(rest.monic()) + ")";
    rest = Polynomial::constant(rest.leading());
  }
  if (rest.coefficients().front() != 1) out = display_string(rest.coefficients().front()) + out;
  return out.empty() ? "1" : out;
}

}  // namespace osc
