#include "osc/matrix.hpp"

#include <stdexcept>

namespace osc {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t size) {
  RationalMatrix out(size, size);
  for (std::size_t k = 0; k < size; ++k) out(k, k) = 1;
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

RationalMatrix RationalMatrix::permuted(std::span<const std::size_t> order) const {
  if (!is_square() || order.size() != rows_) {
    throw std::invalid_argument("permuted: order must index a square matrix");
  }
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(order[i], order[j]);
  }
  return out;
}

bool RationalMatrix::is_upper_triangular() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < r && c < cols_; ++c) {
      if (sgn((*this)(r, c)) != 0) return false;
    }
  }
  return true;
}

std::vector<Rational> RationalMatrix::diagonal() const {
  std::vector<Rational> out;
  for (std::size_t k = 0; k < rows_ && k < cols_; ++k) out.push_back((*this)(k, k));
  return out;
}

std::vector<Rational> RationalMatrix::row_sums() const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c);
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  RationalMatrix out(a.rows(), b.cols());
  Rational product;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& left = a(i, k);
      if (sgn(left) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& right = b(k, j);
        if (sgn(right) == 0) continue;
        mpq_mul(product.get_mpq_t(), left.get_mpq_t(), right.get_mpq_t());
        out(i, j) += product;
      }
    }
  }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix sum: shape mismatch");
  }
  RationalMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) += b(r, c);
  }
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  return a + Rational(-1) * b;
}

RationalMatrix operator*(const Rational& c, const RationalMatrix& a) {
  RationalMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t col = 0; col < a.cols(); ++col) out(r, col) *= c;
  }
  return out;
}

}  // namespace osc
