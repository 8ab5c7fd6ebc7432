#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "osc/rational.hpp"

namespace osc {

// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t size);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  RationalMatrix transpose() const;
  // Rows and columns both reordered: out(i, j) = this(order[i], order[j]).
  RationalMatrix permuted(std::span<const std::size_t> order) const;

  bool is_upper_triangular() const;
  std::vector<Rational> diagonal() const;
  std::vector<Rational> row_sums() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Skips zero entries of the left factor, so sparse operands stay cheap.
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& c, const RationalMatrix& a);

}  // namespace osc
