#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "graphlap/rational.hpp"

namespace graphlap {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  /// All rows must have length `cols`; `cols` is needed to describe a 0-row matrix.
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  RationalVector row_vector(std::size_t i) const;

  RationalMatrix transpose() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Throws Error(DimensionMismatch).
RationalVector operator*(const RationalMatrix& a, const RationalVector& x);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace graphlap
