#pragma once

#include <cstddef>
#include <vector>

#include "graphlap/matrix.hpp"

namespace graphlap {

/// Reduced row echelon form: `reduced` holds only the nonzero rows, each
/// with a 1 in its pivot column and zeros in every other pivot column.
struct EchelonForm {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Fraction-free Gauss-Jordan (Bareiss) elimination. Rows are scaled to
/// integers first; every intermediate entry is a minor of that integer
/// matrix, so all divisions are exact and growth stays polynomial.
EchelonForm reduced_echelon(const RationalMatrix& a);

std::size_t rank(const RationalMatrix& a);

/// Exact determinant; throws DimensionMismatch for non-square input.
Rational determinant(const RationalMatrix& a);

namespace detail {

/// Integer working state after fraction-free elimination of [A | extra].
/// Pivots are chosen among the first `pivot_cols` columns only.
struct FractionFreeState {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> entries;
  std::vector<std::size_t> pivots;
  Integer scale{1};      // common pivot value; reduced form = entries / scale
  bool odd_swaps = false;
  Integer row_scale{1};  // product of the per-row integerizing factors

  const Integer& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

FractionFreeState fraction_free_jordan(const RationalMatrix& a, std::size_t pivot_cols);

}  // namespace detail

}  // namespace graphlap
