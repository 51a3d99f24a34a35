#include "graphlap/elimination.hpp"

#include <string>
#include <utility>

#include "graphlap/error.hpp"

namespace graphlap {
namespace detail {

FractionFreeState fraction_free_jordan(const RationalMatrix& a, std::size_t pivot_cols) {
  FractionFreeState st;
  st.rows = a.rows();
  st.cols = a.cols();
  st.entries.resize(st.rows * st.cols);

  Integer lcm;
  for (std::size_t i = 0; i < st.rows; ++i) {
    lcm = 1;
    for (std::size_t j = 0; j < st.cols; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < st.cols; ++j) {
      const Rational& x = a(i, j);
      if (sgn(x) == 0) continue;
      Integer& e = st.entries[i * st.cols + j];
      mpz_divexact(e.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
      e *= x.get_num();
    }
    st.row_scale *= lcm;
  }

  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return st.entries[i * st.cols + j]; };
  Integer prev(1);
  std::size_t r = 0;
  for (std::size_t k = 0; k < pivot_cols && r < st.rows; ++k) {
    std::size_t p_row = r;
    while (p_row < st.rows && sgn(at(p_row, k)) == 0) ++p_row;
    if (p_row == st.rows) continue;
    if (p_row != r) {
      for (std::size_t j = 0; j < st.cols; ++j) std::swap(at(p_row, j), at(r, j));
      st.odd_swaps = !st.odd_swaps;
    }
    const Integer pivot = at(r, k);
    const bool unit_prev = prev == 1;
    Integer factor;
    for (std::size_t i = 0; i < st.rows; ++i) {
      if (i == r) continue;
      factor = at(i, k);
      const bool has_factor = sgn(factor) != 0;
      for (std::size_t j = 0; j < st.cols; ++j) {
        Integer& e = at(i, j);
        const Integer& pr = at(r, j);
        const bool pr_zero = sgn(pr) == 0;
        if (sgn(e) == 0 && (!has_factor || pr_zero)) continue;
        mpz_mul(e.get_mpz_t(), e.get_mpz_t(), pivot.get_mpz_t());
        if (has_factor && !pr_zero) mpz_submul(e.get_mpz_t(), factor.get_mpz_t(), pr.get_mpz_t());
        if (!unit_prev) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = pivot;
    st.pivots.push_back(k);
    ++r;
  }
  st.scale = prev;
  return st;
}

}  // namespace detail

EchelonForm reduced_echelon(const RationalMatrix& a) {
  auto st = detail::fraction_free_jordan(a, a.cols());
  EchelonForm out;
  out.pivots = st.pivots;
  out.reduced = RationalMatrix(st.pivots.size(), a.cols());
  for (std::size_t i = 0; i < st.pivots.size(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(st.at(i, j)) == 0) continue;
      Rational v(st.at(i, j), st.scale);
      v.canonicalize();
      out.reduced(i, j) = std::move(v);
    }
  }
  return out;
}

std::size_t rank(const RationalMatrix& a) { return detail::fraction_free_jordan(a, a.cols()).pivots.size(); }

Rational determinant(const RationalMatrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "determinant of non-square " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " matrix");
  }
  if (a.rows() == 0) return Rational(1);
  auto st = detail::fraction_free_jordan(a, a.cols());
  if (st.pivots.size() < a.rows()) return Rational(0);
  Rational det(st.scale, st.row_scale);
  det.canonicalize();
  return st.odd_swaps ? Rational(-det) : det;
}

}  // namespace graphlap
