#include "graphlap/affine.hpp"

#include <string>
#include <utility>

#include "graphlap/error.hpp"

namespace graphlap {

AffineSubspace AffineSubspace::empty(std::size_t ambient_dim) {
  AffineSubspace s;
  s.ambient_ = ambient_dim;
  s.empty_ = true;
  s.basis_ = RationalMatrix(0, ambient_dim);
  return s;
}

AffineSubspace AffineSubspace::point(RationalVector p) {
  AffineSubspace s;
  s.ambient_ = p.size();
  s.basis_ = RationalMatrix(0, p.size());
  s.particular_ = std::move(p);
  return s;
}

AffineSubspace AffineSubspace::whole(std::size_t ambient_dim) {
  std::vector<RationalVector> dirs(ambient_dim, RationalVector(ambient_dim));
  for (std::size_t i = 0; i < ambient_dim; ++i) dirs[i][i] = 1;
  return from_generators(RationalVector(ambient_dim), dirs);
}

AffineSubspace AffineSubspace::from_generators(RationalVector point, const std::vector<RationalVector>& directions) {
  AffineSubspace s;
  s.ambient_ = point.size();
  auto echelon = reduced_echelon(RationalMatrix::from_rows(directions, s.ambient_));
  s.basis_ = std::move(echelon.reduced);
  s.pivots_ = std::move(echelon.pivots);
  s.particular_ = s.reduce(std::move(point));
  return s;
}

std::optional<std::size_t> AffineSubspace::dimension() const {
  if (empty_) return std::nullopt;
  return basis_.rows();
}

RationalVector AffineSubspace::reduce(RationalVector v) const {
  if (v.size() != ambient_) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector of length " + std::to_string(v.size()) + " in ambient dimension " + std::to_string(ambient_));
  }
  Rational coeff;
  for (std::size_t t = 0; t < pivots_.size(); ++t) {
    coeff = v[pivots_[t]];
    if (sgn(coeff) == 0) continue;
    auto row = basis_.row(t);
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (sgn(row[j]) != 0) v[j] -= coeff * row[j];
    }
  }
  return v;
}

bool AffineSubspace::contains_direction(const RationalVector& v) const {
  return !empty_ && is_zero(reduce(v));
}

bool AffineSubspace::contains(const RationalVector& x) const {
  if (empty_) {
    if (x.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "membership test");
    return false;
  }
  RationalVector diff = x;
  for (std::size_t j = 0; j < diff.size() && j < ambient_; ++j) diff[j] -= particular_[j];
  return is_zero(reduce(std::move(diff)));
}

bool AffineSubspace::contains(const AffineSubspace& other) const {
  if (other.ambient_ != ambient_) {
    throw Error(ErrorCode::DimensionMismatch, "subset test across ambient dimensions " + std::to_string(ambient_) +
                                                  " and " + std::to_string(other.ambient_));
  }
  if (other.empty_) return true;
  if (empty_ || !contains(other.particular_)) return false;
  for (std::size_t t = 0; t < other.basis_.rows(); ++t) {
    if (!contains_direction(other.basis_.row_vector(t))) return false;
  }
  return true;
}

SolveResult solve_exact(const RationalMatrix& a, const RationalVector& b) {
  if (a.rows() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "system has " + std::to_string(a.rows()) + " rows but rhs has " +
                                                  std::to_string(b.size()) + " entries");
  }
  const std::size_t n = a.cols();
  RationalMatrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto st = detail::fraction_free_jordan(aug, n);
  const std::size_t r = st.pivots.size();
  for (std::size_t i = r; i < a.rows(); ++i) {
    if (sgn(st.at(i, n)) != 0) return {SolveKind::Inconsistent, AffineSubspace::empty(n)};
  }

  auto ratio = [&](const Integer& num) {
    Rational q(num, st.scale);
    q.canonicalize();
    return q;
  };
  std::vector<bool> is_pivot(n, false);
  for (auto k : st.pivots) is_pivot[k] = true;

  RationalVector particular(n);
  for (std::size_t t = 0; t < r; ++t) particular[st.pivots[t]] = ratio(st.at(t, n));

  std::vector<RationalVector> kernel;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(n);
    v[f] = 1;
    for (std::size_t t = 0; t < r; ++t) {
      if (sgn(st.at(t, f)) != 0) v[st.pivots[t]] = -ratio(st.at(t, f));
    }
    kernel.push_back(std::move(v));
  }
  const SolveKind kind = kernel.empty() ? SolveKind::Unique : SolveKind::Affine;
  return {kind, AffineSubspace::from_generators(std::move(particular), kernel)};
}

AffineSubspace image_under_map(const AffineSubspace& s, const RationalMatrix& m) {
  if (m.cols() != s.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "map with " + std::to_string(m.cols()) +
                                                  " columns applied to subspace of ambient dimension " +
                                                  std::to_string(s.ambient_dim()));
  }
  if (s.is_empty()) return AffineSubspace::empty(m.rows());
  std::vector<RationalVector> images;
  images.reserve(s.basis().rows());
  for (std::size_t t = 0; t < s.basis().rows(); ++t) images.push_back(m * s.basis().row_vector(t));
  return AffineSubspace::from_generators(m * s.particular(), images);
}

bool subspace_equal(const AffineSubspace& a, const AffineSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "comparing subspaces of ambient dimensions " +
                                                  std::to_string(a.ambient_dim()) + " and " +
                                                  std::to_string(b.ambient_dim()));
  }
  return a == b;
}

std::optional<std::size_t> subspace_dim(const AffineSubspace& s) { return s.dimension(); }

}  // namespace graphlap
