#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "graphlap/elimination.hpp"
#include "graphlap/matrix.hpp"

namespace graphlap {

/// An affine subspace p + span(B) of Q^d held in canonical form:
///   - the rows of B are the reduced row echelon basis of the direction space;
///   - p is zero on every pivot column of B (the pivot coordinates are the
///     free parameters of the set, and p is the point where they all vanish).
/// Both are unique per set, so set equality is field-by-field equality.
class AffineSubspace {
public:
  static AffineSubspace empty(std::size_t ambient_dim);
  static AffineSubspace point(RationalVector p);
  static AffineSubspace whole(std::size_t ambient_dim);
  /// Canonicalizes an arbitrary spanning set.
  static AffineSubspace from_generators(RationalVector point, const std::vector<RationalVector>& directions);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  bool is_empty() const noexcept { return empty_; }
  /// std::nullopt for the empty set.
  std::optional<std::size_t> dimension() const;

  const RationalVector& particular() const noexcept { return particular_; }
  const RationalMatrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const RationalVector& x) const;
  bool contains_direction(const RationalVector& v) const;
  /// Subset test via membership of the other set's generators.
  bool contains(const AffineSubspace& other) const;

  friend bool operator==(const AffineSubspace&, const AffineSubspace&) = default;

private:
  /// Remainder of v after elimination against the basis (zero iff v is in the span).
  RationalVector reduce(RationalVector v) const;

  std::size_t ambient_ = 0;
  bool empty_ = false;
  RationalVector particular_;
  RationalMatrix basis_;
  std::vector<std::size_t> pivots_;
};

enum class SolveKind { Unique, Affine, Inconsistent };

struct SolveResult {
  SolveKind kind;
  AffineSubspace solutions;
};

/// Full solution set of A x = b, by fraction-free elimination of [A | b].
SolveResult solve_exact(const RationalMatrix& a, const RationalVector& b);

/// { M x : x in S }, re-canonicalized.
AffineSubspace image_under_map(const AffineSubspace& s, const RationalMatrix& m);

/// Throws DimensionMismatch when the ambient dimensions differ.
bool subspace_equal(const AffineSubspace& a, const AffineSubspace& b);

std::optional<std::size_t> subspace_dim(const AffineSubspace& s);

}  // namespace graphlap
