#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "graphlap/graph.hpp"
#include "graphlap/matrix.hpp"

namespace graphlap {

/// A function on B_r (r <= ball radius + 1), indexed by canonical vertex id.
class BallFunction {
public:
  /// Throws DimensionMismatch unless values.size() == |B_radius|.
  BallFunction(BallPtr ball, std::size_t radius, RationalVector values);

  static BallFunction zeros(BallPtr ball, std::size_t radius);

  const BallPtr& ball() const noexcept { return ball_; }
  std::size_t radius() const noexcept { return radius_; }
  const RationalVector& values() const noexcept { return values_; }
  const Rational& operator[](VertexId v) const { return values_.at(v); }

  /// Prefix on B_r, r <= radius().
  BallFunction restrict_to(std::size_t r) const;
  /// Zero extension to B_r, r >= radius().
  BallFunction extend_by_zero(std::size_t r) const;

  friend bool operator==(const BallFunction& a, const BallFunction& b) {
    return a.radius_ == b.radius_ && a.values_ == b.values_;
  }

private:
  BallPtr ball_;
  std::size_t radius_;
  RationalVector values_;
};

/// Nonnegative potential lambda : V -> [0, inf) of the operator Delta + lambda Id.
class LambdaField {
public:
  struct Zero {};
  struct Constant {
    Rational value;
  };
  /// lambda(v) = scale * d(root, v)
  struct Distance {
    Rational scale{1};
  };
  /// Listed vertex ids; every other vertex gets 0.
  struct Sparse {
    std::map<VertexId, Rational> values;
  };
  using Form = std::variant<Zero, Constant, Distance, Sparse>;

  LambdaField() = default;
  /// Throws InvalidLambda on a negative value.
  explicit LambdaField(Form form);

  static LambdaField zero() { return {}; }
  static LambdaField constant(Rational c) { return LambdaField(Constant{std::move(c)}); }
  static LambdaField distance(Rational scale = 1) { return LambdaField(Distance{std::move(scale)}); }

  Rational at(const Ball& ball, VertexId v) const;
  bool is_zero() const noexcept { return std::holds_alternative<Zero>(form_); }
  const Form& form() const noexcept { return form_; }

private:
  Form form_ = Zero{};
};

/// Right-hand side g, evaluated lazily so that unbounded targets need no
/// materialized vertex set.
class TargetFunction {
public:
  struct Zero {};
  struct Delta {};  // 1 at the root
  struct Constant {
    Rational value;
  };
  /// g(v) = coeffs[d(v)], 0 past the end of the list.
  struct Radial {
    RationalVector coeffs;
  };
  /// g(v) = scale * ratio^d(v)
  struct Geometric {
    Rational scale{1};
    Rational ratio;
  };
  /// g(v) = deg(v)
  struct Degree {};
  struct Sparse {
    std::map<VertexId, Rational> values;
  };
  /// Seeded pseudo-random sparse rational: each vertex is nonzero with
  /// probability about density, value num/den with |num| <= 9, 1 <= den <= 9.
  struct Random {
    std::uint64_t seed = 0;
    Rational density = make_rational(1, 2);
  };
  using Form = std::variant<Zero, Delta, Constant, Radial, Geometric, Degree, Sparse, Random>;

  TargetFunction() = default;
  explicit TargetFunction(Form form) : form_(std::move(form)) {}

  static TargetFunction zero() { return {}; }
  static TargetFunction delta() { return TargetFunction(Delta{}); }

  Rational at(const Ball& ball, VertexId v) const;
  /// g restricted to B_r.
  RationalVector on_ball(const Ball& ball, std::size_t r) const;
  const Form& form() const noexcept { return form_; }

private:
  Form form_ = Zero{};
};

/// v -> (1 + lambda(v)) f(v) - (1/deg v) sum_{w ~ v} f(w), for v in B_n.
/// Defaults to n = f.radius() - 1. Throws InsufficientDomain if f is not
/// defined on B_{n+1} or the ball lacks adjacency for B_n.
BallFunction apply_laplacian(const BallFunction& f, const LambdaField& lambda = {},
                             std::optional<std::size_t> n = std::nullopt);

/// The rectangular restriction Q^{B_{n+1}} -> Q^{B_n}; requires n <= ball radius.
RationalMatrix restricted_laplacian_matrix(const Ball& ball, std::size_t n, const LambdaField& lambda = {});

/// Square matrix of the truncation F_n -> F_n: diagonal 1 + lambda(v),
/// -1/deg(v) for neighbors inside B_n, nothing for neighbors outside.
RationalMatrix truncated_operator_matrix(const Ball& ball, std::size_t n, const LambdaField& lambda = {});
RationalMatrix truncated_operator_matrix(const OraclePtr& oracle, std::size_t n, const LambdaField& lambda = {});

/// 0/1 projection Q^{B_{m+1}} -> Q^{B_{n+1}} onto the prefix coordinates.
/// Throws BadRadii if n > m.
RationalMatrix restriction_matrix(const Ball& ball, std::size_t n, std::size_t m);

}  // namespace graphlap
