#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "graphlap/affine.hpp"
#include "graphlap/laplacian.hpp"

namespace graphlap {

enum class Construction { BallSolver, MittagLeffler };

struct SolveReport {
  std::size_t radius = 0;
  BallFunction solution;
  /// Exact check that the operator applied to `solution` equals g on B_radius.
  bool residual_zero = false;
  Construction construction = Construction::BallSolver;
  /// Any global solution agreeing with `solution` on B_radius lies within
  /// this prodiscrete distance of it.
  Rational metric_bound;
};

/// The unique f supported in B_n with (Delta + lambda) f = g on B_n.
/// Throws SingularSystem when the truncated operator is singular, which for
/// a connected graph happens exactly when B_{n+1} = B_n (finite graph).
SolveReport solve_on_ball(const OraclePtr& oracle, const TargetFunction& target, std::size_t n,
                          const LambdaField& lambda = {});

struct Certificate {
  std::size_t radius = 0;
  std::size_t ball_size = 0;
  /// B_{n+1} strictly contains B_n: the geometric hypothesis of the argument.
  bool strict_inclusion = false;
  Rational determinant;
  /// strict_inclusion implies determinant != 0.
  bool passed = false;
};

Certificate max_principle_certificate(const OraclePtr& oracle, std::size_t n, const LambdaField& lambda = {});

/// X_n: every x on B_{n+1} with (Delta + lambda) x = g on B_n.
AffineSubspace affine_solution_set(const OraclePtr& oracle, const TargetFunction& target, std::size_t n,
                                   const LambdaField& lambda = {});
AffineSubspace affine_solution_set(const Ball& ball, const TargetFunction& target, std::size_t n,
                                   const LambdaField& lambda = {});

enum class ChainStatus { Stabilized, WindowExceeded };

struct ChainImage {
  std::size_t m = 0;
  /// u_nm(X_m) inside Q^{B_{n+1}}.
  AffineSubspace image;
};

/// Immutable record of the nested image sequence u_nm(X_m), m = n, n+1, ...
struct ChainState {
  std::size_t level = 0;
  TargetFunction target;
  LambdaField lambda;
  BallPtr ball;  // radius `level`; images live on its B_{level+1}
  std::vector<ChainImage> images;
  ChainStatus status = ChainStatus::WindowExceeded;
  std::size_t max_m = 0;
  std::size_t window = 0;
  /// m0 when Stabilized.
  std::optional<std::size_t> stabilized_at;

  const AffineSubspace& image_at(std::size_t m) const;
};

/// Computes u_nm(X_m) for m = n..max_m and stops as soon as `window`
/// consecutive images are equal; their first index is m0. Nestedness,
/// monotone dimension and "equal dimension iff equal set" are asserted at
/// every step (ChainViolation otherwise). Throws BadRadii if n > max_m or
/// window == 0.
ChainState run_chain(const OraclePtr& oracle, const TargetFunction& target, std::size_t n, std::size_t max_m,
                     std::size_t window = 3, const LambdaField& lambda = {});

/// Canonical point of the stabilized image, an element of the universal
/// set X_n'. Throws NotStabilized.
BallFunction universal_element(const ChainState& chain);

struct CoherentResult {
  /// x_n on B_{n+1}, n = 0..N, with x_{n+1} restricting to x_n.
  std::vector<BallFunction> family;
  std::vector<ChainState> chains;
  SolveReport report;
};

/// Builds x_0 in X_0' and lifts x_n to x_{n+1} in X_{n+1}' by solving the
/// level-m0(n+1) system with the B_{n+1} coordinates pinned to x_n.
/// Throws NotStabilized or LiftFailed.
CoherentResult coherent_solution(const OraclePtr& oracle, const TargetFunction& target, std::size_t last_level,
                                 std::size_t max_m, std::size_t window = 3, const LambdaField& lambda = {});

}  // namespace graphlap
