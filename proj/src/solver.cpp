#include "graphlap/solver.hpp"

#include <string>

#include "graphlap/error.hpp"

namespace graphlap {

namespace {

std::string level_str(std::size_t n) { return std::to_string(n); }

long signed_dim(const AffineSubspace& s) {
  const auto d = s.dimension();
  return d ? static_cast<long>(*d) : -1L;
}

}  // namespace

SolveReport solve_on_ball(const OraclePtr& oracle, const TargetFunction& target, std::size_t n,
                          const LambdaField& lambda) {
  auto ball = enumerate_ball(oracle, n);
  const auto matrix = truncated_operator_matrix(*ball, n, lambda);
  const auto rhs = target.on_ball(*ball, n);
  auto result = solve_exact(matrix, rhs);
  if (result.kind != SolveKind::Unique) {
    throw Error(ErrorCode::SingularSystem,
                "truncated operator on B_" + level_str(n) + " (" + std::to_string(ball->size()) + " vertices) is singular" +
                    (ball->boundary_saturated() ? "; the ball exhausts a finite graph"
                                                : "; B_n is a proper subset of B_{n+1}, so the oracle is suspect"));
  }
  BallFunction f(ball, n, result.solutions.particular());
  const auto image = apply_laplacian(f.extend_by_zero(n + 1), lambda, n);
  const bool residual_zero = image.values() == rhs;
  return {n, std::move(f), residual_zero, Construction::BallSolver, pow2_inverse(static_cast<unsigned>(n + 1))};
}

Certificate max_principle_certificate(const OraclePtr& oracle, std::size_t n, const LambdaField& lambda) {
  const auto ball = enumerate_ball(oracle, n);
  Certificate cert;
  cert.radius = n;
  cert.ball_size = ball->size();
  cert.strict_inclusion = !ball->boundary_saturated();
  cert.determinant = determinant(truncated_operator_matrix(*ball, n, lambda));
  cert.passed = !cert.strict_inclusion || sgn(cert.determinant) != 0;
  return cert;
}

AffineSubspace affine_solution_set(const Ball& ball, const TargetFunction& target, std::size_t n,
                                   const LambdaField& lambda) {
  return solve_exact(restricted_laplacian_matrix(ball, n, lambda), target.on_ball(ball, n)).solutions;
}

AffineSubspace affine_solution_set(const OraclePtr& oracle, const TargetFunction& target, std::size_t n,
                                   const LambdaField& lambda) {
  return affine_solution_set(*enumerate_ball(oracle, n), target, n, lambda);
}

const AffineSubspace& ChainState::image_at(std::size_t m) const {
  if (m < level || m - level >= images.size()) {
    throw Error(ErrorCode::BadRadii, "chain at level " + level_str(level) + " has no image for m = " + level_str(m));
  }
  return images[m - level].image;
}

ChainState run_chain(const OraclePtr& oracle, const TargetFunction& target, std::size_t n, std::size_t max_m,
                     std::size_t window, const LambdaField& lambda) {
  if (n > max_m) throw Error(ErrorCode::BadRadii, "chain level " + level_str(n) + " exceeds max_m " + level_str(max_m));
  if (window == 0) throw Error(ErrorCode::BadRadii, "stabilization window must be at least 1");

  ChainState chain;
  chain.level = n;
  chain.target = target;
  chain.lambda = lambda;
  chain.ball = enumerate_ball(oracle, n);
  chain.max_m = max_m;
  chain.window = window;

  std::size_t run = 0;
  for (std::size_t m = n; m <= max_m; ++m) {
    const auto ball_m = enumerate_ball(oracle, m);
    const auto solutions = affine_solution_set(*ball_m, target, m, lambda);
    auto image = image_under_map(solutions, restriction_matrix(*ball_m, n, m));

    if (chain.images.empty()) {
      run = 1;
    } else {
      const auto& prev = chain.images.back().image;
      if (!prev.contains(image)) {
        throw Error(ErrorCode::ChainViolation, "image at m = " + level_str(m) + " is not inside the image at m = " +
                                                   level_str(m - 1) + " (level " + level_str(n) + ")");
      }
      const long d_prev = signed_dim(prev);
      const long d_cur = signed_dim(image);
      if (d_cur > d_prev) {
        throw Error(ErrorCode::ChainViolation, "dimension grew from " + std::to_string(d_prev) + " to " +
                                                   std::to_string(d_cur) + " at m = " + level_str(m));
      }
      const bool equal = subspace_equal(prev, image);
      if (equal != (d_cur == d_prev)) {
        throw Error(ErrorCode::ChainViolation,
                    "nested images at m = " + level_str(m) + " disagree: equal dimension but different sets");
      }
      run = equal ? run + 1 : 1;
    }
    chain.images.push_back({m, std::move(image)});
    if (run >= window) {
      chain.status = ChainStatus::Stabilized;
      chain.stabilized_at = m + 1 - window;
      break;
    }
  }
  return chain;
}

BallFunction universal_element(const ChainState& chain) {
  if (chain.status != ChainStatus::Stabilized || !chain.stabilized_at) {
    throw Error(ErrorCode::NotStabilized, "chain at level " + level_str(chain.level) + " did not stabilize by m = " +
                                              level_str(chain.max_m) + " with window " + std::to_string(chain.window));
  }
  const auto& image = chain.image_at(*chain.stabilized_at);
  if (image.is_empty()) {
    throw Error(ErrorCode::LiftFailed, "universal set at level " + level_str(chain.level) + " is empty");
  }
  return BallFunction(chain.ball, chain.level + 1, image.particular());
}

CoherentResult coherent_solution(const OraclePtr& oracle, const TargetFunction& target, std::size_t last_level,
                                 std::size_t max_m, std::size_t window, const LambdaField& lambda) {
  std::vector<ChainState> chains;
  for (std::size_t n = 0; n <= last_level; ++n) {
    chains.push_back(run_chain(oracle, target, n, max_m, window, lambda));
    if (chains.back().status != ChainStatus::Stabilized) {
      throw Error(ErrorCode::NotStabilized, "chain at level " + level_str(n) + " did not stabilize by m = " +
                                                level_str(max_m));
    }
  }

  std::vector<BallFunction> family{universal_element(chains[0])};
  for (std::size_t n = 0; n < last_level; ++n) {
    const auto& next = chains[n + 1];
    const std::size_t p = *next.stabilized_at;
    const auto ball_p = enumerate_ball(oracle, p);
    const auto full = restricted_laplacian_matrix(*ball_p, p, lambda);
    const auto& pinned = family.back().values();
    const std::size_t k = pinned.size();

    // Move the pinned B_{n+1} columns to the right-hand side.
    RationalVector rhs = target.on_ball(*ball_p, p);
    RationalMatrix free_part(full.rows(), full.cols() - k);
    for (std::size_t i = 0; i < full.rows(); ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (sgn(full(i, j)) != 0 && sgn(pinned[j]) != 0) rhs[i] -= full(i, j) * pinned[j];
      }
      for (std::size_t j = k; j < full.cols(); ++j) free_part(i, j - k) = full(i, j);
    }
    const auto lifted = solve_exact(free_part, rhs);
    if (lifted.kind == SolveKind::Inconsistent) {
      throw Error(ErrorCode::LiftFailed, "no element of X_" + level_str(p) + " restricts to x_" + level_str(n));
    }
    RationalVector x = pinned;
    const auto target_size = next.ball->prefix_size(n + 2);
    const auto& tail = lifted.solutions.particular();
    x.insert(x.end(), tail.begin(), tail.begin() + static_cast<std::ptrdiff_t>(target_size - k));
    if (!next.image_at(p).contains(x)) {
      throw Error(ErrorCode::LiftFailed, "lift of x_" + level_str(n) + " left the universal set X_" + level_str(n + 1) + "'");
    }
    family.emplace_back(next.ball, n + 2, std::move(x));
  }

  const auto& top = family.back();
  const auto image = apply_laplacian(top, lambda, last_level);
  const bool residual_zero = image.values() == target.on_ball(*top.ball(), last_level);
  SolveReport report{last_level, top, residual_zero, Construction::MittagLeffler,
                     pow2_inverse(static_cast<unsigned>(last_level + 1))};
  return {std::move(family), std::move(chains), std::move(report)};
}

}  // namespace graphlap
