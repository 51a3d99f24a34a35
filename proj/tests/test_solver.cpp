#include <gtest/gtest.h>

#include "graphlap/error.hpp"
#include "graphlap/metric.hpp"
#include "graphlap/solver.hpp"
#include "oracles.hpp"

namespace graphlap {
namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

OraclePtr line() { return family_oracle({Family::Line, 0}); }
OraclePtr tree3() { return family_oracle({Family::RegularTree, 3}); }
OraclePtr cycle(int k) { return family_oracle({Family::Cycle, k}); }

std::vector<OraclePtr> infinite_families() {
  return {line(), family_oracle({Family::Grid, 2}), tree3(), family_oracle({Family::Ladder, 2}),
          family_oracle({Family::FreeGroup, 2})};
}

std::vector<LambdaField> lambdas() {
  return {LambdaField::zero(), LambdaField::constant(1), LambdaField::distance()};
}

std::vector<TargetFunction> targets() {
  return {TargetFunction::delta(), TargetFunction(TargetFunction::Geometric{q(1), q(1, 2)}),
          TargetFunction(TargetFunction::Random{3, q(1, 2)}), TargetFunction(TargetFunction::Degree{})};
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::ParseError;
}

TEST(SolveOnBall, DeltaOnTheLineMatchesCramer) {
  // u_1 assembled by hand in the canonical order (0, -1, 1).
  const auto h = q(-1, 2);
  const std::vector<RationalVector> u1 = {{q(1), h, h}, {h, q(1), q(0)}, {h, q(0), q(1)}};
  const auto expected = testing::cramer_solve(u1, {q(1), q(0), q(0)});
  ASSERT_EQ(expected, (RationalVector{q(2), q(1), q(1)}));

  const auto report = solve_on_ball(line(), TargetFunction::delta(), 1);
  EXPECT_EQ(report.solution.values(), expected);
  EXPECT_TRUE(report.residual_zero);
  EXPECT_EQ(report.construction, Construction::BallSolver);
  EXPECT_EQ(report.metric_bound, q(1, 4));
}

TEST(SolveOnBall, ZeroTargetGivesZero) {
  for (const auto& g : infinite_families()) {
    for (std::size_t n = 0; n <= 3; ++n) {
      EXPECT_TRUE(is_zero(solve_on_ball(g, TargetFunction::zero(), n).solution.values()));
    }
  }
}

TEST(SolveOnBall, UnitLambdaAtTheRoot) {
  const auto report = solve_on_ball(line(), TargetFunction::delta(), 0, LambdaField::constant(1));
  EXPECT_EQ(report.solution.values(), RationalVector{q(1, 2)});
}

TEST(SolveOnBall, SaturatedFiniteGraphIsSingular) {
  for (const auto& target : targets()) {
    EXPECT_EQ(code_of([&] { solve_on_ball(cycle(4), target, 2); }), ErrorCode::SingularSystem);
  }
  // Before saturation the maximum principle still applies.
  EXPECT_TRUE(solve_on_ball(cycle(8), TargetFunction::delta(), 2).residual_zero);
}

TEST(SolveOnBall, ExactResidualEverywhere) {
  for (const auto& g : infinite_families()) {
    for (const auto& lambda : lambdas()) {
      for (const auto& target : targets()) {
        for (std::size_t n = 0; n <= 4; ++n) {
          const auto report = solve_on_ball(g, target, n, lambda);
          ASSERT_TRUE(report.residual_zero) << g->name() << " n=" << n;
          // Independent re-check through the rectangular operator.
          const auto& ball = *report.solution.ball();
          const auto f = report.solution.extend_by_zero(n + 1);
          EXPECT_EQ(restricted_laplacian_matrix(ball, n, lambda) * f.values(), target.on_ball(ball, n));
        }
      }
    }
  }
}

TEST(SolveOnBall, TruncatedOperatorIsInjective) {
  testing::RationalSampler sample(31);
  for (const auto& g : infinite_families()) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto n = static_cast<std::size_t>(trial % 5);
      const auto ball = enumerate_ball(g, n);
      auto f = sample.vector(ball->size());
      if (is_zero(f)) f[0] = 1;
      EXPECT_FALSE(is_zero(truncated_operator_matrix(*ball, n, lambdas()[trial % 3]) * f));
    }
  }
}

TEST(Certificate, Examples) {
  const auto z = max_principle_certificate(line(), 2);
  EXPECT_TRUE(z.strict_inclusion);
  EXPECT_EQ(z.determinant, q(3, 16));  // cofactor expansion of the 5x5 u_2
  EXPECT_TRUE(z.passed);

  const auto c4 = max_principle_certificate(cycle(4), 2);
  EXPECT_FALSE(c4.strict_inclusion);
  EXPECT_EQ(c4.determinant, q(0));
  EXPECT_TRUE(c4.passed);

  const auto t = max_principle_certificate(tree3(), 1);
  EXPECT_TRUE(t.strict_inclusion);
  EXPECT_EQ(t.determinant, q(2, 3));  // 1 - 3 * (1/3)^2
  EXPECT_TRUE(t.passed);
}

TEST(Certificate, DeterminantMatchesCofactorOnSmallBalls) {
  for (const auto& g : infinite_families()) {
    for (std::size_t n = 0; n <= 1; ++n) {
      const auto m = truncated_operator_matrix(g, n, LambdaField::distance());
      if (m.rows() > 8) continue;
      EXPECT_EQ(max_principle_certificate(g, n, LambdaField::distance()).determinant,
                testing::cofactor_determinant(testing::to_rows(m)));
    }
  }
}

TEST(AffineSolutionSet, DimensionsOnTheLine) {
  for (std::size_t n = 0; n <= 4; ++n) {
    EXPECT_EQ(affine_solution_set(line(), TargetFunction::delta(), n).dimension(), 2u);
  }
}

TEST(AffineSolutionSet, GridRadiusOne) {
  const auto g = family_oracle({Family::Grid, 2});
  const auto ball = enumerate_ball(g, 1);
  const auto rank = testing::naive_rank(testing::to_rows(restricted_laplacian_matrix(*ball, 1)));
  EXPECT_EQ(rank, 5u);
  EXPECT_EQ(affine_solution_set(g, TargetFunction::delta(), 1).dimension(), 13u - 5u);
}

TEST(AffineSolutionSet, ZeroTargetGivesLinearSubspace) {
  for (const auto& g : infinite_families()) {
    const auto x = affine_solution_set(g, TargetFunction::zero(), 2);
    EXPECT_TRUE(is_zero(x.particular()));
    EXPECT_TRUE(x.contains(RationalVector(x.ambient_dim())));
  }
}

TEST(AffineSolutionSet, BallSolutionIsAWitness) {
  for (const auto& g : infinite_families()) {
    for (const auto& lambda : lambdas()) {
      for (std::size_t n = 0; n <= 3; ++n) {
        const auto target = TargetFunction(TargetFunction::Random{7, q(1, 2)});
        const auto f = solve_on_ball(g, target, n, lambda).solution.extend_by_zero(n + 1);
        EXPECT_TRUE(affine_solution_set(g, target, n, lambda).contains(f.values()));
      }
    }
  }
}

TEST(AffineSolutionSet, FiniteGraphWithNonzeroMeanTargetIsEmpty) {
  // On a saturated ball Delta^(n) is Delta itself; degree-weighted sums of
  // its image vanish, so the delta target has no preimage.
  const auto x = affine_solution_set(cycle(5), TargetFunction::delta(), 3);
  EXPECT_TRUE(x.is_empty());
}

TEST(RunChain, LineStabilizesAtTheFirstLevel) {
  const auto chain = run_chain(line(), TargetFunction::delta(), 1, 6, 3);
  ASSERT_EQ(chain.status, ChainStatus::Stabilized);
  EXPECT_EQ(chain.stabilized_at, 1u);
  EXPECT_EQ(chain.images.size(), 3u);

  // Beyond the window: every image up to m = 6 is X_1 itself.
  const auto x1 = affine_solution_set(line(), TargetFunction::delta(), 1);
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto ball = enumerate_ball(line(), m);
    const auto img = image_under_map(affine_solution_set(*ball, TargetFunction::delta(), m),
                                     restriction_matrix(*ball, 1, m));
    EXPECT_TRUE(subspace_equal(img, x1)) << "m=" << m;
  }
  const auto long_window = run_chain(line(), TargetFunction::delta(), 1, 6, 6);
  EXPECT_EQ(long_window.status, ChainStatus::Stabilized);
  EXPECT_EQ(long_window.images.size(), 6u);
}

TEST(RunChain, TreeFixture) {
  // Recorded from this build: the tree chain never shrinks, m0(1) = 1.
  const auto chain = run_chain(tree3(), TargetFunction::delta(), 1, 5, 3);
  ASSERT_EQ(chain.status, ChainStatus::Stabilized);
  EXPECT_EQ(chain.stabilized_at, 1u);
  for (const auto& img : chain.images) EXPECT_EQ(img.image.dimension(), 6u);
}

TEST(RunChain, DimensionsNeverIncrease) {
  for (const auto& g : infinite_families()) {
    for (const auto& target : targets()) {
      const auto chain = run_chain(g, target, 1, 4, 10);
      EXPECT_EQ(chain.status, ChainStatus::WindowExceeded);
      for (std::size_t i = 1; i < chain.images.size(); ++i) {
        EXPECT_LE(*chain.images[i].image.dimension(), *chain.images[i - 1].image.dimension());
        EXPECT_TRUE(chain.images[i - 1].image.contains(chain.images[i].image));
      }
    }
  }
}

TEST(RunChain, RejectsBadArguments) {
  EXPECT_EQ(code_of([] { run_chain(line(), TargetFunction::delta(), 3, 2); }), ErrorCode::BadRadii);
  EXPECT_EQ(code_of([] { run_chain(line(), TargetFunction::delta(), 1, 2, 0); }), ErrorCode::BadRadii);
}

TEST(UniversalElement, LineFixture) {
  const auto chain = run_chain(line(), TargetFunction::delta(), 1, 6, 3);
  const auto x = universal_element(chain);
  // Canonical point of X_1 on (0, -1, 1, -2, 2): pivots 0 and -1 set to zero.
  EXPECT_EQ(x.values(), (RationalVector{q(0), q(0), q(-2), q(0), q(-4)}));
  const auto image = apply_laplacian(x, {}, 1);
  EXPECT_EQ(image.values(), TargetFunction::delta().on_ball(*x.ball(), 1));
}

TEST(UniversalElement, ZeroTarget) {
  for (const auto& g : infinite_families()) {
    const auto x = universal_element(run_chain(g, TargetFunction::zero(), 1, 4, 2));
    EXPECT_TRUE(is_zero(x.values()));
  }
}

TEST(UniversalElement, RequiresStabilization) {
  const auto chain = run_chain(line(), TargetFunction::delta(), 1, 2, 3);
  ASSERT_EQ(chain.status, ChainStatus::WindowExceeded);
  EXPECT_EQ(code_of([&] { universal_element(chain); }), ErrorCode::NotStabilized);
}

void expect_coherent(const CoherentResult& result, const TargetFunction& target, const LambdaField& lambda,
                     std::size_t last) {
  ASSERT_EQ(result.family.size(), last + 1);
  for (std::size_t n = 0; n < last; ++n) {
    EXPECT_EQ(result.family[n + 1].restrict_to(n + 1).values(), result.family[n].values()) << "level " << n;
  }
  for (std::size_t n = 0; n <= last; ++n) {
    const auto& x = result.family[n];
    EXPECT_EQ(apply_laplacian(x, lambda, n).values(), target.on_ball(*x.ball(), n));
  }
  EXPECT_TRUE(result.report.residual_zero);
  EXPECT_EQ(result.report.construction, Construction::MittagLeffler);
}

TEST(CoherentSolution, LineDelta) {
  const auto result = coherent_solution(line(), TargetFunction::delta(), 3, 8, 3);
  expect_coherent(result, TargetFunction::delta(), {}, 3);
  // x_3 on B_4: the two-term recurrence f(k+1) = 2 f(k) - f(k-1) - 2 g(k).
  EXPECT_EQ(result.report.solution.values(),
            (RationalVector{q(0), q(0), q(-2), q(0), q(-4), q(0), q(-6), q(0), q(-8)}));
  const auto x1 = affine_solution_set(line(), TargetFunction::delta(), 1);
  EXPECT_TRUE(x1.contains(result.family[1].values()));
}

TEST(CoherentSolution, TreesAndPotentials) {
  for (const auto& lambda : lambdas()) {
    for (const auto& target : targets()) {
      expect_coherent(coherent_solution(tree3(), target, 2, 6, 3, lambda), target, lambda, 2);
    }
  }
}

TEST(CoherentSolution, NeedsStabilizedChains) {
  EXPECT_EQ(code_of([] { coherent_solution(line(), TargetFunction::delta(), 2, 3, 3); }), ErrorCode::NotStabilized);
}

TEST(Metric, AgreementGivesOnlyTheTail) {
  const auto ball = enumerate_ball(line(), 4);
  testing::RationalSampler sample(41);
  const BallFunction f(ball, 4, sample.vector(ball->size()));
  const auto b = prodiscrete_distance(f, f, 4);
  EXPECT_EQ(b.lower, q(0));
  EXPECT_EQ(b.upper, q(1, 32));
}

TEST(Metric, DisagreementAtTheRoot) {
  const auto ball = enumerate_ball(tree3(), 3);
  auto values = RationalVector(ball->size());
  const BallFunction f(ball, 3, values);
  values[0] = 1;
  const BallFunction h(ball, 3, values);
  const auto b = prodiscrete_distance(f, h, 3);
  EXPECT_EQ(b.lower, q(15, 16));  // 1/2 + 1/4 + 1/8 + 1/16
  EXPECT_EQ(b.upper, q(1));
}

TEST(Metric, FirstDisagreementAtDistanceTwo) {
  const auto ball = enumerate_ball(family_oracle({Family::Grid, 2}), 5);
  RationalVector values(ball->size());
  const BallFunction f(ball, 5, values);
  values[ball->prefix_size(1)] = q(1, 3);  // first vertex at distance 2
  const BallFunction h(ball, 5, values);
  const auto b = prodiscrete_distance(f, h, 5);
  EXPECT_EQ(b.lower, q(1, 8) + q(1, 16) + q(1, 32) + q(1, 64));
  EXPECT_EQ(b.upper, q(1, 4));
}

TEST(Metric, InsufficientDomain) {
  const auto ball = enumerate_ball(line(), 2);
  const auto f = BallFunction::zeros(ball, 1);
  EXPECT_EQ(code_of([&] { prodiscrete_distance(f, f, 2); }), ErrorCode::InsufficientDomain);
}

TEST(Metric, AxiomsOnPartialSums) {
  const auto ball = enumerate_ball(family_oracle({Family::Ladder, 2}), 4);
  testing::RationalSampler sample(42, 1);
  std::vector<BallFunction> fs;
  for (int i = 0; i < 12; ++i) fs.emplace_back(ball, 4, sample.vector(ball->size()));
  for (const auto& a : fs) {
    for (const auto& b : fs) {
      const auto ab = prodiscrete_distance(a, b, 4);
      EXPECT_EQ(ab.lower, prodiscrete_distance(b, a, 4).lower);
      for (const auto& c : fs) {
        EXPECT_LE(ab.lower, prodiscrete_distance(a, c, 4).lower + prodiscrete_distance(c, b, 4).lower);
      }
    }
  }
}

TEST(Metric, BallSolutionsApproachEachOther) {
  // f_n and f_{n+1} both solve the system on B_n but differ somewhere,
  // so only the agreement radius bounds their distance.
  const auto g = family_oracle({Family::Grid, 2});
  const auto f2 = solve_on_ball(g, TargetFunction::delta(), 2).solution.extend_by_zero(3);
  const auto f3 = solve_on_ball(g, TargetFunction::delta(), 3).solution.restrict_to(3);
  const BallFunction a(f3.ball(), 3, f2.values());
  const auto b = prodiscrete_distance(a, f3, 2);
  EXPECT_LE(b.lower, b.upper);
  EXPECT_GT(b.lower, q(0));
}

}  // namespace
}  // namespace graphlap
