#include <gtest/gtest.h>

#include "graphlap/error.hpp"
#include "graphlap/laplacian.hpp"
#include "oracles.hpp"

namespace graphlap {
namespace {

std::vector<OraclePtr> families() {
  return {family_oracle({Family::Line, 0}), family_oracle({Family::Grid, 2}),
          family_oracle({Family::RegularTree, 3}), family_oracle({Family::Ladder, 2}),
          family_oracle({Family::FreeGroup, 2}), family_oracle({Family::Cycle, 5})};
}

std::vector<LambdaField> lambdas() {
  return {LambdaField::zero(), LambdaField::constant(1), LambdaField::distance()};
}

Rational q(long n, unsigned long d = 1) { return make_rational(n, static_cast<std::int64_t>(d)); }

TEST(ApplyLaplacian, ConstantsAreInTheKernel) {
  for (const auto& g : families()) {
    for (std::size_t n = 0; n <= 5; ++n) {
      const auto ball = enumerate_ball(g, n);
      const BallFunction c(ball, n + 1, RationalVector(ball->outer_size(), q(7, 3)));
      const auto out = apply_laplacian(c);
      EXPECT_EQ(out.radius(), n);
      EXPECT_TRUE(is_zero(out.values())) << g->name() << " n=" << n;
    }
  }
}

TEST(ApplyLaplacian, HandEvaluationOnTheLine) {
  // Canonical order on B_1 is (0, -1, 1).
  const auto ball = enumerate_ball(family_oracle({Family::Line, 0}), 1);
  const BallFunction f(ball, 1, {q(2), q(1), q(1)});
  const auto out = apply_laplacian(f);
  ASSERT_EQ(out.values().size(), 1u);
  EXPECT_EQ(out[0], q(1));  // 2 - (1 + 1)/2
}

TEST(ApplyLaplacian, ConstantWithUnitLambdaIsIdentity) {
  for (const auto& g : families()) {
    const auto ball = enumerate_ball(g, 3);
    const BallFunction c(ball, 4, RationalVector(ball->outer_size(), q(-5, 2)));
    const auto out = apply_laplacian(c, LambdaField::constant(1), 3);
    for (const auto& x : out.values()) EXPECT_EQ(x, q(-5, 2));
  }
}

TEST(ApplyLaplacian, NeedsTheNextBall) {
  const auto ball = enumerate_ball(family_oracle({Family::Grid, 2}), 2);
  const auto f = BallFunction::zeros(ball, 2);
  try {
    apply_laplacian(f, {}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InsufficientDomain);
  }
  EXPECT_THROW(apply_laplacian(BallFunction::zeros(ball, 0)), Error);
  EXPECT_NO_THROW(apply_laplacian(f, {}, 1));
}

TEST(LambdaField, RejectsNegativeValues) {
  EXPECT_THROW(LambdaField::constant(-1), Error);
  EXPECT_THROW(LambdaField::distance(q(-1, 2)), Error);
  EXPECT_THROW(LambdaField(LambdaField::Sparse{{{3, q(-1)}}}), Error);
  EXPECT_NO_THROW(LambdaField(LambdaField::Sparse{{{3, q(0)}}}));
}

TEST(TruncatedOperator, LineRadiusZero) {
  EXPECT_EQ(truncated_operator_matrix(family_oracle({Family::Line, 0}), 0), RationalMatrix::identity(1));
}

TEST(TruncatedOperator, LineRadiusOneFixture) {
  const auto m = truncated_operator_matrix(family_oracle({Family::Line, 0}), 1);
  const auto h = q(-1, 2);
  const auto expected = RationalMatrix::from_rows({{q(1), h, h}, {h, q(1), q(0)}, {h, q(0), q(1)}}, 3);
  EXPECT_EQ(m, expected);
}

TEST(TruncatedOperator, UnitLambdaDoublesTheDiagonal) {
  for (const auto& g : families()) {
    const auto m = truncated_operator_matrix(g, 3, LambdaField::constant(1));
    for (std::size_t i = 0; i < m.rows(); ++i) EXPECT_EQ(m(i, i), q(2));
  }
}

TEST(TruncatedOperator, AgreesWithOperatorOnFiniteSupport) {
  testing::RationalSampler sample(21);
  for (const auto& g : families()) {
    for (const auto& lambda : lambdas()) {
      for (std::size_t n = 0; n <= 4; ++n) {
        const auto ball = enumerate_ball(g, n);
        const BallFunction f(ball, n, sample.vector(ball->size()));
        const auto direct = apply_laplacian(f.extend_by_zero(n + 1), lambda, n);
        EXPECT_EQ(truncated_operator_matrix(*ball, n, lambda) * f.values(), direct.values());
      }
    }
  }
}

TEST(TruncatedOperator, RowStructure) {
  for (const auto& g : families()) {
    const auto ball = enumerate_ball(g, 4);
    const auto m = truncated_operator_matrix(*ball, 4);
    for (VertexId v = 0; v < ball->size(); ++v) {
      Rational off;
      std::size_t inside = 0;
      for (auto w : ball->neighbors(v)) inside += w < ball->size() ? 1 : 0;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j != v) off += m(v, j);
      }
      EXPECT_GE(off, q(-1));
      EXPECT_EQ(off, -q(static_cast<long>(inside), ball->degree(v)));
      if (inside == ball->degree(v)) EXPECT_EQ(off + m(v, v), q(0));
    }
  }
}

TEST(TruncatedOperator, DegreeScaledMatrixIsSymmetric) {
  for (const auto& g : families()) {
    for (std::size_t n = 0; n <= 4; ++n) {
      const auto ball = enumerate_ball(g, n);
      const auto m = truncated_operator_matrix(*ball, n);
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          EXPECT_EQ(m(i, j) * q(static_cast<long>(ball->degree(i))), m(j, i) * q(static_cast<long>(ball->degree(j))));
        }
      }
    }
  }
}

TEST(RestrictedLaplacian, MatrixMatchesOperator) {
  testing::RationalSampler sample(22);
  for (const auto& g : families()) {
    for (const auto& lambda : lambdas()) {
      const auto ball = enumerate_ball(g, 3);
      const BallFunction f(ball, 4, sample.vector(ball->outer_size()));
      const auto m = restricted_laplacian_matrix(*ball, 3, lambda);
      EXPECT_EQ(m.rows(), ball->size());
      EXPECT_EQ(m.cols(), ball->outer_size());
      EXPECT_EQ(m * f.values(), apply_laplacian(f, lambda).values());
    }
  }
}

TEST(RestrictionMatrix, IdentityAndComposition) {
  const auto ball = enumerate_ball(family_oracle({Family::Grid, 2}), 5);
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto id = restriction_matrix(*ball, n, n);
    EXPECT_EQ(id, RationalMatrix::identity(ball->prefix_size(n + 1)));
    for (std::size_t m = n; m <= 4; ++m) {
      for (std::size_t k = m; k <= 4; ++k) {
        EXPECT_EQ(restriction_matrix(*ball, n, m) * restriction_matrix(*ball, m, k), restriction_matrix(*ball, n, k));
      }
    }
  }
  EXPECT_THROW(restriction_matrix(*ball, 3, 2), Error);
}

TEST(RestrictionMatrix, LineSelector) {
  const auto ball = enumerate_ball(family_oracle({Family::Line, 0}), 1);
  const auto m = restriction_matrix(*ball, 0, 1);
  ASSERT_EQ(m.rows(), 3u);
  ASSERT_EQ(m.cols(), 5u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(m(i, j), q(i == j ? 1 : 0));
  // The selected coordinates are B_1 = {0, -1, 1} inside B_2.
  const auto big = enumerate_ball(family_oracle({Family::Line, 0}), 2);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(big->distance(i) <= 1, true);
  EXPECT_EQ(big->distance(3), 2u);
}

TEST(TargetFunction, ClosedForms) {
  const auto ball = enumerate_ball(family_oracle({Family::RegularTree, 3}), 3);
  const TargetFunction radial(TargetFunction::Radial{{q(1), q(-1, 2)}});
  const TargetFunction geometric(TargetFunction::Geometric{q(1), q(1, 2)});
  const TargetFunction degree(TargetFunction::Degree{});
  for (VertexId v = 0; v < ball->size(); ++v) {
    const auto d = ball->distance(v);
    EXPECT_EQ(radial.at(*ball, v), d == 0 ? q(1) : d == 1 ? q(-1, 2) : q(0));
    EXPECT_EQ(geometric.at(*ball, v), pow2_inverse(static_cast<unsigned>(d)));
    EXPECT_EQ(degree.at(*ball, v), q(3));
    EXPECT_EQ(TargetFunction::delta().at(*ball, v), q(v == 0 ? 1 : 0));
  }
}

TEST(TargetFunction, RandomTargetIsSeededAndRadiusIndependent) {
  const auto g = family_oracle({Family::Grid, 2});
  const TargetFunction a(TargetFunction::Random{5, q(1, 2)});
  const TargetFunction b(TargetFunction::Random{6, q(1, 2)});
  const auto small = a.on_ball(*enumerate_ball(g, 2), 2);
  const auto big = a.on_ball(*enumerate_ball(g, 4), 4);
  EXPECT_TRUE(std::equal(small.begin(), small.end(), big.begin()));
  EXPECT_NE(big, b.on_ball(*enumerate_ball(g, 4), 4));
  std::size_t nonzero = 0;
  for (const auto& x : big) nonzero += sgn(x) != 0 ? 1 : 0;
  EXPECT_GT(nonzero, 0u);
  EXPECT_LT(nonzero, big.size());
}

}  // namespace
}  // namespace graphlap
