#pragma once

#include "graphlap/laplacian.hpp"

namespace graphlap {

struct DistanceBounds {
  Rational lower;
  Rational upper;
};

/// Bounds on the prodiscrete distance sum_n 2^-(n+1) [f != h on B_n] using
/// the balls B_n as exhaustion. lower is the partial sum over n <= depth,
/// upper adds the whole tail 2^-(depth+1). Throws InsufficientDomain if
/// either function is not defined on B_depth.
DistanceBounds prodiscrete_distance(const BallFunction& f, const BallFunction& h, std::size_t depth);

}  // namespace graphlap
