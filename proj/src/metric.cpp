#include "graphlap/metric.hpp"

#include <string>

#include "graphlap/error.hpp"

namespace graphlap {

DistanceBounds prodiscrete_distance(const BallFunction& f, const BallFunction& h, std::size_t depth) {
  for (const auto* fn : {&f, &h}) {
    if (fn->radius() < depth) {
      throw Error(ErrorCode::InsufficientDomain, "function on B_" + std::to_string(fn->radius()) +
                                                     " compared to depth " + std::to_string(depth));
    }
  }
  for (std::size_t r = 0; r <= depth; ++r) {
    if (f.ball()->prefix_size(r) != h.ball()->prefix_size(r)) {
      throw Error(ErrorCode::DimensionMismatch, "functions come from balls with different B_" + std::to_string(r));
    }
  }

  DistanceBounds out;
  const auto size = f.ball()->prefix_size(depth);
  for (VertexId v = 0; v < size; ++v) {
    if (f[v] != h[v]) {
      // delta_r = 1 for every r >= d(v); the partial sum telescopes.
      const auto first = f.ball()->distance(v);
      out.lower = pow2_inverse(static_cast<unsigned>(first)) - pow2_inverse(static_cast<unsigned>(depth + 1));
      break;
    }
  }
  out.upper = out.lower + pow2_inverse(static_cast<unsigned>(depth + 1));
  return out;
}

}  // namespace graphlap
