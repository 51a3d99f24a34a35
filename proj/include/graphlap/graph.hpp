#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace graphlap {

/// Dense vertex index, assigned in BFS discovery order from the root (id 0).
using VertexId = std::size_t;

/// Oracle-native vertex name: integer coordinates, a tree path, a reduced
/// word, etc. Only the oracle interprets it.
using Label = std::vector<std::int64_t>;

/// Lazy description of a connected, locally finite, simplicial graph.
/// Implementations must be deterministic and safe to query concurrently.
class GraphOracle {
public:
  virtual ~GraphOracle() = default;

  virtual Label root() const = 0;
  virtual std::vector<Label> neighbors(const Label& v) const = 0;
  /// Known finiteness, if the oracle can tell without exploring.
  virtual std::optional<bool> is_finite_hint() const { return std::nullopt; }
  virtual std::string name() const = 0;
  virtual std::string format_label(const Label& v) const;
};

using OraclePtr = std::shared_ptr<const GraphOracle>;

enum class Family { Line, Grid, RegularTree, Ladder, FreeGroup, Cycle, Path };

/// `param` is the family's single integer parameter: grid dimension (2 or 3),
/// tree degree (>= 2), ladder width (>= 2), free-group rank (>= 1),
/// cycle length (>= 3) or path length (>= 2). Ignored for Line.
struct FamilySpec {
  Family family = Family::Line;
  int param = 0;
};

/// Canonical neighbor orders:
///   Line        k -> [k-1, k+1]
///   Grid        x -> [x-e0, x+e0, x-e1, x+e1, ...]
///   RegularTree parent first (absent at the root), then children by index
///   Ladder      (x,j) -> [(x-1,j), (x+1,j), (x,j-1), (x,j+1)] within the rungs
///   FreeGroup   w -> [w a, w a^-1, w b, w b^-1, ...] freely reduced
///   Cycle       i -> [i-1, i+1] mod k
///   Path        i -> [i-1, i+1] within 0..k-1, rooted at the end 0
/// Throws Error(BadFamilyParameter).
OraclePtr family_oracle(const FamilySpec& spec);

/// Finite graph from an undirected edge list; loops and repeated edges are
/// kept verbatim so validate_oracle can report them.
OraclePtr edge_list_oracle(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                           std::size_t root = 0);

/// Finite graph from raw adjacency lists, taken as given (possibly asymmetric).
OraclePtr adjacency_oracle(std::vector<std::vector<std::size_t>> adjacency, std::size_t root = 0);

/// B_n around the root, plus the ids (not the adjacency) of B_{n+1} \ B_n.
/// Vertices are ordered by (distance, id); B_r is an id prefix for every r.
class Ball {
public:
  std::size_t radius() const noexcept { return radius_; }
  /// |B_n|
  std::size_t size() const noexcept { return inner_size_; }
  /// |B_{n+1}|
  std::size_t outer_size() const noexcept { return labels_.size(); }
  /// True iff B_{n+1} = B_n, i.e. the graph is finite with vertex set B_n.
  bool boundary_saturated() const noexcept { return inner_size_ == labels_.size(); }

  /// |B_r| for r <= radius() + 1.
  std::size_t prefix_size(std::size_t r) const;

  std::size_t distance(VertexId v) const { return distance_.at(v); }
  const Label& label(VertexId v) const { return labels_.at(v); }
  std::string label_string(VertexId v) const;

  /// Only defined for v in B_n.
  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  const OraclePtr& oracle() const noexcept { return oracle_; }

private:
  friend std::shared_ptr<const Ball> enumerate_ball(const OraclePtr&, std::size_t);

  OraclePtr oracle_;
  std::size_t radius_ = 0;
  std::size_t inner_size_ = 0;
  std::vector<Label> labels_;
  std::vector<std::size_t> distance_;
  std::vector<std::size_t> adjacency_offset_;  // size inner_size_ + 1
  std::vector<VertexId> adjacency_;
};

using BallPtr = std::shared_ptr<const Ball>;

/// BFS to radius n, probing radius n+1 to fill the halo and saturation flag.
BallPtr enumerate_ball(const OraclePtr& oracle, std::size_t n);

enum class ViolationKind { Loop, DuplicateNeighbor, Asymmetric, Isolated };

struct Violation {
  ViolationKind kind;
  std::string vertex;  // formatted label
  std::string detail;
};

struct ValidationReport {
  bool passed = true;
  std::size_t vertices_checked = 0;
  std::vector<Violation> violations;
};

std::string_view to_string(ViolationKind kind);

/// Checks the simplicial and symmetry hypotheses on every vertex within
/// probe_radius of the root. Throws Error(OracleInconsistent) if a neighbor
/// list changes between two queries.
ValidationReport validate_oracle(const GraphOracle& oracle, std::size_t probe_radius);

}  // namespace graphlap
