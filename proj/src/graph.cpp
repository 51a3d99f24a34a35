#include "graphlap/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "graphlap/error.hpp"

namespace graphlap {

std::string GraphOracle::format_label(const Label& v) const {
  if (v.size() == 1) return std::to_string(v.front());
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

namespace {

class LineOracle final : public GraphOracle {
public:
  Label root() const override { return {0}; }
  std::vector<Label> neighbors(const Label& v) const override { return {{v[0] - 1}, {v[0] + 1}}; }
  std::optional<bool> is_finite_hint() const override { return false; }
  std::string name() const override { return "line"; }
};

class GridOracle final : public GraphOracle {
public:
  explicit GridOracle(int dims) : dims_(dims) {}
  Label root() const override { return Label(dims_, 0); }
  std::vector<Label> neighbors(const Label& v) const override {
    std::vector<Label> out;
    out.reserve(2 * dims_);
    for (int axis = 0; axis < dims_; ++axis) {
      for (int step : {-1, 1}) {
        Label w = v;
        w[axis] += step;
        out.push_back(std::move(w));
      }
    }
    return out;
  }
  std::optional<bool> is_finite_hint() const override { return false; }
  std::string name() const override { return "grid" + std::to_string(dims_); }

private:
  int dims_;
};

// Vertices are root-to-vertex paths of child indices.
class RegularTreeOracle final : public GraphOracle {
public:
  explicit RegularTreeOracle(int degree) : degree_(degree) {}
  Label root() const override { return {}; }
  std::vector<Label> neighbors(const Label& v) const override {
    std::vector<Label> out;
    if (!v.empty()) out.emplace_back(v.begin(), v.end() - 1);
    const int children = v.empty() ? degree_ : degree_ - 1;
    for (int c = 0; c < children; ++c) {
      Label w = v;
      w.push_back(c);
      out.push_back(std::move(w));
    }
    return out;
  }
  std::optional<bool> is_finite_hint() const override { return false; }
  std::string name() const override { return "tree" + std::to_string(degree_); }
  std::string format_label(const Label& v) const override {
    if (v.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += '.';
      out += std::to_string(v[i]);
    }
    return out;
  }

private:
  int degree_;
};

class LadderOracle final : public GraphOracle {
public:
  explicit LadderOracle(int width) : width_(width) {}
  Label root() const override { return {0, 0}; }
  std::vector<Label> neighbors(const Label& v) const override {
    std::vector<Label> out{{v[0] - 1, v[1]}, {v[0] + 1, v[1]}};
    if (v[1] > 0) out.push_back({v[0], v[1] - 1});
    if (v[1] + 1 < width_) out.push_back({v[0], v[1] + 1});
    return out;
  }
  std::optional<bool> is_finite_hint() const override { return false; }
  std::string name() const override { return "ladder" + std::to_string(width_); }

private:
  int width_;
};

// Reduced words; letter +i is the i-th generator, -i its inverse.
class FreeGroupOracle final : public GraphOracle {
public:
  explicit FreeGroupOracle(int rank) : rank_(rank) {}
  Label root() const override { return {}; }
  std::vector<Label> neighbors(const Label& v) const override {
    std::vector<Label> out;
    out.reserve(2 * rank_);
    for (int g = 1; g <= rank_; ++g) {
      for (int s : {g, -g}) {
        Label w = v;
        if (!w.empty() && w.back() == -s) {
          w.pop_back();
        } else {
          w.push_back(s);
        }
        out.push_back(std::move(w));
      }
    }
    return out;
  }
  std::optional<bool> is_finite_hint() const override { return false; }
  std::string name() const override { return "free" + std::to_string(rank_); }
  // Generators print as a, b, ...; inverses in upper case.
  std::string format_label(const Label& v) const override {
    if (v.empty()) return "e";
    std::string out;
    for (auto letter : v) {
      if (rank_ <= 26) {
        const char c = static_cast<char>('a' + (letter > 0 ? letter : -letter) - 1);
        out += letter > 0 ? c : static_cast<char>(c - 'a' + 'A');
      } else {
        out += (out.empty() ? "" : ".") + std::to_string(letter);
      }
    }
    return out;
  }

private:
  int rank_;
};

class CycleOracle final : public GraphOracle {
public:
  explicit CycleOracle(int length) : length_(length) {}
  Label root() const override { return {0}; }
  std::vector<Label> neighbors(const Label& v) const override {
    return {{(v[0] + length_ - 1) % length_}, {(v[0] + 1) % length_}};
  }
  std::optional<bool> is_finite_hint() const override { return true; }
  std::string name() const override { return "cycle" + std::to_string(length_); }

private:
  std::int64_t length_;
};

class PathOracle final : public GraphOracle {
public:
  explicit PathOracle(int length) : length_(length) {}
  Label root() const override { return {0}; }
  std::vector<Label> neighbors(const Label& v) const override {
    std::vector<Label> out;
    if (v[0] > 0) out.push_back({v[0] - 1});
    if (v[0] + 1 < length_) out.push_back({v[0] + 1});
    return out;
  }
  std::optional<bool> is_finite_hint() const override { return true; }
  std::string name() const override { return "path" + std::to_string(length_); }

private:
  std::int64_t length_;
};

class AdjacencyOracle final : public GraphOracle {
public:
  AdjacencyOracle(std::vector<std::vector<std::size_t>> adjacency, std::size_t root)
      : adjacency_(std::move(adjacency)), root_(root) {}
  Label root() const override { return {static_cast<std::int64_t>(root_)}; }
  std::vector<Label> neighbors(const Label& v) const override {
    std::vector<Label> out;
    for (auto w : adjacency_.at(static_cast<std::size_t>(v.at(0)))) out.push_back({static_cast<std::int64_t>(w)});
    return out;
  }
  std::optional<bool> is_finite_hint() const override { return true; }
  std::string name() const override { return "custom"; }

private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t root_;
};

[[noreturn]] void bad_parameter(const std::string& what) { throw Error(ErrorCode::BadFamilyParameter, what); }

}  // namespace

OraclePtr family_oracle(const FamilySpec& spec) {
  const int p = spec.param;
  switch (spec.family) {
    case Family::Line:
      return std::make_shared<LineOracle>();
    case Family::Grid:
      if (p != 2 && p != 3) bad_parameter("grid dimension must be 2 or 3, got " + std::to_string(p));
      return std::make_shared<GridOracle>(p);
    case Family::RegularTree:
      if (p < 2) bad_parameter("tree degree must be >= 2, got " + std::to_string(p));
      return std::make_shared<RegularTreeOracle>(p);
    case Family::Ladder:
      if (p < 2) bad_parameter("ladder width must be >= 2, got " + std::to_string(p));
      return std::make_shared<LadderOracle>(p);
    case Family::FreeGroup:
      if (p < 1) bad_parameter("free group rank must be >= 1, got " + std::to_string(p));
      return std::make_shared<FreeGroupOracle>(p);
    case Family::Cycle:
      if (p < 3) bad_parameter("cycle length must be >= 3, got " + std::to_string(p));
      return std::make_shared<CycleOracle>(p);
    case Family::Path:
      if (p < 2) bad_parameter("path length must be >= 2, got " + std::to_string(p));
      return std::make_shared<PathOracle>(p);
  }
  bad_parameter("unknown family");
}

OraclePtr edge_list_oracle(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                           std::size_t root) {
  if (vertices == 0) bad_parameter("custom graph needs at least one vertex");
  if (root >= vertices) bad_parameter("root " + std::to_string(root) + " out of range");
  std::vector<std::vector<std::size_t>> adjacency(vertices);
  for (const auto& [a, b] : edges) {
    if (a >= vertices || b >= vertices) {
      bad_parameter("edge [" + std::to_string(a) + "," + std::to_string(b) + "] out of range");
    }
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
  return std::make_shared<AdjacencyOracle>(std::move(adjacency), root);
}

OraclePtr adjacency_oracle(std::vector<std::vector<std::size_t>> adjacency, std::size_t root) {
  const auto n = adjacency.size();
  if (root >= n) bad_parameter("root " + std::to_string(root) + " out of range");
  for (const auto& list : adjacency) {
    for (auto w : list) {
      if (w >= n) bad_parameter("neighbor " + std::to_string(w) + " out of range");
    }
  }
  return std::make_shared<AdjacencyOracle>(std::move(adjacency), root);
}

std::size_t Ball::prefix_size(std::size_t r) const {
  if (r > radius_ + 1) {
    throw Error(ErrorCode::InsufficientDomain,
                "radius " + std::to_string(r) + " beyond ball of radius " + std::to_string(radius_));
  }
  return static_cast<std::size_t>(std::upper_bound(distance_.begin(), distance_.end(), r) - distance_.begin());
}

std::string Ball::label_string(VertexId v) const { return oracle_->format_label(label(v)); }

std::span<const VertexId> Ball::neighbors(VertexId v) const {
  if (v >= inner_size_) {
    throw Error(ErrorCode::InsufficientDomain,
                "adjacency of vertex " + std::to_string(v) + " lies outside B_" + std::to_string(radius_));
  }
  return {adjacency_.data() + adjacency_offset_[v], adjacency_offset_[v + 1] - adjacency_offset_[v]};
}

BallPtr enumerate_ball(const OraclePtr& oracle, std::size_t n) {
  auto ball = std::make_shared<Ball>();
  ball->oracle_ = oracle;
  ball->radius_ = n;
  std::map<Label, VertexId> ids;
  auto discover = [&](const Label& w, std::size_t dist) {
    auto [it, inserted] = ids.emplace(w, ball->labels_.size());
    if (inserted) {
      ball->labels_.push_back(w);
      ball->distance_.push_back(dist);
    }
    return it->second;
  };
  discover(oracle->root(), 0);
  ball->adjacency_offset_.push_back(0);
  // Ids are handed out in BFS order, so the queue is just the id sequence.
  for (VertexId v = 0; v < ball->labels_.size() && ball->distance_[v] <= n; ++v) {
    const auto d = ball->distance_[v];
    const Label label = ball->labels_[v];
    for (const auto& w : oracle->neighbors(label)) ball->adjacency_.push_back(discover(w, d + 1));
    ball->adjacency_offset_.push_back(ball->adjacency_.size());
    ball->inner_size_ = v + 1;
  }
  return ball;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Loop: return "loop";
    case ViolationKind::DuplicateNeighbor: return "duplicate_neighbor";
    case ViolationKind::Asymmetric: return "asymmetric";
    case ViolationKind::Isolated: return "isolated";
  }
  return "unknown";
}

ValidationReport validate_oracle(const GraphOracle& oracle, std::size_t probe_radius) {
  ValidationReport report;
  auto query = [&](const Label& v) {
    auto first = oracle.neighbors(v);
    if (oracle.neighbors(v) != first) {
      throw Error(ErrorCode::OracleInconsistent,
                  "neighbor list of " + oracle.format_label(v) + " changed between calls");
    }
    return first;
  };
  auto flag = [&](ViolationKind kind, const Label& v, std::string detail) {
    report.passed = false;
    report.violations.push_back({kind, oracle.format_label(v), std::move(detail)});
  };

  std::map<Label, std::size_t> seen{{oracle.root(), 0}};
  std::deque<Label> queue{oracle.root()};
  while (!queue.empty()) {
    const Label v = queue.front();
    queue.pop_front();
    const auto d = seen.at(v);
    ++report.vertices_checked;
    const auto nbrs = query(v);
    if (nbrs.empty()) flag(ViolationKind::Isolated, v, "vertex has degree 0");
    std::set<Label> unique;
    for (const auto& w : nbrs) {
      if (w == v) {
        flag(ViolationKind::Loop, v, "vertex lists itself as a neighbor");
        continue;
      }
      if (!unique.insert(w).second) {
        flag(ViolationKind::DuplicateNeighbor, v, "neighbor " + oracle.format_label(w) + " listed twice");
        continue;
      }
      const auto back = query(w);
      if (std::find(back.begin(), back.end(), v) == back.end()) {
        flag(ViolationKind::Asymmetric, v,
             oracle.format_label(w) + " is a neighbor but does not list " + oracle.format_label(v));
      }
      if (d + 1 <= probe_radius && seen.emplace(w, d + 1).second) queue.push_back(w);
    }
  }
  return report;
}

}  // namespace graphlap
