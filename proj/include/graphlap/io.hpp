#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "graphlap/graph.hpp"
#include "graphlap/laplacian.hpp"
#include "graphlap/metric.hpp"
#include "graphlap/solver.hpp"

namespace graphlap::io {

using Json = nlohmann::ordered_json;

/// Rationals travel as "p/q" strings ("p" when q = 1); integers are accepted on input.
Json to_json(const Rational& value);
Rational rational_from_json(const Json& j);

/// {"family":"line"} | {"family":"grid","dims":2} | {"family":"tree","degree":3}
/// | {"family":"ladder","width":2} | {"family":"free_group","rank":2}
/// | {"family":"cycle","length":4} | {"family":"path","length":6}
/// | {"vertices":N,"edges":[[i,j],...],"root":0} | {"adjacency":[[...],...],"root":0}
OraclePtr parse_graph(const Json& j);

/// Shorthand ("z", "z2", "z3", "tree3", "tree:4", "ladder", "ladder:3",
/// "free2", "c4", "cycle:7", "p6", "path:6"), inline JSON, or a JSON file path.
OraclePtr graph_from_argument(std::string_view arg);

/// {"kind":"zero"} | {"kind":"delta"} | {"kind":"constant","value":"3/2"}
/// | {"kind":"radial","coeffs":["1","-1/2"]} | {"kind":"radial","scale":"1","ratio":"1/2"}
/// | {"kind":"degree"} | {"kind":"sparse","entries":{"0":"3/2"}}
/// | {"kind":"random","seed":7,"density":"1/2"}
TargetFunction parse_target(const Json& j);
/// Shorthand ("zero", "delta", "degree", "random"), inline JSON or file path.
/// `seed` feeds the "random" shorthand.
TargetFunction target_from_argument(std::string_view arg, std::uint64_t seed);
Json to_json(const TargetFunction& target);

/// {"kind":"zero"} | {"kind":"constant","value":"1"} | {"kind":"distance","scale":"1"}
/// | {"kind":"sparse","entries":{"0":"2"}}
LambdaField parse_lambda(const Json& j);
/// Shorthand: a rational literal (constant field), "distance", inline JSON or file path.
LambdaField lambda_from_argument(std::string_view arg);
Json to_json(const LambdaField& lambda);

/// {"<vertex id>": "p/q", ...}
Json values_to_json(const BallFunction& f);
Json labels_to_json(const Ball& ball, std::size_t radius);
std::map<VertexId, Rational> values_from_json(const Json& j);

std::string_view to_string(Construction c);
std::string_view to_string(ChainStatus s);

Json to_json(const SolveReport& report);
Json to_json(const Certificate& cert);
Json to_json(const ChainState& chain);
Json to_json(const CoherentResult& result);
Json to_json(const ValidationReport& report);
Json to_json(const DistanceBounds& bounds, std::size_t depth);

/// Report fields as read back from JSON.
struct ParsedReport {
  std::size_t radius = 0;
  std::map<VertexId, Rational> solution;
  bool residual_zero = false;
  Construction construction = Construction::BallSolver;
  Rational metric_bound;
};

ParsedReport parse_report(const Json& j);

/// Reads a whole file; throws Error(ParseError) when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace graphlap::io
