#include "graphlap/io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <fstream>
#include <sstream>

#include "graphlap/error.hpp"

namespace graphlap::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "' in " + j.dump());
  return j.at(key);
}

int int_field(const Json& j, const char* key, std::optional<int> fallback = std::nullopt) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    parse_error(std::string("missing integer field '") + key + "'");
  }
  const auto& v = j.at(key);
  if (!v.is_number_integer()) parse_error(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::size_t index_from_key(const std::string& key) {
  if (key.empty() || !std::all_of(key.begin(), key.end(), [](unsigned char c) { return std::isdigit(c) != 0; })) {
    parse_error("vertex key '" + key + "' is not a vertex id");
  }
  return std::stoull(key);
}

/// Inline JSON when it looks like JSON, else a file to read; nullopt otherwise.
std::optional<Json> json_argument(std::string_view arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  try {
    if (first != std::string_view::npos && (arg[first] == '{' || arg[first] == '[')) return Json::parse(arg);
    std::error_code ec;
    if (std::filesystem::is_regular_file(std::filesystem::path(arg), ec)) return Json::parse(read_file(arg));
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
  return std::nullopt;
}

/// Splits "tree:4" / "tree4" into ("tree", 4); missing number gives nullopt.
std::pair<std::string, std::optional<int>> split_shorthand(std::string_view arg) {
  std::string s(arg);
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  auto colon = s.find(':');
  std::string head = colon == std::string::npos ? s : s.substr(0, colon);
  std::string digits = colon == std::string::npos ? "" : s.substr(colon + 1);
  if (colon == std::string::npos) {
    auto pos = head.find_last_not_of("0123456789");
    digits = head.substr(pos + 1);
    head = head.substr(0, pos + 1);
  }
  if (digits.empty()) return {head, std::nullopt};
  if (!std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c) != 0; }) ||
      digits.size() > 6) {
    parse_error("bad numeric parameter in '" + std::string(arg) + "'");
  }
  return {head, std::stoi(digits)};
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json to_json(const Rational& value) { return graphlap::to_string(value); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(j.dump());
  parse_error("expected a rational string or integer, got " + j.dump());
}

OraclePtr parse_graph(const Json& j) {
  if (!j.is_object()) parse_error("graph spec must be a JSON object");
  try {
    if (j.contains("family")) {
      const auto family = require(j, "family").get<std::string>();
      if (family == "line" || family == "integers" || family == "z") return family_oracle({Family::Line, 0});
      if (family == "grid") return family_oracle({Family::Grid, int_field(j, "dims")});
      if (family == "tree") return family_oracle({Family::RegularTree, int_field(j, "degree")});
      if (family == "ladder") return family_oracle({Family::Ladder, int_field(j, "width", 2)});
      if (family == "free_group") return family_oracle({Family::FreeGroup, int_field(j, "rank")});
      if (family == "cycle") return family_oracle({Family::Cycle, int_field(j, "length")});
      if (family == "path") return family_oracle({Family::Path, int_field(j, "length")});
      parse_error("unknown graph family '" + family + "'");
    }
    const auto root = static_cast<std::size_t>(int_field(j, "root", 0));
    if (j.contains("adjacency")) {
      return adjacency_oracle(j.at("adjacency").get<std::vector<std::vector<std::size_t>>>(), root);
    }
    const auto vertices = static_cast<std::size_t>(int_field(j, "vertices"));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : require(j, "edges")) {
      if (!e.is_array() || e.size() != 2) parse_error("edge must be a pair, got " + e.dump());
      edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return edge_list_oracle(vertices, edges, root);
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("bad graph spec: ") + e.what());
  }
}

OraclePtr graph_from_argument(std::string_view arg) {
  if (auto j = json_argument(arg)) return parse_graph(*j);
  const auto [name, param] = split_shorthand(arg);
  if ((name == "z" || name == "line") && !param) return family_oracle({Family::Line, 0});
  if (name == "z" && param) return family_oracle({Family::Grid, *param});
  if (name == "grid") return family_oracle({Family::Grid, param.value_or(2)});
  if (name == "tree" || name == "t") return family_oracle({Family::RegularTree, param.value_or(3)});
  if (name == "ladder") return family_oracle({Family::Ladder, param.value_or(2)});
  if (name == "free") return family_oracle({Family::FreeGroup, param.value_or(2)});
  if ((name == "c" || name == "cycle") && param) return family_oracle({Family::Cycle, *param});
  if ((name == "p" || name == "path") && param) return family_oracle({Family::Path, *param});
  parse_error("unknown graph '" + std::string(arg) + "'");
}

TargetFunction parse_target(const Json& j) {
  try {
    const auto kind = require(j, "kind").get<std::string>();
    if (kind == "zero") return TargetFunction::zero();
    if (kind == "delta") return TargetFunction::delta();
    if (kind == "degree") return TargetFunction(TargetFunction::Degree{});
    if (kind == "constant") return TargetFunction(TargetFunction::Constant{rational_from_json(require(j, "value"))});
    if (kind == "radial") {
      if (j.contains("coeffs")) {
        RationalVector coeffs;
        for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
        return TargetFunction(TargetFunction::Radial{std::move(coeffs)});
      }
      const Rational scale = j.contains("scale") ? rational_from_json(j.at("scale")) : Rational(1);
      return TargetFunction(TargetFunction::Geometric{scale, rational_from_json(require(j, "ratio"))});
    }
    if (kind == "sparse") return TargetFunction(TargetFunction::Sparse{values_from_json(require(j, "entries"))});
    if (kind == "random") {
      TargetFunction::Random r;
      r.seed = require(j, "seed").get<std::uint64_t>();
      if (j.contains("density")) r.density = rational_from_json(j.at("density"));
      return TargetFunction(r);
    }
    parse_error("unknown target kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("bad target spec: ") + e.what());
  }
}

TargetFunction target_from_argument(std::string_view arg, std::uint64_t seed) {
  if (auto j = json_argument(arg)) return parse_target(*j);
  if (arg == "random") return TargetFunction(TargetFunction::Random{seed, make_rational(1, 2)});
  return parse_target(Json{{"kind", std::string(arg)}});
}

Json to_json(const TargetFunction& target) {
  struct Visitor {
    Json operator()(const TargetFunction::Zero&) const { return {{"kind", "zero"}}; }
    Json operator()(const TargetFunction::Delta&) const { return {{"kind", "delta"}}; }
    Json operator()(const TargetFunction::Degree&) const { return {{"kind", "degree"}}; }
    Json operator()(const TargetFunction::Constant& c) const { return {{"kind", "constant"}, {"value", to_json(c.value)}}; }
    Json operator()(const TargetFunction::Radial& r) const {
      Json coeffs = Json::array();
      for (const auto& c : r.coeffs) coeffs.push_back(to_json(c));
      return {{"kind", "radial"}, {"coeffs", coeffs}};
    }
    Json operator()(const TargetFunction::Geometric& g) const {
      return {{"kind", "radial"}, {"scale", to_json(g.scale)}, {"ratio", to_json(g.ratio)}};
    }
    Json operator()(const TargetFunction::Sparse& s) const {
      Json entries = Json::object();
      for (const auto& [v, value] : s.values) entries[std::to_string(v)] = to_json(value);
      return {{"kind", "sparse"}, {"entries", entries}};
    }
    Json operator()(const TargetFunction::Random& r) const {
      return {{"kind", "random"}, {"seed", r.seed}, {"density", to_json(r.density)}};
    }
  };
  return std::visit(Visitor{}, target.form());
}

LambdaField parse_lambda(const Json& j) {
  try {
    const auto kind = require(j, "kind").get<std::string>();
    if (kind == "zero") return LambdaField::zero();
    if (kind == "constant") return LambdaField::constant(rational_from_json(require(j, "value")));
    if (kind == "distance") {
      return LambdaField::distance(j.contains("scale") ? rational_from_json(j.at("scale")) : Rational(1));
    }
    if (kind == "sparse") return LambdaField(LambdaField::Sparse{values_from_json(require(j, "entries"))});
    parse_error("unknown lambda kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("bad lambda spec: ") + e.what());
  }
}

LambdaField lambda_from_argument(std::string_view arg) {
  if (auto j = json_argument(arg)) return parse_lambda(*j);
  if (arg == "distance") return LambdaField::distance();
  if (arg == "zero") return LambdaField::zero();
  const auto value = parse_rational(arg);
  return sgn(value) == 0 ? LambdaField::zero() : LambdaField::constant(value);
}

Json to_json(const LambdaField& lambda) {
  struct Visitor {
    Json operator()(const LambdaField::Zero&) const { return {{"kind", "zero"}}; }
    Json operator()(const LambdaField::Constant& c) const { return {{"kind", "constant"}, {"value", to_json(c.value)}}; }
    Json operator()(const LambdaField::Distance& d) const { return {{"kind", "distance"}, {"scale", to_json(d.scale)}}; }
    Json operator()(const LambdaField::Sparse& s) const {
      Json entries = Json::object();
      for (const auto& [v, value] : s.values) entries[std::to_string(v)] = to_json(value);
      return {{"kind", "sparse"}, {"entries", entries}};
    }
  };
  return std::visit(Visitor{}, lambda.form());
}

Json values_to_json(const BallFunction& f) {
  Json out = Json::object();
  for (VertexId v = 0; v < f.values().size(); ++v) out[std::to_string(v)] = to_json(f[v]);
  return out;
}

Json labels_to_json(const Ball& ball, std::size_t radius) {
  Json out = Json::object();
  const auto size = ball.prefix_size(radius);
  for (VertexId v = 0; v < size; ++v) out[std::to_string(v)] = ball.label_string(v);
  return out;
}

std::map<VertexId, Rational> values_from_json(const Json& j) {
  if (!j.is_object()) parse_error("expected an object keyed by vertex id");
  std::map<VertexId, Rational> out;
  for (const auto& [key, value] : j.items()) out.emplace(index_from_key(key), rational_from_json(value));
  return out;
}

std::string_view to_string(Construction c) { return c == Construction::BallSolver ? "ball" : "ml"; }

std::string_view to_string(ChainStatus s) {
  return s == ChainStatus::Stabilized ? "stabilized" : "window_exceeded";
}

Json to_json(const SolveReport& report) {
  return {{"radius", report.radius},
          {"construction", to_string(report.construction)},
          {"status", "ok"},
          {"residual_zero", report.residual_zero},
          {"metric_bound", to_json(report.metric_bound)},
          {"solution", values_to_json(report.solution)},
          {"labels", labels_to_json(*report.solution.ball(), report.solution.radius())}};
}

Json to_json(const Certificate& cert) {
  return {{"radius", cert.radius},
          {"ball_size", cert.ball_size},
          {"strict_inclusion", cert.strict_inclusion},
          {"determinant", to_json(cert.determinant)},
          {"passed", cert.passed}};
}

Json to_json(const ChainState& chain) {
  Json images = Json::array();
  for (const auto& img : chain.images) {
    const auto dim = img.image.dimension();
    images.push_back({{"m", img.m}, {"dim", dim ? Json(*dim) : Json("empty")}});
  }
  Json out{{"level", chain.level},
           {"status", to_string(chain.status)},
           {"max_m", chain.max_m},
           {"window", chain.window},
           {"images", images}};
  if (chain.stabilized_at) {
    out["m0"] = *chain.stabilized_at;
    if (!chain.image_at(*chain.stabilized_at).is_empty()) {
      out["universal_element"] = values_to_json(universal_element(chain));
    }
  }
  return out;
}

Json to_json(const CoherentResult& result) {
  Json out = to_json(result.report);
  Json m0 = Json::array();
  for (const auto& c : result.chains) m0.push_back(*c.stabilized_at);
  out["m0"] = m0;
  Json family = Json::array();
  for (std::size_t n = 0; n < result.family.size(); ++n) {
    family.push_back({{"level", n}, {"values", values_to_json(result.family[n])}});
  }
  out["family"] = family;
  return out;
}

Json to_json(const ValidationReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"kind", graphlap::to_string(v.kind)}, {"vertex", v.vertex}, {"detail", v.detail}});
  }
  return {{"passed", report.passed}, {"vertices_checked", report.vertices_checked}, {"violations", violations}};
}

Json to_json(const DistanceBounds& bounds, std::size_t depth) {
  return {{"depth", depth}, {"bounds", {to_json(bounds.lower), to_json(bounds.upper)}}};
}

ParsedReport parse_report(const Json& j) {
  try {
    ParsedReport out;
    out.radius = require(j, "radius").get<std::size_t>();
    out.solution = values_from_json(require(j, "solution"));
    out.residual_zero = require(j, "residual_zero").get<bool>();
    const auto construction = require(j, "construction").get<std::string>();
    if (construction != "ball" && construction != "ml") parse_error("unknown construction '" + construction + "'");
    out.construction = construction == "ball" ? Construction::BallSolver : Construction::MittagLeffler;
    out.metric_bound = rational_from_json(require(j, "metric_bound"));
    return out;
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("bad report: ") + e.what());
  }
}

}  // namespace graphlap::io
