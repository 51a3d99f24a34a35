#include "graphlap/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "graphlap/error.hpp"
#include "graphlap/io.hpp"

namespace graphlap::cli {

namespace {

using io::Json;

constexpr const char* kSchemaHelp = R"(Input schemas:
  --graph   shorthand z | z2 | z3 | tree3 | tree:D | ladder | ladder:K | free:R | c4 | cycle:K | p6 | path:K
            or JSON {"family":"grid","dims":2} | {"family":"tree","degree":3} | {"family":"ladder","width":2}
                    {"family":"free_group","rank":2} | {"family":"cycle","length":5} | {"family":"path","length":6}
                    {"vertices":N,"edges":[[i,j],...],"root":0} | {"adjacency":[[...],...],"root":0}
            (inline, or a path to a JSON file)
  --target  delta | zero | degree | random (uses --seed)
            or JSON {"kind":"radial","coeffs":["1","-1/2"]} | {"kind":"radial","ratio":"1/2"}
                    {"kind":"sparse","entries":{"0":"3/2"}} | {"kind":"constant","value":"2"}
  --lambda  a nonnegative rational (constant field) | distance
            or JSON {"kind":"sparse","entries":{"0":"1"}}
  --lhs/--rhs (metric mode) {"<vertex id>":"p/q",...} or a ball/coherent report with a "solution" field
Rationals are strings "p/q" or "p".
)";

struct RunConfig {
  std::string graph;
  std::string target = "delta";
  std::string mode = "ball";
  std::size_t radius = 1;
  std::size_t max_m = 8;
  std::size_t window = 3;
  std::string lambda = "0";
  std::string out;
  std::uint64_t seed = 0;
  std::string lhs;
  std::string rhs;
  std::vector<std::string> families{"z", "z2", "tree3", "ladder", "c5"};
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

BallFunction function_argument(const std::string& arg, const BallPtr& ball, std::size_t depth) {
  Json j;
  try {
    j = arg.find_first_not_of(" \t\n") != std::string::npos && arg[arg.find_first_not_of(" \t\n")] == '{'
            ? Json::parse(arg)
            : Json::parse(io::read_file(arg));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed function JSON: ") + e.what());
  }
  const auto values = io::values_from_json(j.contains("solution") ? j.at("solution") : j);
  const auto size = ball->prefix_size(depth);
  RationalVector out(size);
  for (VertexId v = 0; v < size; ++v) {
    auto it = values.find(v);
    if (it == values.end()) {
      throw UsageError("function has no value at vertex " + std::to_string(v) + ", needed for depth " +
                       std::to_string(depth));
    }
    out[v] = it->second;
  }
  return BallFunction(ball, depth, std::move(out));
}

int emit(const Json& report, const RunConfig& cfg, std::ostream& out) {
  const auto text = report.dump(2) + "\n";
  if (cfg.out.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) throw UsageError("cannot write " + cfg.out);
    file << text;
  }
  return exit_code::ok;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.mode == "fixtures") {
    if (cfg.out.empty()) throw UsageError("fixtures mode needs --out <directory>");
    const auto paths = emit_fixtures(cfg.seed, cfg.families, cfg.radius, cfg.out);
    Json files = Json::array();
    for (const auto& p : paths) files.push_back(p.string());
    out << Json{{"mode", "fixtures"}, {"files", files}}.dump(2) << "\n";
    return exit_code::ok;
  }
  if (cfg.graph.empty()) throw UsageError("--graph is required");
  if (cfg.window == 0) throw UsageError("--window must be at least 1");

  const auto oracle = io::graph_from_argument(cfg.graph);
  const auto target = io::target_from_argument(cfg.target, cfg.seed);
  const auto lambda = io::lambda_from_argument(cfg.lambda);

  const bool deep = cfg.mode == "chain" || cfg.mode == "coherent";
  const auto probe = (deep ? std::max(cfg.max_m, cfg.radius) : cfg.radius) + 1;
  const auto validation = validate_oracle(*oracle, probe);
  if (cfg.mode == "validate" || !validation.passed) {
    Json report = io::to_json(validation);
    report["mode"] = "validate";
    report["graph"] = oracle->name();
    report["probe_radius"] = probe;
    emit(report, cfg, out);
    if (!validation.passed) err << "graph oracle failed validation\n";
    return validation.passed ? exit_code::ok : exit_code::validation_failed;
  }

  Json header{{"mode", cfg.mode}, {"graph", oracle->name()}};
  auto with_header = [&](Json body) {
    Json merged = header;
    for (auto& [k, v] : body.items()) merged[k] = v;
    return merged;
  };

  if (cfg.mode == "ball") {
    try {
      return emit(with_header(io::to_json(solve_on_ball(oracle, target, cfg.radius, lambda))), cfg, out);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SingularSystem) throw;
      const bool finite = enumerate_ball(oracle, cfg.radius)->boundary_saturated();
      emit(with_header({{"radius", cfg.radius},
                        {"construction", "ball"},
                        {"status", "singular"},
                        {"singular_expected_finite", finite}}),
           cfg, out);
      if (finite) return exit_code::ok;
      err << e.what() << "\n";
      return exit_code::singular_infinite;
    }
  }
  if (cfg.mode == "certify") {
    const auto cert = max_principle_certificate(oracle, cfg.radius, lambda);
    emit(with_header(io::to_json(cert)), cfg, out);
    return cert.passed ? exit_code::ok : exit_code::singular_infinite;
  }
  if (cfg.mode == "chain") {
    if (cfg.radius > cfg.max_m) throw UsageError("--radius must not exceed --max-m");
    return emit(with_header(io::to_json(run_chain(oracle, target, cfg.radius, cfg.max_m, cfg.window, lambda))), cfg,
                out);
  }
  if (cfg.mode == "coherent") {
    if (cfg.radius > cfg.max_m) throw UsageError("--radius must not exceed --max-m");
    try {
      return emit(with_header(io::to_json(coherent_solution(oracle, target, cfg.radius, cfg.max_m, cfg.window, lambda))),
                  cfg, out);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotStabilized) throw;
      emit(with_header({{"radius", cfg.radius}, {"construction", "ml"}, {"status", "window_exceeded"}}), cfg, out);
      err << e.what() << "\n";
      return exit_code::window_exceeded;
    }
  }
  if (cfg.mode == "metric") {
    if (cfg.lhs.empty() || cfg.rhs.empty()) throw UsageError("metric mode needs --lhs and --rhs");
    const auto ball = enumerate_ball(oracle, cfg.radius);
    const auto f = function_argument(cfg.lhs, ball, cfg.radius);
    const auto h = function_argument(cfg.rhs, ball, cfg.radius);
    return emit(with_header(io::to_json(prodiscrete_distance(f, h, cfg.radius), cfg.radius)), cfg, out);
  }
  throw UsageError("unknown mode '" + cfg.mode + "'");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact preimages of the combinatorial graph Laplacian on growing balls", "graphlap"};
  app.footer(kSchemaHelp);
  RunConfig cfg;
  app.add_option("--graph", cfg.graph, "Graph family shorthand, JSON spec or JSON file");
  app.add_option("--target", cfg.target, "Target function g")->capture_default_str();
  app.add_option("--mode", cfg.mode, "Operation to run")
      ->check(CLI::IsMember({"ball", "chain", "coherent", "certify", "metric", "validate", "fixtures"}))
      ->capture_default_str();
  app.add_option("--radius", cfg.radius, "Ball radius n (level N in coherent mode, depth in metric mode)")
      ->capture_default_str();
  app.add_option("--max-m", cfg.max_m, "Deepest level explored by chains")->capture_default_str();
  app.add_option("--window", cfg.window, "Consecutive equal images needed to declare stabilization")
      ->capture_default_str();
  app.add_option("--lambda", cfg.lambda, "Nonnegative potential lambda")->capture_default_str();
  app.add_option("--out", cfg.out, "Report file (fixtures mode: output directory)");
  app.add_option("--seed", cfg.seed, "Seed for random targets and fixtures")->capture_default_str();
  app.add_option("--lhs", cfg.lhs, "Metric mode: first function");
  app.add_option("--rhs", cfg.rhs, "Metric mode: second function");
  app.add_option("--families", cfg.families, "Fixtures mode: graph shorthands")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return exit_code::usage;
  }

  try {
    return run(cfg, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n\n" << kSchemaHelp;
    return exit_code::usage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::ParseError:
      case ErrorCode::BadFamilyParameter:
      case ErrorCode::InvalidLambda:
      case ErrorCode::BadRadii:
      case ErrorCode::InsufficientDomain:
        err << "\n" << kSchemaHelp;
        return exit_code::usage;
      case ErrorCode::OracleInconsistent:
        return exit_code::validation_failed;
      case ErrorCode::SingularSystem:
        return exit_code::singular_infinite;
      case ErrorCode::NotStabilized:
        return exit_code::window_exceeded;
      default:
        return exit_code::internal_error;
    }
  }
}

std::vector<std::filesystem::path> emit_fixtures(std::uint64_t seed, const std::vector<std::string>& families,
                                                 std::size_t max_radius, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> written;
  const TargetFunction target(TargetFunction::Random{seed, make_rational(1, 2)});
  for (const auto& name : families) {
    const auto oracle = io::graph_from_argument(name);
    Json cases = Json::array();
    for (std::size_t n = 0; n <= max_radius; ++n) {
      const auto ball = enumerate_ball(oracle, n);
      Json entry{{"radius", n}, {"ball_size", ball->size()}};
      Json g = Json::object();
      const auto rhs = target.on_ball(*ball, n);
      for (VertexId v = 0; v < rhs.size(); ++v) g[std::to_string(v)] = io::to_json(rhs[v]);
      entry["target_values"] = g;
      try {
        const auto report = solve_on_ball(oracle, target, n);
        entry["singular"] = false;
        entry["residual_zero"] = report.residual_zero;
        entry["solution"] = io::values_to_json(report.solution);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::SingularSystem) throw;
        entry["singular"] = true;
        entry["boundary_saturated"] = ball->boundary_saturated();
      }
      cases.push_back(std::move(entry));
    }
    Json doc{{"baseline", "regression baseline computed by this build; not independent ground truth"},
             {"graph", name},
             {"oracle", oracle->name()},
             {"seed", seed},
             {"target", io::to_json(target)},
             {"cases", cases}};
    std::string file = name;
    for (auto& c : file) {
      if (c == ':' || c == '/' || c == '{') c = '_';
    }
    auto path = out_dir / (file + ".json");
    std::ofstream(path, std::ios::binary) << doc.dump(2) << "\n";
    written.push_back(std::move(path));
  }
  return written;
}

}  // namespace graphlap::cli
