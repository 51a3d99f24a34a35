#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "graphlap/error.hpp"
#include "graphlap/io.hpp"
#include "graphlap/metric.hpp"
#include "graphlap/solver.hpp"

namespace py = pybind11;
using namespace graphlap;

namespace {

// Rationals cross the boundary as fractions.Fraction.
py::object to_py(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(r.get_num().get_str())), py::int_(py::str(r.get_den().get_str())));
}

Rational from_py(const py::handle& h) {
  return parse_rational(py::str(h).cast<std::string>());
}

py::list to_py(const RationalVector& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

RationalVector vector_from_py(const py::sequence& seq) {
  RationalVector out;
  out.reserve(seq.size());
  for (const auto& item : seq) out.push_back(from_py(item));
  return out;
}

// Targets and potentials use the command line syntax: shorthands or JSON.
TargetFunction target_arg(const std::string& target, std::uint64_t seed) {
  return io::target_from_argument(target, seed);
}

LambdaField lambda_arg(const py::object& lambda) {
  if (lambda.is_none()) return {};
  return io::lambda_from_argument(py::str(lambda).cast<std::string>());
}

struct Graph {
  OraclePtr oracle;
};

py::list labels(const Ball& ball, std::size_t count) {
  py::list out;
  for (VertexId v = 0; v < count; ++v) out.append(ball.label_string(v));
  return out;
}

py::dict report_dict(const SolveReport& r) {
  py::dict d;
  const auto& ball = *r.solution.ball();
  d["radius"] = r.radius;
  d["construction"] = std::string(io::to_string(r.construction));
  d["residual_zero"] = r.residual_zero;
  d["metric_bound"] = to_py(r.metric_bound);
  d["solution"] = to_py(r.solution.values());
  d["labels"] = labels(ball, r.solution.values().size());
  return d;
}

py::dict affine_dict(const AffineSubspace& s) {
  py::dict d;
  d["ambient_dim"] = s.ambient_dim();
  d["empty"] = s.is_empty();
  d["dimension"] = s.dimension() ? py::cast(*s.dimension()) : py::none();
  if (!s.is_empty()) {
    d["particular"] = to_py(s.particular());
    py::list basis;
    for (std::size_t i = 0; i < s.basis().rows(); ++i) basis.append(to_py(s.basis().row_vector(i)));
    d["basis"] = basis;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact preimages of the graph Laplacian on balls";
#ifdef VERSION_INFO
  m.attr("__version__") = PYBIND11_TOSTRING(VERSION_INFO);
#endif

  static py::exception<Error> error(m, "GraphlapError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](const std::string& spec) { return Graph{io::graph_from_argument(spec)}; }), py::arg("spec"),
           "Family shorthand (z, z2, tree3, ladder, free2, c5, p6, ...) or a JSON description")
      .def_property_readonly("name", [](const Graph& g) { return g.oracle->name(); })
      .def(
          "ball_sizes",
          [](const Graph& g, std::size_t n) {
            const auto ball = enumerate_ball(g.oracle, n);
            std::vector<std::size_t> sizes;
            for (std::size_t r = 0; r <= n; ++r) sizes.push_back(ball->prefix_size(r));
            return sizes;
          },
          py::arg("n"), "|B_0|, ..., |B_n|")
      .def(
          "labels", [](const Graph& g, std::size_t n) { return labels(*enumerate_ball(g.oracle, n), enumerate_ball(g.oracle, n)->size()); },
          py::arg("n"), "Vertex labels of B_n in solver order")
      .def(
          "saturated", [](const Graph& g, std::size_t n) { return enumerate_ball(g.oracle, n)->boundary_saturated(); },
          py::arg("n"))
      .def(
          "validate",
          [](const Graph& g, std::size_t probe_radius) {
            const auto rep = validate_oracle(*g.oracle, probe_radius);
            py::list violations;
            for (const auto& v : rep.violations) {
              violations.append(py::make_tuple(std::string(to_string(v.kind)), v.vertex, v.detail));
            }
            py::dict d;
            d["passed"] = rep.passed;
            d["vertices_checked"] = rep.vertices_checked;
            d["violations"] = violations;
            return d;
          },
          py::arg("probe_radius"));

  m.def(
      "solve_on_ball",
      [](const Graph& g, std::size_t n, const std::string& target, const py::object& lambda, std::uint64_t seed) {
        return report_dict(solve_on_ball(g.oracle, target_arg(target, seed), n, lambda_arg(lambda)));
      },
      py::arg("graph"), py::arg("n"), py::arg("target") = "delta", py::arg("lam") = py::none(), py::arg("seed") = 0);

  m.def(
      "certificate",
      [](const Graph& g, std::size_t n, const py::object& lambda) {
        const auto c = max_principle_certificate(g.oracle, n, lambda_arg(lambda));
        py::dict d;
        d["radius"] = c.radius;
        d["ball_size"] = c.ball_size;
        d["strict_inclusion"] = c.strict_inclusion;
        d["determinant"] = to_py(c.determinant);
        d["passed"] = c.passed;
        return d;
      },
      py::arg("graph"), py::arg("n"), py::arg("lam") = py::none());

  m.def(
      "solution_set",
      [](const Graph& g, std::size_t n, const std::string& target, const py::object& lambda, std::uint64_t seed) {
        return affine_dict(affine_solution_set(g.oracle, target_arg(target, seed), n, lambda_arg(lambda)));
      },
      py::arg("graph"), py::arg("n"), py::arg("target") = "delta", py::arg("lam") = py::none(), py::arg("seed") = 0,
      "X_n as a canonical affine subspace of Q^{B_{n+1}}");

  m.def(
      "run_chain",
      [](const Graph& g, std::size_t n, std::size_t max_m, std::size_t window, const std::string& target,
         const py::object& lambda, std::uint64_t seed) {
        const auto chain = run_chain(g.oracle, target_arg(target, seed), n, max_m, window, lambda_arg(lambda));
        py::dict d;
        d["level"] = chain.level;
        d["status"] = std::string(io::to_string(chain.status));
        py::list dims;
        for (const auto& img : chain.images) {
          dims.append(img.image.dimension() ? py::cast(*img.image.dimension()) : py::none());
        }
        d["dims"] = dims;
        d["m0"] = chain.stabilized_at ? py::cast(*chain.stabilized_at) : py::none();
        d["universal_element"] =
            chain.status == ChainStatus::Stabilized ? py::object(to_py(universal_element(chain).values())) : py::none();
        return d;
      },
      py::arg("graph"), py::arg("n"), py::arg("max_m") = 8, py::arg("window") = 3, py::arg("target") = "delta",
      py::arg("lam") = py::none(), py::arg("seed") = 0);

  m.def(
      "coherent_solution",
      [](const Graph& g, std::size_t last_level, std::size_t max_m, std::size_t window, const std::string& target,
         const py::object& lambda, std::uint64_t seed) {
        const auto result =
            coherent_solution(g.oracle, target_arg(target, seed), last_level, max_m, window, lambda_arg(lambda));
        auto d = report_dict(result.report);
        py::list family;
        for (const auto& x : result.family) family.append(to_py(x.values()));
        d["family"] = family;
        return d;
      },
      py::arg("graph"), py::arg("last_level"), py::arg("max_m") = 8, py::arg("window") = 3,
      py::arg("target") = "delta", py::arg("lam") = py::none(), py::arg("seed") = 0);

  m.def(
      "prodiscrete_distance",
      [](const Graph& g, const py::sequence& lhs, const py::sequence& rhs, std::size_t depth) {
        const auto ball = enumerate_ball(g.oracle, depth);
        const auto size = ball->prefix_size(depth);
        auto f = vector_from_py(lhs), h = vector_from_py(rhs);
        if (f.size() < size || h.size() < size) {
          throw Error(ErrorCode::InsufficientDomain, "need values on all of B_depth");
        }
        f.resize(size);
        h.resize(size);
        const auto b = prodiscrete_distance(BallFunction(ball, depth, f), BallFunction(ball, depth, h), depth);
        return py::make_tuple(to_py(b.lower), to_py(b.upper));
      },
      py::arg("graph"), py::arg("lhs"), py::arg("rhs"), py::arg("depth"),
      "Lower and upper bounds from values on B_depth listed in solver order");
}
