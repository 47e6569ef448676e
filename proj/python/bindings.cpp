#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "specsup/canonical.hpp"
#include "specsup/constructors.hpp"
#include "specsup/counting.hpp"
#include "specsup/enumerate.hpp"
#include "specsup/errors.hpp"
#include "specsup/graph6.hpp"
#include "specsup/search.hpp"
#include "specsup/spectral.hpp"
#include "specsup/theorems.hpp"
#include "specsup/verify.hpp"

namespace py = pybind11;
using namespace specsup;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(py::str(r.get_str()));
}

py::object json_loads(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

std::string json_dumps(const py::object& obj) { return py::module_::import("json").attr("dumps")(obj).cast<std::string>(); }

}  // namespace

PYBIND11_MODULE(_specsup, m) {
  m.doc() = "Spectral supersaturation toolkit for triangles and bowties";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ConstructionError>(m, "ConstructionError", base.ptr());
  py::register_exception<SizeError>(m, "SizeError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<UnknownNameError>(m, "UnknownNameError", base.ptr());
  py::register_exception<IdentificationError>(m, "IdentificationError", base.ptr());
  py::register_exception<InfeasibleError>(m, "InfeasibleError", base.ptr());
  py::register_exception<InternalError>(m, "InternalError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_static("from_graph6", [](const std::string& s) { return graph6_decode(s); })
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def("edges", &Graph::edges)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("neighbors", &Graph::neighbors)
      .def("toggle", [](const Graph& g, Vertex u, Vertex v) { return toggle_edge(g, u, v); })
      .def("graph6", [](const Graph& g) { return graph6_encode(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
      });

  m.def("isomorphic", &isomorphic);
  m.def("canonical_graph", &canonical_graph);

  m.def("family_names", &family_names);
  m.def(
      "construct",
      [](const std::string& name, int n, int s, int t, int q, int b) {
        return family_members(name, FamilyParams{n, s, t, q, b});
      },
      py::arg("family"), py::arg("n") = 0, py::arg("s") = -1, py::arg("t") = -1, py::arg("q") = -1,
      py::arg("b") = -1, "All members of a named family (one graph for most families).");

  m.def("triangles", &triangle_count);
  m.def("bowties", &count_bowties);
  m.def("bowties_bruteforce", &count_bowties_bruteforce);
  m.def("booksize", &booksize);
  m.def("tau3", &triangle_cover_number);
  m.def("triangular_edges", &triangular_edge_count);
  m.def("matching_number", &max_matching);
  m.def("friendship_number", &max_friendship);

  m.def(
      "spectral_radius",
      [](const Graph& g, double tol) {
        SpectralResult r = spectral_radius(g, tol);
        py::dict d;
        d["lambda"] = r.lambda;
        d["residual"] = r.residual;
        d["iterations"] = r.iterations;
        d["perron"] = r.perron;
        return d;
      },
      py::arg("g"), py::arg("tol") = kDefaultSpectralTol);
  m.def("quotient_lambda", &quotient_lambda);
  m.def(
      "quotient_polynomial",
      [](const Graph& g) {
        Polynomial p = char_poly(equitable_quotient(g, coarsest_equitable_partition(g)));
        py::list coeffs;
        for (const auto& c : p.coefficients()) coeffs.append(fraction(c));
        return coeffs;
      },
      "Ascending coefficients of the coarsest equitable quotient's characteristic polynomial.");
  m.def("polynomial_names", [] {
    std::vector<std::string> out;
    for (const auto& e : paper_polynomials()) out.push_back(e.name);
    return out;
  });
  m.def(
      "polynomial",
      [](const std::string& name, std::int64_t n, std::int64_t s, std::int64_t t) {
        const Polynomial p = paper_polynomial(name, n, s, t);
        py::list coeffs;
        for (const auto& c : p.coefficients()) coeffs.append(fraction(c));
        return coeffs;
      },
      py::arg("name"), py::arg("n") = 0, py::arg("s") = 0, py::arg("t") = 0);
  m.def(
      "largest_root",
      [](const std::string& name, std::int64_t n, std::int64_t s, std::int64_t t) {
        return largest_real_root(paper_polynomial(name, n, s, t));
      },
      py::arg("name"), py::arg("n") = 0, py::arg("s") = 0, py::arg("t") = 0);

  m.def("predicate_ids", [] {
    std::vector<std::string> out;
    for (const auto& p : predicates()) out.push_back(p.id);
    return out;
  });
  m.def(
      "check",
      [](const std::string& id, const Graph& g, const std::string& mode) {
        const std::vector<Verdict> verdicts{check(id, g, parse_mode(mode))};
        py::list parsed = json_loads(verdicts_to_json(verdicts, -1));
        return py::object(parsed[0]);
      },
      py::arg("predicate"), py::arg("g"), py::arg("mode") = "strict");
  m.def(
      "verify",
      [](const std::vector<Graph>& graphs, const std::string& predicates, const std::string& mode, int workers) {
        return json_loads(report_to_json(verify_graphs(graphs, resolve_predicates(predicates), parse_mode(mode), workers)));
      },
      py::arg("graphs"), py::arg("predicates") = "all", py::arg("mode") = "strict", py::arg("workers") = 0);
  m.def(
      "exhaustive_verify",
      [](int n, const std::string& predicates, const std::string& mode, int workers) {
        py::gil_scoped_release release;
        auto report = exhaustive_verify(resolve_predicates(predicates), n, parse_mode(mode), workers);
        py::gil_scoped_acquire acquire;
        return json_loads(report_to_json(report));
      },
      py::arg("n"), py::arg("predicates") = "all", py::arg("mode") = "strict", py::arg("workers") = 0);

  m.def(
      "generate_all",
      [](int n, int workers) {
        py::gil_scoped_release release;
        return generate_all(n, workers);
      },
      py::arg("n"), py::arg("workers") = 0);

  m.def(
      "anneal",
      [](const py::dict& config) {
        SearchConfig cfg = search_config_from_json(json_dumps(config));
        SearchResult r;
        {
          py::gil_scoped_release release;
          r = anneal(cfg);
        }
        return json_loads(search_result_to_json(r, cfg));
      },
      py::arg("config"), "Runs simulated annealing from a config dict; returns the result dict.");
}
