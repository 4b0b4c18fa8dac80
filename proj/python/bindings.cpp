#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zforce/cli.hpp"
#include "zforce/errors.hpp"

namespace py = pybind11;
using namespace zforce;

namespace {

VertexSet to_set(const std::vector<int>& vertices) { return VertexSet::from_indices(vertices); }

py::dict certificate_dict(const Certificate& c) {
  py::dict d;
  d["target"] = std::string(to_string(c.target));
  d["value"] = c.value;
  d["witness"] = c.witness.indices();
  d["route"] = std::string(to_string(c.route));
  d["basis"] = c.basis;
  return d;
}

py::dict construction_dict(const ConstructionResult& r) {
  py::dict d;
  d["graph"] = r.graph;
  d["set"] = r.set.indices();
  d["predicted_size"] = r.predicted_size;
  d["source"] = r.source;
  py::list claims;
  for (Claim c : r.claims) claims.append(std::string(to_string(c)));
  d["claims"] = claims;
  py::dict verdicts;
  for (const auto& v : verify_claims(r)) verdicts[py::str(std::string(to_string(v.claim)))] = v.passed;
  d["verdicts"] = verdicts;
  d["size_matches"] = size_matches(r);
  return d;
}

SearchOptions options(int cap, int workers) { return SearchOptions{cap, workers}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Zero forcing, failed zero forcing and graph product constructions";

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<MismatchError>(m, "MismatchError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int order, const std::vector<Edge>& edges) { return Graph(order, edges); }),
           py::arg("order"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("labels", &Graph::labels)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).indices(); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) + ", edges=" +
               std::to_string(g.edge_count()) + ")";
      });

  m.def("graph", [](const std::string& expr) { return build_expression(cli::parse_expression(expr)); },
        py::arg("expression"), "Build a graph from an expression such as 'path:4 box path:3'.");
  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); });
  m.def("serialize_graph", &serialize_graph);
  m.def("cartesian_product", &cartesian_product);
  m.def("strong_product", &strong_product);
  m.def("lexicographic_product", &lexicographic_product);
  m.def("corona", &corona);

  m.def("modules_of_order_two", &modules_of_order_two);
  m.def("isolated_vertices", [](const Graph& g) { return isolated_vertices(g).indices(); });
  m.def("connected_component_count", &connected_component_count);
  m.def("is_complete", &is_complete);

  m.def("derived_coloring", [](const Graph& g, const std::vector<int>& blue) {
    const DerivedColoring d = derived_coloring(g, to_set(blue));
    std::vector<std::pair<int, int>> chain;
    for (const Force& f : d.chain) chain.emplace_back(f.forcer, f.forced);
    return py::make_tuple(d.final_blue.indices(), chain);
  });
  m.def("is_zero_forcing_set", [](const Graph& g, const std::vector<int>& s) {
    return is_zero_forcing_set(g, to_set(s));
  });
  m.def("is_failed", [](const Graph& g, const std::vector<int>& s) { return is_failed(g, to_set(s)); });
  m.def("is_stalled", [](const Graph& g, const std::vector<int>& s) { return is_stalled(g, to_set(s)); });
  m.def("is_maximal_failed", [](const Graph& g, const std::vector<int>& s) {
    return is_maximal_failed(g, to_set(s));
  });

  m.def("zero_forcing_number",
        [](const Graph& g, int cap, int workers) {
          return certificate_dict(zero_forcing_number(g, options(cap, workers)));
        },
        py::arg("graph"), py::arg("cap") = kDefaultExhaustiveCap, py::arg("workers") = 1);
  m.def("failed_zero_forcing_number",
        [](const Graph& g, int cap, int workers) {
          return certificate_dict(failed_zero_forcing_number(g, options(cap, workers)));
        },
        py::arg("graph"), py::arg("cap") = kDefaultExhaustiveCap, py::arg("workers") = 1);
  m.def("upper_bound", [](const Graph& g) {
    const UpperBound ub = thm27_upper_bound(g);
    return py::make_tuple(ub.bound, std::string(to_string(ub.basis)));
  });
  m.def("verify_sharpness", [](const Graph& g, const std::vector<int>& s) {
    const SharpnessResult r = verify_sharpness(g, to_set(s));
    py::dict d;
    d["status"] = std::string(to_string(r.status));
    d["bound"] = r.bound.bound;
    d["certificate"] = r.certificate ? py::object(certificate_dict(*r.certificate)) : py::none();
    return d;
  });

  m.def("construct", [](const std::string& tag, const std::vector<int>& p) -> py::dict {
    auto need = [&](std::size_t k) {
      if (p.size() != k) throw ParameterError(tag + " takes " + std::to_string(k) + " parameter(s)");
    };
    if (tag == "grid") return need(2), construction_dict(grid_construction(p[0], p[1]));
    if (tag == "torus") return need(2), construction_dict(torus_construction(p[0], p[1]));
    if (tag == "prism") return need(1), construction_dict(prism_construction(p[0]));
    if (tag == "strong-grid") return need(2), construction_dict(strong_grid_construction(p[0], p[1]));
    if (tag == "strong-torus")
      return need(2), construction_dict(strong_torus_construction(p[0], p[1]));
    throw ParameterError("unknown construction '" + tag + "'");
  });
  m.def("lexicographic_construction", [](const Graph& g, const Graph& h, int cap) {
    return construction_dict(lexicographic_construction(g, h, options(cap, 1)));
  }, py::arg("g"), py::arg("h"), py::arg("cap") = kDefaultExhaustiveCap);
  m.def("corona_construction", [](const Graph& g, const Graph& h, int cap) {
    return construction_dict(corona_construction(g, h, options(cap, 1)));
  }, py::arg("g"), py::arg("h"), py::arg("cap") = kDefaultExhaustiveCap);

  m.def("report", [](int workers) {
    return cli::format_report(cli::reproduction_rows(options(kDefaultExhaustiveCap, workers)));
  }, py::arg("workers") = 1);
}
