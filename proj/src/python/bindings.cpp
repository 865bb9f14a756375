// bindings.cpp — Python module over the core library.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "specsat/config.hpp"
#include "specsat/error.hpp"
#include "specsat/graph6.hpp"
#include "specsat/harness.hpp"

namespace py = pybind11;
using namespace specsat;

namespace {

std::vector<std::pair<int, int>> edge_list(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Pattern pattern_of(const py::object& f) {
  if (py::isinstance<py::str>(f)) return named_pattern(f.cast<std::string>());
  return analyze_pattern(f.cast<Graph>());
}

py::object to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

PartitionedGraph family(const std::string& name, int n, int r, int q) {
  if (name == "turan") return turan(n, r);
  if (name == "Y") return y_graph(n, r, q);
  if (name == "L") return l_graph(n, r, q);
  if (name == "T") return t_star_graph(n, r, q);
  fail(ErrorKind::kInvalidArgument, "unknown family '" + name + "' (turan, Y, L, T)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spectral supersaturation toolkit: multipartite families, certified spectra, copy counts.";

  py::register_exception<Error>(m, "SpecsatError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init(&from_edges), py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def("graph6", [](const Graph& g) { return emit_graph6(g); })
      .def_property_readonly("n", &Graph::n)
      .def("edge_count", &Graph::edge_count)
      .def("edges", &edge_list)
      .def("has_edge", &Graph::has_edge)
      .def("add_edge", &Graph::add_edge)
      .def("remove_edge", &Graph::remove_edge)
      .def("degree", &Graph::degree)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<PartitionedGraph>(m, "PartitionedGraph")
      .def_readonly("graph", &PartitionedGraph::graph)
      .def_readonly("parts", &PartitionedGraph::parts)
      .def_readonly("base_sizes", &PartitionedGraph::base_sizes)
      .def_property_readonly("added_class_edges",
                             [](const PartitionedGraph& pg) { return edge_list(Graph(pg.n(), pg.added_class_edges)); })
      .def_property_readonly("label", &member_label)
      .def("sidecar", [](const PartitionedGraph& pg) { return to_python(sidecar(pg)); });

  m.def("family", &family, py::arg("name"), py::arg("n"), py::arg("r") = 2, py::arg("q") = 0);
  m.def("turan_sizes", &turan_sizes);
  m.def("complete_multipartite", [](std::vector<int> sizes) { return complete_multipartite(sizes); });
  m.def("enumerate_family", [](int n, int r, int q) { return enumerate_family(n, r, q); });

  m.def(
      "spectral_radius",
      [](const Graph& g, double tol) {
        const auto res = spectral_radius(g, tol);
        py::dict d;
        d["lambda"] = res.lambda;
        d["interval"] = py::make_tuple(res.interval.lo, res.interval.hi);
        d["iterations"] = res.iterations;
        d["converged"] = res.converged;
        return d;
      },
      py::arg("g"), py::arg("tol") = kDefaultTol);
  m.def("multipartite_lambda", &multipartite_lambda);
  m.def(
      "zhang_lambda",
      [](std::vector<int> sizes, std::vector<std::string> shapes, double tol) {
        EmbeddedSpec spec{std::move(sizes), {}};
        for (const auto& s : shapes) spec.embedded.push_back(named_shape(s));
        return zhang_lambda(spec, tol);
      },
      py::arg("sizes"), py::arg("shapes") = std::vector<std::string>{}, py::arg("tol") = kDefaultTol);
  m.def("walk_count", [](const Graph& h, int length) {
    return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(to_decimal(walk_count(h, length)).c_str(), nullptr, 10)));
  });

  m.def("count_copies", [](const py::object& f, const Graph& g) { return count_copies(pattern_of(f), g); });
  m.def("count_copies_through_edge", [](const py::object& f, const Graph& g, int u, int v) {
    return count_copies_through_edge(pattern_of(f), g, Edge(u, v));
  });
  m.def("c_n_F", [](int n, const py::object& f) { return c_n_F(n, pattern_of(f)); });
  m.def("covering_number", [](const py::object& f, const Graph& g) { return covering_number(pattern_of(f), g); });
  m.def("chromatic_number", &chromatic_number);

  m.def("theorem_names", &theorem_names);
  m.def(
      "verify",
      [](const std::string& theorem, const py::dict& params, int jobs) {
        CampaignOptions opt = CampaignOptions::from_config(load_config());
        opt.jobs = jobs;
        const Json p = Json::parse(py::module_::import("json").attr("dumps")(params).cast<std::string>());
        VerificationReport rep;
        {
          py::gil_scoped_release release;
          rep = run_campaign(theorem, p, opt);
        }
        return to_python(to_json(rep, false));
      },
      py::arg("theorem"), py::arg("params"), py::arg("jobs") = 1);
}
