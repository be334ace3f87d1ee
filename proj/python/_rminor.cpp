// Python bindings. Structured results cross the boundary as JSON text and are
// decoded by the rminor package.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rminor/catalog.hpp"
#include "rminor/certificates.hpp"
#include "rminor/graph_io.hpp"
#include "rminor/matroid.hpp"
#include "rminor/minor.hpp"
#include "rminor/rounded.hpp"

namespace py = pybind11;
using namespace rminor;

namespace {

SearchOptions options(std::uint64_t node_cap) {
  SearchOptions o;
  o.node_cap = node_cap;
  return o;
}

std::vector<Pattern> family_of(const std::vector<std::string>& names) {
  std::vector<Pattern> out;
  for (const auto& n : names) out.push_back(catalog_pattern(n));
  return out;
}

std::optional<std::string> model_json(const std::optional<MinorModel>& m) {
  if (!m) return std::nullopt;
  return to_json(*m).dump();
}

}  // namespace

PYBIND11_MODULE(_rminor, m) {
  m.doc() = "Rooted graph minors, roundedness checks and binary matroids";

  auto error = py::register_exception<Error>(m, "RminorError", PyExc_ValueError);
  py::register_exception<SearchBudgetExceeded>(m, "SearchBudgetExceeded", error.ptr());

  py::class_<LabeledMultigraph>(m, "Graph")
      .def(py::init<>())
      .def_static("from_pairs", &LabeledMultigraph::from_pairs, py::arg("n"), py::arg("pairs"))
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def_static("from_json", [](const std::string& s) { return graph_from_json(nlohmann::json::parse(s)); })
      .def_static("catalog", [](const std::string& name) { return catalog::build(name).graph; })
      .def("add_vertex", &LabeledMultigraph::add_vertex)
      .def("add_edge", &LabeledMultigraph::add_edge, py::arg("id"), py::arg("a"), py::arg("b"))
      .def_property_readonly("vertices", [](const LabeledMultigraph& g) {
        return std::vector<VertexId>(g.vertices().begin(), g.vertices().end());
      })
      .def_property_readonly("edges", [](const LabeledMultigraph& g) {
        std::vector<std::tuple<EdgeId, VertexId, VertexId>> out;
        for (const auto& [id, e] : g.edges()) out.emplace_back(id, e.a, e.b);
        return out;
      })
      .def("degree", &LabeledMultigraph::degree)
      .def("is_simple", &LabeledMultigraph::is_simple)
      .def("graph6", [](const LabeledMultigraph& g) { return to_graph6(g); })
      .def("json", [](const LabeledMultigraph& g) { return to_json(g).dump(); })
      .def("__len__", &LabeledMultigraph::num_vertices)
      .def("__eq__", [](const LabeledMultigraph& a, const LabeledMultigraph& b) { return a == b; })
      .def("__repr__", [](const LabeledMultigraph& g) {
        return "<Graph " + std::to_string(g.num_vertices()) + " vertices, " + std::to_string(g.num_edges()) +
               " edges>";
      });

  m.def("catalog_names", &catalog::names);
  m.def("contract_edge", &contract_edge);
  m.def("delete_edge", &delete_edge);
  m.def("simplify", [](const LabeledMultigraph& g) { return simplify(g).graph; });
  m.def("is_three_connected", &is_three_connected);
  m.def("vertex_connectivity", &vertex_connectivity);
  m.def("is_planar", &is_planar);
  m.def("triangles", &triangles);
  m.def("are_isomorphic", [](const LabeledMultigraph& a, const LabeledMultigraph& b) {
    return are_isomorphic(a, b).has_value();
  });

  m.def(
      "_find_minor",
      [](const LabeledMultigraph& host, const std::string& pattern, const std::set<EdgeId>& required,
         std::uint64_t node_cap) {
        return model_json(find_minor(host, catalog_pattern(pattern), required, options(node_cap)));
      },
      py::arg("host"), py::arg("pattern"), py::arg("required"), py::arg("node_cap"));
  m.def(
      "_find_family_minor",
      [](const LabeledMultigraph& host, const std::vector<std::string>& family, const std::set<EdgeId>& required,
         std::uint64_t node_cap) {
        return model_json(find_family_minor({host, family_of(family), required, std::nullopt}, options(node_cap)));
      },
      py::arg("host"), py::arg("family"), py::arg("required"), py::arg("node_cap"));
  m.def(
      "_preserve_triangle",
      [](const LabeledMultigraph& host, const std::array<EdgeId, 3>& t, const std::string& target,
         std::uint64_t node_cap) {
        if (target == "K5") return model_json(preserve_triangle_k5(host, t, options(node_cap)));
        if (target == "K33_11") return model_json(preserve_triangle_k331(host, t, options(node_cap)));
        throw Error("triangle target must be K5 or K33_11");
      },
      py::arg("host"), py::arg("triangle"), py::arg("target"), py::arg("node_cap"));
  m.def("_verify_model", [](const LabeledMultigraph& host, const std::string& certificate) {
    const auto v = verify_model(host, model_from_json(nlohmann::json::parse(certificate)));
    return std::make_pair(v.ok, v.diagnostic);
  });
  m.def("k5_iff_k331", [](const LabeledMultigraph& host) { return k5_iff_k331(host); });

  m.def(
      "_verify_two_rounded",
      [](const std::vector<std::string>& family, std::uint64_t node_cap) {
        return to_json(verify_two_rounded(family_of(family), options(node_cap))).dump();
      },
      py::arg("family"), py::arg("node_cap"));

  m.def("_r12_claims", [] { return to_json(verify_r12_claims()).dump(); });
  m.def("_matroid_has_minor", [](const std::string& host, const std::string& target, const std::set<int>& required) {
    const auto load = [](const std::string& s) {
      if (s == "r12") return r12();
      if (s == "r10") return r10();
      if (catalog::contains(s)) return cycle_matroid(catalog::build(s).graph);
      return matroid_from_json(nlohmann::json::parse(s));
    };
    const auto w = matroid_has_minor(load(host), load(target), required);
    return w.has_value();
  });
}
