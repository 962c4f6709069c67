// Python bindings for the core operations: graph construction and parsing,
// A_alpha spectra, bounds, extremal families, and small-order enumeration.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "alphax/bounds.hpp"
#include "alphax/canonical.hpp"
#include "alphax/extremal.hpp"
#include "alphax/families.hpp"
#include "alphax/graph.hpp"
#include "alphax/spectra.hpp"

namespace py = pybind11;
using namespace alphax;

namespace {

py::dict report_to_dict(const ExtremalReport& r) {
  py::dict d;
  d["alpha"] = r.alpha;
  d["cycle_filter"] = r.cycle_filter ? py::cast(*r.cycle_filter) : py::none();
  d["graphs_enumerated"] = r.graphs_enumerated;
  d["max_radius"] = r.max_radius;
  d["tie_count"] = r.tie_count;
  d["tie_class_count"] = r.tie_classes.size();
  d["witness_edges"] = r.witness_edges;
  d["witness_order"] = r.witness_order;
  d["runner_up"] = r.runner_up;
  return d;
}

}  // namespace

PYBIND11_MODULE(alphax, m) {
  m.doc() = "A_alpha spectral tools for tricyclic graphs with pendant vertices";

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, std::vector<Edge>>(), py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("degree", &Graph::degree)
      .def_property_readonly("degrees", &Graph::degrees)
      .def_property_readonly("max_degree", &Graph::max_degree)
      .def_property_readonly("edges", [](const Graph& g) { return g.edges(); })
      .def("has_edge", &Graph::has_edge)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) +
               ", m=" + std::to_string(g.size()) + ")";
      });

  m.def("parse_edge_list", &parse_edge_list);
  m.def("format_edge_list", &format_edge_list);
  m.def("is_connected", &is_connected);
  m.def("pendant_count", &pendant_count);
  m.def("is_tricyclic", &is_tricyclic);
  m.def("count_cycles", &count_cycles);
  m.def("cycle_class", &cycle_class);
  m.def("subdivide_edge", &subdivide_edge);
  m.def("relocate_neighbors", &relocate_neighbors);
  m.def("attach_pendant_paths", &attach_pendant_paths);

  m.def("canonical_form", [](const Graph& g) {
    const std::vector<uint8_t> bytes = canonical_form(g);
    return py::bytes(std::string(bytes.begin(), bytes.end()));
  });
  m.def("are_isomorphic", &are_isomorphic);

  m.def(
      "a_alpha_matrix",
      [](const Graph& g, double alpha) {
        const SymMatrix mm = build_a_alpha(g, alpha);
        std::vector<std::vector<double>> rows(mm.dim(),
                                              std::vector<double>(mm.dim()));
        for (int i = 0; i < mm.dim(); ++i)
          for (int j = 0; j < mm.dim(); ++j) rows[i][j] = mm.at(i, j);
        return rows;
      },
      py::arg("g"), py::arg("alpha"));

  m.def(
      "alpha_spectral_radius",
      [](const Graph& g, double alpha) {
        return alpha_spectral_radius(g, alpha).radius;
      },
      py::arg("g"), py::arg("alpha"));
  m.def(
      "perron_vector",
      [](const Graph& g, double alpha) {
        return alpha_spectral_radius(g, alpha).perron;
      },
      py::arg("g"), py::arg("alpha"));
  m.def("signless_laplacian_radius", &signless_laplacian_radius);
  m.def(
      "full_spectrum",
      [](const Graph& g, double alpha) {
        return full_spectrum_oracle(build_a_alpha(g, alpha));
      },
      py::arg("g"), py::arg("alpha"));

  m.def(
      "lower_bound_maxdeg",
      [](int max_degree, double alpha) {
        return lower_bound_maxdeg(max_degree, alpha);
      },
      py::arg("max_degree"), py::arg("alpha"));
  m.def(
      "upper_bound_degree_mean",
      [](const Graph& g, double alpha) {
        return upper_bound_degree_mean(g, alpha);
      },
      py::arg("g"), py::arg("alpha"));
  m.def(
      "upper_bound_sq",
      [](const Graph& g, double alpha) { return upper_bound_sq(g, alpha); },
      py::arg("g"), py::arg("alpha"));
  m.def(
      "inequality_chain",
      [](int k, double alpha) {
        py::list rows;
        for (const auto& r : inequality_chain(k, alpha)) {
          py::dict d;
          d["name"] = r.name;
          d["lhs"] = r.lhs;
          d["rhs"] = r.rhs;
          d["strict"] = r.strict;
          d["holds"] = r.holds;
          rows.append(d);
        }
        return rows;
      },
      py::arg("k"), py::arg("alpha"));

  m.def("nearly_equal_lengths", &nearly_equal_lengths);
  m.def(
      "construct_family",
      [](const std::string& family, int n, int k) {
        return construct_family({parse_family(family), n, k});
      },
      py::arg("family"), py::arg("n"), py::arg("k"));
  m.def(
      "family_max_degree",
      [](const std::string& family, int k) {
        return family_max_degree(parse_family(family), k);
      },
      py::arg("family"), py::arg("k"));

  m.def(
      "enumerate_tricyclic",
      [](int n, std::optional<int> pendants, std::optional<int> cycle_filter) {
        EnumerationQuery q;
        q.order = n;
        q.pendants = pendants;
        q.cycle_filter = cycle_filter;
        std::vector<Graph> out;
        enumerate_tricyclic(q, [&](const Graph& g) { out.push_back(g); });
        return out;
      },
      py::arg("n"), py::arg("pendants") = std::nullopt,
      py::arg("cycle_filter") = std::nullopt);
  m.def(
      "argmax_radius",
      [](int n, std::optional<int> pendants, std::optional<int> cycle_filter,
         double alpha, int jobs) {
        EnumerationQuery q;
        q.order = n;
        q.pendants = pendants;
        q.cycle_filter = cycle_filter;
        return report_to_dict(argmax_radius(q, alpha, jobs));
      },
      py::arg("n"), py::arg("pendants"), py::arg("cycle_filter"),
      py::arg("alpha"), py::arg("jobs") = 1);
}
