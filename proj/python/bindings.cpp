#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orichrome/bounds.hpp"
#include "orichrome/error.hpp"
#include "orichrome/exact.hpp"
#include "orichrome/full_target.hpp"
#include "orichrome/generate.hpp"
#include "orichrome/graph.hpp"
#include "orichrome/graph_io.hpp"
#include "orichrome/pipeline.hpp"
#include "orichrome/target.hpp"

namespace py = pybind11;
using namespace orichrome;

namespace {

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

nlohmann::json from_python(const py::object& o) {
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

py::dict solve_to_dict(const SolveResult& r) {
  py::dict d;
  d["value"] = r.value ? py::cast(*r.value) : py::none();
  d["witness"] = r.witness;
  d["nodes"] = r.nodes_explored;
  return d;
}

std::vector<std::pair<int, int>> arc_pairs(const OrientedGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Arc& a : g.arcs()) out.emplace_back(a.from, a.to);
  return out;
}

OrientedGraph graph_from_pairs(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<Arc> list;
  list.reserve(arcs.size());
  for (const auto& [u, v] : arcs) list.push_back({u, v});
  return OrientedGraph::from_arcs(n, list);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Oriented colouring: exact oracles, full targets, surface colouring and genus bounds";

  static py::handle error_type = py::exception<Error>(m, "Error", PyExc_RuntimeError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error_type)(e.what());
      inst.attr("code") = error_code_name(e.code());
      PyErr_SetObject(error_type.ptr(), inst.ptr());
    }
  });

  py::class_<OrientedGraph>(m, "OrientedGraph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init(&graph_from_pairs), py::arg("n"), py::arg("arcs"))
      .def_static("parse", [](const std::string& text) { return parse_graph(text); }, py::arg("text"))
      .def("add_arc", &OrientedGraph::add_arc)
      .def("has_arc", &OrientedGraph::has_arc)
      .def("degree", &OrientedGraph::degree)
      .def_property_readonly("order", &OrientedGraph::order)
      .def_property_readonly("size", &OrientedGraph::size)
      .def("arcs", &arc_pairs)
      .def("to_edge_list", &serialize_edge_list)
      .def("__eq__", [](const OrientedGraph& a, const OrientedGraph& b) { return a == b; })
      .def("__repr__", [](const OrientedGraph& g) {
        return "OrientedGraph(n=" + std::to_string(g.order()) + ", arcs=" + std::to_string(g.size()) + ")";
      });

  m.def("generate", &generate, py::arg("kind"), py::arg("params") = std::vector<int>{}, py::arg("seed") = 0);
  m.def("generator_kinds", &generator_kinds);
  m.def("is_oriented_clique", &is_oriented_clique);
  m.def("degeneracy", [](const OrientedGraph& g) { return degeneracy_ordering(g).degeneracy; });

  m.def(
      "oriented_chromatic",
      [](const OrientedGraph& g, int k_max) {
        const SolveResult r = exact_oriented_chromatic(g, k_max);
        py::dict d = solve_to_dict(r);
        d["target_arcs"] = arc_pairs(r.target);
        return d;
      },
      py::arg("graph"), py::arg("k_max") = kMaxTournamentOrder);
  m.def("two_dipath_chromatic", [](const OrientedGraph& g) { return solve_to_dict(exact_two_dipath(g)); });
  m.def(
      "min_edge_oriented_clique",
      [](int n, int budget, bool witness_mode, std::uint64_t seed) {
        const CliqueSearchResult r = min_edge_oriented_clique(
            n, budget, witness_mode ? CliqueSearchMode::kWitness : CliqueSearchMode::kExhaustive, seed);
        py::dict d;
        d["arcs"] = r.arcs ? py::cast(*r.arcs) : py::none();
        d["witness"] = r.found() ? py::cast(r.witness) : py::none();
        return d;
      },
      py::arg("n"), py::arg("edge_budget"), py::arg("witness_mode") = false, py::arg("seed") = 0);

  m.def("full_class_size", &full_class_size);
  m.def(
      "sample_full",
      [](int k, int d, std::uint64_t seed, std::optional<int> class_size) {
        const SampleReport r = sample_full(k, d, seed, {}, class_size);
        py::dict out = to_python(target_to_json(*r.target));
        out["attempts"] = r.attempts;
        return out;
      },
      py::arg("k"), py::arg("d"), py::arg("seed") = 0, py::arg("class_size") = py::none());
  m.def(
      "verify_full",
      [](const py::object& target) {
        FullTarget t = target_from_json(from_python(target));
        const FullnessReport r = verify_full(t);
        py::dict out;
        out["verified"] = r.full;
        out["checks"] = r.checks;
        if (r.failure) {
          py::dict f;
          f["class"] = r.failure->cls;
          f["subset"] = r.failure->subset;
          f["pattern"] = r.failure->pattern.entries;
          out["failure"] = f;
        } else {
          out["failure"] = py::none();
        }
        return out;
      },
      py::arg("target"));
  m.def(
      "minimal_full_n",
      [](int k, int d, int n_cap) {
        const MinimalFullReport r = minimal_full_n(k, d, n_cap);
        py::dict out;
        out["N"] = r.class_size ? py::cast(*r.class_size) : py::none();
        out["refuted"] = r.refuted;
        out["witness"] = r.witness ? to_python(target_to_json(*r.witness)) : py::none();
        return out;
      },
      py::arg("k"), py::arg("d"), py::arg("n_cap") = 6);

  m.def(
      "colour_surface_graph",
      [](const OrientedGraph& g, int genus, std::uint64_t seed, bool debug) {
        LazyTarget target = LazyTarget::for_genus(std::max(genus, 2), seed);
        const PipelineResult r = colour_surface_graph(g, genus, target, {debug, false});
        py::dict out = to_python(pipeline_result_to_json(r));
        py::list images;
        for (const auto& img : r.hom.image) images.append(py::make_tuple(img->cls, img->index));
        out["images"] = images;
        return out;
      },
      py::arg("graph"), py::arg("genus"), py::arg("seed") = 0, py::arg("debug") = false);

  m.def("lambert_w0", &lambert_w0);
  m.def("chi_lower_bound", [](long long g) { return chi_lower_bound(g).bound_value; });
  m.def("chi_upper_bound", [](long long g) {
    const BoundReport r = chi_upper_bound(g);
    return py::make_tuple(*r.intermediate, r.bound_value);
  });
  m.def("extremal_clique_order", &extremal_clique_order);
  m.def("genus_upper_from_edges", [](long long n, long long e) { return genus_upper_from_edges(n, e).g; });
  m.def("bounds_csv_row", &bounds_csv_row);
}
