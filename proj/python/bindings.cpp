// Python bindings for the drawing pipeline. Edges and points cross the
// boundary as plain tuples; everything else mirrors the C++ types.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbdraw/bench.hpp"
#include "pbdraw/decomposition.hpp"
#include "pbdraw/graph.hpp"
#include "pbdraw/io.hpp"
#include "pbdraw/layout.hpp"
#include "pbdraw/metrics.hpp"
#include "pbdraw/pipeline.hpp"
#include "pbdraw/random_dag.hpp"
#include "pbdraw/reach_index.hpp"
#include "pbdraw/render.hpp"
#include "pbdraw/variants.hpp"

namespace py = pybind11;
using namespace pbdraw;

namespace {

std::vector<std::pair<int, int>> edge_tuples(const std::vector<Edge>& edges) {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<std::pair<int, int>> point_tuples(const std::vector<Point>& pts) {
  std::vector<std::pair<int, int>> out;
  out.reserve(pts.size());
  for (const Point& p : pts) out.emplace_back(p.x, p.y);
  return out;
}

DecomposeMode parse_mode(const std::string& mode) {
  if (mode == "min") return DecomposeMode::minimum;
  if (mode == "greedy") return DecomposeMode::greedy;
  throw std::invalid_argument("mode must be 'min' or 'greedy', got '" + mode + "'");
}

}  // namespace

PYBIND11_MODULE(_pbdraw, m) {
  m.doc() = "Path-based hierarchical DAG drawing and reachability indexing";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DecompositionError>(m, "DecompositionError", PyExc_ValueError);
  py::register_exception<CycleError>(m, "CycleError", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  py::class_<Digraph>(m, "Digraph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges,
                       const std::vector<std::string>& labels) {
             Digraph g;
             g.n = n;
             for (auto [u, v] : edges) g.edges.push_back({u, v});
             g.labels = labels;
             normalize(g);
             return g;
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{},
           py::arg("labels") = std::vector<std::string>{})
      .def_readonly("n", &Digraph::n)
      .def_readonly("labels", &Digraph::labels)
      .def_property_readonly("edges", [](const Digraph& g) { return edge_tuples(g.edges); })
      .def("label_of", &Digraph::label_of, py::arg("v"))
      .def("__repr__", [](const Digraph& g) {
        return "<Digraph n=" + std::to_string(g.n) +
               " m=" + std::to_string(g.edges.size()) + ">";
      });

  py::class_<TopoOrder>(m, "TopoOrder")
      .def_readonly("order", &TopoOrder::order)
      .def_readonly("position", &TopoOrder::position);

  py::class_<Dag>(m, "Dag")
      .def_readonly("graph", &Dag::graph)
      .def_readonly("topo", &Dag::topo)
      .def_readonly("supernode_map", &Dag::supernode_map)
      .def_readonly("original_n", &Dag::original_n)
      .def_property_readonly("n", &Dag::n);

  py::class_<ClosureMatrix>(m, "ClosureMatrix")
      .def_property_readonly("n", &ClosureMatrix::n)
      .def("reaches", &ClosureMatrix::reaches, py::arg("u"), py::arg("v"))
      .def("__eq__", [](const ClosureMatrix& a, const ClosureMatrix& b) { return a == b; });

  py::class_<PathDecomposition>(m, "PathDecomposition")
      .def_readonly("paths", &PathDecomposition::paths)
      .def_property_readonly("k", &PathDecomposition::k);

  py::class_<DecompGraph>(m, "DecompGraph")
      .def_readonly("n", &DecompGraph::n)
      .def_readonly("k", &DecompGraph::k)
      .def_readonly("path_of", &DecompGraph::path_of)
      .def_readonly("pos_of", &DecompGraph::pos_of)
      .def_property_readonly("edges",
                             [](const DecompGraph& h) { return edge_tuples(h.edges); })
      .def_property_readonly("removed",
                             [](const DecompGraph& h) { return edge_tuples(h.removed); })
      .def("is_path_edge", &DecompGraph::is_path_edge, py::arg("e"))
      .def_property_readonly("cross_edge_count", &DecompGraph::cross_edge_count);

  py::class_<VariantDrawing>(m, "VariantDrawing")
      .def_readonly("variant_id", &VariantDrawing::variant_id)
      .def_property_readonly("drawn_edges", &VariantDrawing::drawn_edge_indices)
      .def_property_readonly("forced_bends",
                             [](const VariantDrawing& vd) {
                               std::vector<int> out;
                               for (size_t e = 0; e < vd.forced_bend.size(); ++e)
                                 if (vd.forced_bend[e]) out.push_back(static_cast<int>(e));
                               return out;
                             })
      .def_property_readonly("removed", [](const VariantDrawing& vd) {
        std::vector<std::pair<int, std::string>> out;
        for (const auto& r : vd.removed) {
          const char* why = "";
          switch (r.reason) {
            case RemovalReason::dominated_target: why = "dominated_target"; break;
            case RemovalReason::dominated_source: why = "dominated_source"; break;
            case RemovalReason::dominated_both: why = "dominated_both"; break;
            case RemovalReason::path_stripped: why = "path_stripped"; break;
          }
          out.emplace_back(r.edge, why);
        }
        return out;
      });

  py::class_<DrawnEdge>(m, "DrawnEdge")
      .def_readonly("edge", &DrawnEdge::edge)
      .def_readonly("bundle_id", &DrawnEdge::bundle_id)
      .def_property_readonly("uv",
                             [](const DrawnEdge& e) { return std::pair(e.uv.u, e.uv.v); })
      .def_property_readonly(
          "cls",
          [](const DrawnEdge& e) {
            return std::string(e.cls == EdgeClass::path_edge ? "path" : "cross");
          })
      .def_property_readonly("polyline",
                             [](const DrawnEdge& e) { return point_tuples(e.polyline); })
      .def("bent", &DrawnEdge::bent);

  py::class_<Bundle>(m, "Bundle")
      .def_readonly("source_path", &Bundle::source_path)
      .def_readonly("target", &Bundle::target)
      .def_readonly("members", &Bundle::members)
      .def_property_readonly("bend",
                             [](const Bundle& b) { return std::pair(b.bend.x, b.bend.y); });

  py::class_<Layout>(m, "Layout")
      .def_readonly("variant_id", &Layout::variant_id)
      .def_readonly("n", &Layout::n)
      .def_readonly("k", &Layout::k)
      .def_readonly("edges", &Layout::edges)
      .def_readonly("bundles", &Layout::bundles)
      .def_property_readonly(
          "vertex_pos", [](const Layout& lay) { return point_tuples(lay.vertex_pos); });

  py::class_<MetricsReport>(m, "MetricsReport")
      .def_readonly("edges_drawn", &MetricsReport::edges_drawn)
      .def_readonly("cross_edges_drawn", &MetricsReport::cross_edges_drawn)
      .def_readonly("bends", &MetricsReport::bends)
      .def_readonly("bent_edges", &MetricsReport::bent_edges)
      .def_readonly("bends_per_edge", &MetricsReport::bends_per_edge)
      .def_readonly("crossings", &MetricsReport::crossings)
      .def_readonly("area_width", &MetricsReport::area_width)
      .def_readonly("area_height", &MetricsReport::area_height)
      .def_readonly("elapsed_ms", &MetricsReport::elapsed_ms)
      .def("__repr__", [](const MetricsReport& r) {
        return "<MetricsReport edges=" + std::to_string(r.edges_drawn) +
               " bends=" + std::to_string(r.bends) +
               " crossings=" + std::to_string(r.crossings) + ">";
      });

  py::class_<ReachIndex>(m, "ReachIndex")
      .def_property_readonly("n", &ReachIndex::n)
      .def_property_readonly("k", &ReachIndex::k)
      .def_property_readonly("table_entries", &ReachIndex::table_entries)
      .def_readonly("path_of", &ReachIndex::path_of)
      .def_readonly("pos_of", &ReachIndex::pos_of)
      .def("entry",
           [](const ReachIndex& idx, int u, int path) {
             return static_cast<int64_t>(idx.entry(u, path));
           },
           py::arg("u"), py::arg("path"))
      .def("query", &ReachIndex::query, py::arg("u"), py::arg("v"));

  py::class_<PipelineResult>(m, "PipelineResult")
      .def_readonly("dag", &PipelineResult::dag)
      .def_readonly("decomposition", &PipelineResult::sp)
      .def_readonly("h", &PipelineResult::h)
      .def_readonly("drawing", &PipelineResult::vd)
      .def_readonly("layout", &PipelineResult::layout)
      .def_readonly("metrics", &PipelineResult::metrics);

  m.def("condense", &condense, py::arg("g"));
  m.def("topo_sort", &topo_sort, py::arg("g"));
  m.def("transitive_closure", &transitive_closure, py::arg("g"));
  m.def("validate_decomposition", &validate_decomposition, py::arg("dag"),
        py::arg("paths"));
  m.def("greedy_decompose", &greedy_decompose, py::arg("dag"));
  m.def("min_path_cover", &min_path_cover, py::arg("dag"));
  m.def("build_decomposition_graph", &build_decomposition_graph, py::arg("dag"),
        py::arg("decomposition"));
  m.def("apply_variant", &apply_variant, py::arg("h"), py::arg("variant"));
  m.def("layout_variant", &layout_variant, py::arg("h"), py::arg("topo"),
        py::arg("drawing"));
  m.def("compute_metrics", &compute_metrics, py::arg("layout"), py::arg("drawing"),
        py::arg("h"));
  m.def("build_index", &build_index, py::arg("h"), py::arg("topo"));
  m.def("gen_random_dag", &gen_random_dag, py::arg("n"), py::arg("completeness"),
        py::arg("seed"));
  m.def("gen_random_dag_edges", &gen_random_dag_edges, py::arg("n"), py::arg("m"),
        py::arg("seed"));

  m.def(
      "run_pipeline",
      [](const Digraph& g, int variant, const std::string& mode,
         const std::optional<std::vector<std::vector<int>>>& paths) {
        PipelineOptions opt;
        opt.variant = variant;
        opt.mode = parse_mode(mode);
        opt.paths = paths;
        return run_pipeline(g, opt);
      },
      py::arg("g"), py::arg("variant") = 0, py::arg("mode") = "min",
      py::arg("paths") = std::nullopt,
      "Condense, decompose, abstract, lay out, and measure in one call.");

  m.def(
      "parse_graph",
      [](const std::string& text) {
        ParsedGraph pg = parse_graph(text);
        return std::make_tuple(pg.graph, pg.report.duplicate_edges, pg.report.self_loops);
      },
      py::arg("text"), "Returns (graph, duplicate_edges_dropped, self_loops_dropped).");
  m.def("parse_paths", &parse_paths, py::arg("text"), py::arg("g"));
  m.def("emit_edge_list", &emit_edge_list, py::arg("g"));

  m.def(
      "emit_svg",
      [](const Layout& layout, const std::vector<std::string>& labels, int scale) {
        SvgOptions opt;
        opt.scale = scale;
        return emit_svg(layout, labels, opt);
      },
      py::arg("layout"), py::arg("labels"), py::arg("scale") = 40);
  m.def(
      "emit_layout_json",
      [](const Layout& layout, const DecompGraph& h, const std::vector<std::string>& labels,
         const MetricsReport& metrics) {
        return emit_layout_document(make_layout_document(layout, h, labels, metrics));
      },
      py::arg("layout"), py::arg("h"), py::arg("labels"), py::arg("metrics"));

  m.def("serialize_reach_index", &serialize_reach_index, py::arg("index"),
        py::arg("labels"));
  m.def(
      "parse_reach_index",
      [](const std::string& text) {
        NamedReachIndex named = parse_reach_index(text);
        return std::make_tuple(std::move(named.index), std::move(named.labels));
      },
      py::arg("text"), "Returns (index, labels).");
}
