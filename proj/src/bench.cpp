#include "pbdraw/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "pbdraw/io.hpp"
#include "pbdraw/random_dag.hpp"

namespace pbdraw {

namespace {

Digraph load_source(const BenchSource& src) {
  if (!src.file.empty()) return parse_graph(read_file(src.file)).graph;
  if (src.gen_edges >= 0) return gen_random_dag_edges(src.gen_n, src.gen_edges, src.gen_seed);
  return gen_random_dag(src.gen_n, src.gen_completeness, src.gen_seed);
}

}  // namespace

BenchResult run_bench(const std::vector<BenchSource>& sources,
                      const std::vector<int>& variants, DecomposeMode mode,
                      int repeats) {
  BenchResult result;
  for (const BenchSource& src : sources) {
    try {
      Digraph g = load_source(src);
      Dag dag = condense(g);
      PathDecomposition sp =
          mode == DecomposeMode::minimum ? min_path_cover(dag) : greedy_decompose(dag);
      for (int variant : variants) {
        double total_ms = 0.0;
        DecompGraph h;
        VariantDrawing vd;
        Layout layout;
        for (int rep = 0; rep < repeats; ++rep) {
          auto t0 = std::chrono::steady_clock::now();
          h = build_decomposition_graph(dag, sp);
          vd = apply_variant(h, variant);
          layout = layout_variant(h, dag.topo, vd);
          auto t1 = std::chrono::steady_clock::now();
          total_ms += std::chrono::duration<double, std::milli>(t1 - t0).count();
        }
        BenchRow row;
        row.graph = src.name;
        row.n = dag.n();
        row.m = static_cast<int>(dag.graph.edges.size());
        row.k = sp.k();
        row.variant = variant;
        row.metrics = compute_metrics(layout, vd, h);
        row.metrics.elapsed_ms = total_ms / repeats;
        result.rows.push_back(std::move(row));
      }
    } catch (const std::exception& e) {
      result.errors.push_back(src.name + ": " + e.what());
    }
  }
  return result;
}

std::string format_bench_table(const std::vector<BenchRow>& rows) {
  static const char* kHeader[] = {"graph",     "n",     "m",         "k",
                                  "variant",   "edges", "cross",     "bends",
                                  "crossings", "area",  "time_ms"};
  constexpr int kCols = 11;

  std::vector<std::vector<std::string>> cells;
  for (const BenchRow& r : rows) {
    char area[32], ms[32];
    std::snprintf(area, sizeof(area), "%dx%d", r.metrics.area_width, r.metrics.area_height);
    std::snprintf(ms, sizeof(ms), "%.3f", r.metrics.elapsed_ms);
    cells.push_back({r.graph, std::to_string(r.n), std::to_string(r.m),
                     std::to_string(r.k), std::to_string(r.variant),
                     std::to_string(r.metrics.edges_drawn),
                     std::to_string(r.metrics.cross_edges_drawn),
                     std::to_string(r.metrics.bends),
                     std::to_string(r.metrics.crossings), area, ms});
  }

  size_t width[kCols];
  for (int c = 0; c < kCols; ++c) {
    width[c] = std::string(kHeader[c]).size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }

  std::ostringstream out;
  auto emit_row = [&](const std::vector<std::string>& row) {
    for (int c = 0; c < kCols; ++c) {
      if (c) out << "  ";
      out << row[c];
      if (c + 1 < kCols) out << std::string(width[c] - row[c].size(), ' ');
    }
    out << '\n';
  };
  emit_row({kHeader, kHeader + kCols});
  for (const auto& row : cells) emit_row(row);
  return out.str();
}

std::string format_bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "graph,n,m,k,variant,edges_drawn,cross_edges_drawn,bends,bent_edges,"
         "crossings,area_width,area_height,time_ms\n";
  for (const BenchRow& r : rows) {
    char ms[32];
    std::snprintf(ms, sizeof(ms), "%.3f", r.metrics.elapsed_ms);
    out << r.graph << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.variant << ','
        << r.metrics.edges_drawn << ',' << r.metrics.cross_edges_drawn << ','
        << r.metrics.bends << ',' << r.metrics.bent_edges << ',' << r.metrics.crossings
        << ',' << r.metrics.area_width << ',' << r.metrics.area_height << ',' << ms
        << '\n';
  }
  return out.str();
}

}  // namespace pbdraw
