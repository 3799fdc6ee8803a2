// Acceptance gate: nine checks, one PASS/FAIL line each, nonzero exit if any
// fails. Corpus parameters, seeds, and time limits are pinned here.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pbdraw/bench.hpp"
#include "pbdraw/decomposition.hpp"
#include "pbdraw/graph.hpp"
#include "pbdraw/layout.hpp"
#include "pbdraw/metrics.hpp"
#include "pbdraw/pipeline.hpp"
#include "pbdraw/random_dag.hpp"
#include "pbdraw/reach_index.hpp"
#include "pbdraw/variants.hpp"

#include "oracles.hpp"

namespace {

using namespace pbdraw;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Counts violations and keeps the first one's description for the FAIL line.
struct Check {
  long violations = 0;
  std::string first;

  void fail(const std::string& what) {
    if (violations == 0) first = what;
    ++violations;
  }
  bool ok() const { return violations == 0; }
};

int g_failures = 0;

void report(int id, const char* name, const Check& c, const std::string& pass_detail) {
  if (c.ok()) {
    std::printf("criterion %d (%s): PASS (%s)\n", id, name, pass_detail.c_str());
  } else {
    std::printf("criterion %d (%s): FAIL (%ld violation(s); first: %s)\n", id, name,
                c.violations, c.first.c_str());
    ++g_failures;
  }
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

// Exact point-on-closed-segment test, independent of the layout module.
bool on_segment(Point p, Point a, Point b) {
  int64_t cross = int64_t(b.x - a.x) * (p.y - a.y) - int64_t(b.y - a.y) * (p.x - a.x);
  if (cross != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

struct VariantRun {
  VariantDrawing vd;
  Layout layout;
};

// One corpus instance drawn with all seven variants under one decomposition.
struct Instance {
  std::string name;
  Dag dag;
  PathDecomposition sp;
  DecompGraph h;
  std::vector<VariantRun> runs;  // indexed by variant id
};

Instance make_instance(const Dag& dag, DecomposeMode mode, const std::string& name) {
  Instance inst;
  inst.name = name;
  inst.dag = dag;
  inst.sp = mode == DecomposeMode::minimum ? min_path_cover(dag) : greedy_decompose(dag);
  inst.h = build_decomposition_graph(inst.dag, inst.sp);
  for (int variant = 0; variant <= 6; ++variant) {
    VariantRun run;
    run.vd = apply_variant(inst.h, variant);
    run.layout = layout_variant(inst.h, inst.dag.topo, run.vd);
    inst.runs.push_back(std::move(run));
  }
  return inst;
}

// Criterion 1: every variant's drawing, with the path skeleton union'ed back
// in, has exactly the reachability of the input graph.
void check_closure(const Instance& inst, Check& c) {
  ClosureMatrix want = transitive_closure(inst.dag.graph);
  for (int variant = 0; variant <= 6; ++variant) {
    Digraph kept;
    kept.n = inst.h.n;
    for (int e : inst.runs[variant].vd.drawn_edge_indices())
      kept.edges.push_back(inst.h.edges[e]);
    for (size_t e = 0; e < inst.h.edges.size(); ++e)
      if (inst.h.is_path_edge(static_cast<int>(e)))
        kept.edges.push_back(inst.h.edges[static_cast<int>(e)]);
    normalize(kept);
    if (!(transitive_closure(kept) == want))
      c.fail(inst.name + " variant " + std::to_string(variant) + ": closure differs");
  }
}

// Criterion 2: segments avoid vertex interiors, bends coincide exactly for
// same-source-path same-target pairs, one bend per edge, 2k x n grid.
void check_geometry(const Instance& inst, Check& c) {
  for (int variant = 0; variant <= 6; ++variant) {
    const Layout& lay = inst.runs[variant].layout;
    std::string where = inst.name + " variant " + std::to_string(variant);

    for (const DrawnEdge& de : lay.edges) {
      if (de.polyline.size() > 3)
        c.fail(where + ": edge with " + std::to_string(de.polyline.size() - 2) + " bends");
      for (size_t s = 0; s + 1 < de.polyline.size(); ++s) {
        Point a = de.polyline[s], b = de.polyline[s + 1];
        for (int w = 0; w < lay.n; ++w) {
          Point p = lay.vertex_pos[w];
          if (p == a || p == b) continue;
          if (on_segment(p, a, b))
            c.fail(where + ": segment covers vertex " + inst.dag.graph.label_of(w));
        }
      }
    }

    std::vector<const DrawnEdge*> bent;
    for (const DrawnEdge& de : lay.edges)
      if (de.bent()) bent.push_back(&de);
    for (size_t i = 0; i < bent.size(); ++i)
      for (size_t j = i + 1; j < bent.size(); ++j) {
        bool same_bend = bent[i]->polyline[1] == bent[j]->polyline[1];
        bool same_group = inst.h.path_of[bent[i]->uv.u] == inst.h.path_of[bent[j]->uv.u] &&
                          bent[i]->uv.v == bent[j]->uv.v;
        if (same_bend != same_group)
          c.fail(where + ": bend sharing mismatches the source-path/target rule");
      }

    int max_x = 2 * inst.h.k, max_y = inst.h.n;
    auto in_grid = [&](Point p) {
      return 1 <= p.x && p.x <= max_x && 1 <= p.y && p.y <= max_y;
    };
    for (int v = 0; v < lay.n; ++v)
      if (!in_grid(lay.vertex_pos[v])) c.fail(where + ": vertex outside the 2k x n grid");
    for (const DrawnEdge& de : lay.edges)
      if (de.bent() && !in_grid(de.polyline[1]))
        c.fail(where + ": bend outside the 2k x n grid");
  }
}

// Criterion 3: the exact relations between the variants' drawn sets, forced
// bends, cross-edge sets, and bend points.
void check_algebra(const Instance& inst, Check& c) {
  auto drawn_set = [&](int variant) {
    std::set<int> s;
    for (int e : inst.runs[variant].vd.drawn_edge_indices()) s.insert(e);
    return s;
  };
  auto cross_drawn_set = [&](int variant) {
    std::set<int> s;
    for (int e : inst.runs[variant].vd.drawn_edge_indices())
      if (!inst.h.is_path_edge(e)) s.insert(e);
    return s;
  };
  auto bend_points = [&](int variant) {
    std::set<Point> s;
    for (const DrawnEdge& de : inst.runs[variant].layout.edges)
      if (de.bent()) s.insert(de.polyline[1]);
    return s;
  };

  if (drawn_set(0) != drawn_set(1)) c.fail(inst.name + ": drawn(V0) != drawn(V1)");

  std::set<int> forced;
  const VariantDrawing& v1 = inst.runs[1].vd;
  for (size_t e = 0; e < v1.forced_bend.size(); ++e)
    if (v1.forced_bend[e]) forced.insert(static_cast<int>(e));
  std::vector<int> jumping = jumping_cross_edges(inst.h);
  if (forced != std::set<int>(jumping.begin(), jumping.end()))
    c.fail(inst.name + ": forced bends of V1 differ from the jumping set");

  std::set<int> v2 = drawn_set(2), v3 = drawn_set(3);
  std::set<int> both;
  std::set_intersection(v2.begin(), v2.end(), v3.begin(), v3.end(),
                        std::inserter(both, both.begin()));
  if (drawn_set(4) != both) c.fail(inst.name + ": drawn(V4) != drawn(V2) & drawn(V3)");

  if (cross_drawn_set(5) != cross_drawn_set(0))
    c.fail(inst.name + ": cross(V5) != cross(V0)");
  if (cross_drawn_set(6) != cross_drawn_set(4))
    c.fail(inst.name + ": cross(V6) != cross(V4)");
  if (bend_points(5) != bend_points(0)) c.fail(inst.name + ": bends(V5) != bends(V0)");
  if (bend_points(6) != bend_points(4)) c.fail(inst.name + ": bends(V6) != bends(V4)");
}

// Criterion 4: every cross edge of H is witnessed in variant 4 by a kept edge
// between the same two paths that starts no earlier and lands no later.
void check_domination(const Instance& inst, Check& c) {
  std::vector<int> kept = inst.runs[4].vd.drawn_edge_indices();
  for (size_t e = 0; e < inst.h.edges.size(); ++e) {
    if (inst.h.is_path_edge(static_cast<int>(e))) continue;
    Edge uv = inst.h.edges[e];
    bool witnessed = false;
    for (int f : kept) {
      Edge ab = inst.h.edges[f];
      if (inst.h.path_of[ab.u] == inst.h.path_of[uv.u] &&
          inst.h.path_of[ab.v] == inst.h.path_of[uv.v] &&
          inst.h.pos_of[ab.u] >= inst.h.pos_of[uv.u] &&
          inst.h.pos_of[ab.v] <= inst.h.pos_of[uv.v]) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed)
      c.fail(inst.name + ": cross edge " + inst.dag.graph.label_of(uv.u) + "->" +
             inst.dag.graph.label_of(uv.v) + " has no variant 4 witness");
  }
}

}  // namespace

int main() {
  // Criteria 1-4 share one corpus: 200 random DAGs, n from 5 to 60,
  // completeness cycling 5/10/16 percent, drawn under both decompositions.
  const double kCompleteness[3] = {5.0, 10.0, 16.0};
  Check closure, geometry, algebra, domination, cover;
  int drawings = 0;
  auto corpus_start = Clock::now();
  for (int i = 0; i < 200; ++i) {
    int n = 5 + i * 56 / 200;
    Digraph g = gen_random_dag(n, kCompleteness[i % 3], 1000 + i);
    Dag dag = condense(g);
    Instance inst_min =
        make_instance(dag, DecomposeMode::minimum, "dag" + std::to_string(i) + "/min");
    Instance inst_greedy =
        make_instance(dag, DecomposeMode::greedy, "dag" + std::to_string(i) + "/greedy");
    for (const Instance* inst : {&inst_min, &inst_greedy}) {
      check_closure(*inst, closure);
      check_geometry(*inst, geometry);
      check_algebra(*inst, algebra);
      check_domination(*inst, domination);
      drawings += 7;
    }
    if (inst_min.sp.k() > inst_greedy.sp.k())
      cover.fail(inst_min.name + ": minimum cover larger than greedy");
  }
  double corpus_s = seconds_since(corpus_start);
  if (corpus_s >= 60.0) closure.fail(fmt("corpus took %.1f s, limit 60", corpus_s));

  report(1, "closure preservation", closure,
         std::to_string(drawings) + " drawings in " + fmt("%.1f", corpus_s) + " s");
  report(2, "geometry invariants", geometry,
         std::to_string(drawings) + " drawings checked");
  report(3, "variant algebra", algebra, "exact on every corpus instance");
  report(4, "one-cross-edge witness", domination, "every cross edge witnessed");

  // Criterion 5: minimum path cover equals exhaustive search on 100 DAGs with
  // n <= 8; greedy never beats it (also enforced on the corpus above).
  {
    const double kDensity[4] = {10.0, 25.0, 50.0, 75.0};
    for (int i = 0; i < 100; ++i) {
      int n = 1 + i % 8;
      Digraph g = gen_random_dag(n, kDensity[(i / 8) % 4], 3000 + i);
      Dag dag = condense(g);
      int want = pbdraw::testing::min_path_cover_oracle(dag.graph);
      int got = min_path_cover(dag).k();
      if (got != want)
        cover.fail("small dag" + std::to_string(i) + ": cover " + std::to_string(got) +
                   ", exhaustive search says " + std::to_string(want));
      if (got > greedy_decompose(dag).k())
        cover.fail("small dag" + std::to_string(i) + ": minimum cover larger than greedy");
    }
    report(5, "minimum path cover", cover, "100 exhaustive comparisons, n <= 8");
  }

  // Criterion 6: the reachability index answers exactly like the closure on
  // all n^2 pairs, stores exactly n*k entries, and stays under 5 s.
  {
    Check index_check;
    const double kDensity[3] = {3.0, 8.0, 15.0};
    for (int i = 0; i < 50; ++i) {
      int n = 4 + i * 196 / 49;
      Digraph g = gen_random_dag(n, kDensity[i % 3], 4000 + i);
      Dag dag = condense(g);
      std::string name = "index dag" + std::to_string(i);
      auto start = Clock::now();
      PathDecomposition sp = min_path_cover(dag);
      DecompGraph h = build_decomposition_graph(dag, sp);
      ReachIndex idx = build_index(h, dag.topo);
      ClosureMatrix want = transitive_closure(dag.graph);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (idx.query(u, v) != want.reaches(u, v)) {
            index_check.fail(name + ": query(" + dag.graph.label_of(u) + "," +
                             dag.graph.label_of(v) + ") disagrees with the closure");
            u = n;
            break;
          }
      double s = seconds_since(start);
      if (idx.table_entries() != static_cast<size_t>(n) * sp.k())
        index_check.fail(name + ": table is not n*k entries");
      if (s >= 5.0) index_check.fail(name + ": " + fmt("%.2f", s) + " s, limit 5");
    }
    report(6, "reach index oracle", index_check, "50 DAGs up to n=200, all pairs");
  }

  // Criterion 7: the production crossing counter and the rational-arithmetic
  // reference agree exactly.
  {
    Check crossings;
    const double kDensity[3] = {8.0, 16.0, 25.0};
    for (int i = 0; i < 100; ++i) {
      int n = 5 + i * 35 / 99;
      Digraph g = gen_random_dag(n, kDensity[i % 3], 5000 + i);
      Dag dag = condense(g);
      PathDecomposition sp = i % 2 ? greedy_decompose(dag) : min_path_cover(dag);
      DecompGraph h = build_decomposition_graph(dag, sp);
      VariantDrawing vd = apply_variant(h, i % 7);
      Layout lay = layout_variant(h, dag.topo, vd);
      int got = count_crossings(lay);
      int want = pbdraw::testing::naive_crossing_count(lay);
      if (got != want)
        crossings.fail("layout " + std::to_string(i) + ": " + std::to_string(got) +
                       " vs reference " + std::to_string(want));
    }
    report(7, "crossing counter agreement", crossings, "100 layouts, two counters");
  }

  // Criterion 8: benchmark methodology on five pinned density profiles; the
  // variant trends must match, absolute numbers are not targets.
  {
    Check bench_check;
    const std::pair<int, int64_t> kProfiles[5] = {
        {30, 69}, {50, 61}, {50, 121}, {100, 246}, {100, 494}};
    std::vector<BenchSource> sources;
    for (auto [n, m] : kProfiles) {
      BenchSource src;
      src.name = "profile" + std::to_string(n) + "/" + std::to_string(m);
      src.gen_n = n;
      src.gen_edges = m;
      src.gen_seed = 1;
      sources.push_back(std::move(src));
    }
    auto start = Clock::now();
    BenchResult result =
        run_bench(sources, {0, 1, 2, 3, 4, 5, 6}, DecomposeMode::minimum, 5);
    double s = seconds_since(start);
    for (const std::string& err : result.errors) bench_check.fail("bench error: " + err);
    if (result.rows.size() != 35)
      bench_check.fail(std::to_string(result.rows.size()) + " rows, expected 35");
    if (s >= 10.0) bench_check.fail(fmt("%.1f s, limit 10", s));

    for (size_t base = 0; base + 7 <= result.rows.size(); base += 7) {
      auto row = [&](int variant) -> const BenchRow& { return result.rows[base + variant]; };
      const std::string& graph = row(0).graph;
      int e0 = row(0).metrics.edges_drawn, e2 = row(2).metrics.edges_drawn;
      int e3 = row(3).metrics.edges_drawn, e4 = row(4).metrics.edges_drawn;
      if (!(e0 >= e2 && e2 >= e4 && e0 >= e3 && e3 >= e4))
        bench_check.fail(graph + ": edges drawn not monotone across V0/V2/V3/V4");
      if (e4 < e0 && !(row(4).metrics.crossings < row(0).metrics.crossings))
        bench_check.fail(graph + ": variant 4 abstracted edges without fewer crossings");
      if (e4 == e0) bench_check.fail(graph + ": profile has no abstractable edge");
    }
    report(8, "benchmark methodology", bench_check,
           "35 rows in " + fmt("%.1f", s) + " s, trends hold");
  }

  // Criterion 9: layout plus variant 4 plus index build at n=10000, m=100000
  // in under 10 s. Nothing quadratic in n is touched on this path.
  {
    Check scale;
    auto start = Clock::now();
    Digraph g = gen_random_dag_edges(10000, 100000, 42);
    Dag dag = condense(g);
    PathDecomposition sp = min_path_cover(dag);
    DecompGraph h = build_decomposition_graph(dag, sp);
    VariantDrawing vd = apply_variant(h, 4);
    Layout lay = layout_variant(h, dag.topo, vd);
    ReachIndex idx = build_index(h, dag.topo);
    double s = seconds_since(start);
    if (s >= 10.0) scale.fail(fmt("%.2f s, limit 10", s));
    if (idx.table_entries() != static_cast<size_t>(h.n) * h.k)
      scale.fail("index table is not n*k entries");
    if (lay.n != 10000) scale.fail("layout lost vertices");
    report(9, "scale smoke", scale,
           "n=10000 m=100000 k=" + std::to_string(h.k) + " in " + fmt("%.2f", s) + " s");
  }

  if (g_failures) {
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("acceptance: all 9 criteria passed\n");
  return 0;
}
