#include "doctest.h"

#include <random>
#include <set>

#include "helpers.hpp"
#include "pbdraw/layout.hpp"
#include "pbdraw/pipeline.hpp"
#include "pbdraw/random_dag.hpp"

using namespace pbdraw;
using namespace pbdraw::testing;

namespace {

const DrawnEdge& edge_of(const Layout& l, Edge uv) {
  for (const DrawnEdge& de : l.edges)
    if (de.uv == uv) return de;
  REQUIRE(false);
  static DrawnEdge dummy;
  return dummy;
}

}  // namespace

TEST_CASE("coordinates: even column per path, row equals topological position") {
  Fixture6 f = fixture6();
  Coords c = assign_coordinates(f.h, f.t);
  CHECK(c.pos[0] == Point{2, 1});
  CHECK(c.pos[3] == Point{4, 2});
  CHECK(c.pos[1] == Point{2, 3});
  CHECK(c.pos[4] == Point{4, 4});
  CHECK(c.pos[2] == Point{2, 5});
  CHECK(c.pos[5] == Point{6, 6});

  SUBCASE("a single path occupies column 2") {
    Digraph g = make_graph(3, {{0, 1}, {1, 2}});
    Dag d = condense(g);
    DecompGraph h = build_decomposition_graph(d, validate_decomposition(d, {{0, 1, 2}}));
    Coords cc = assign_coordinates(h, d.topo);
    for (int v = 0; v < 3; ++v) CHECK(cc.pos[v] == Point{2, v + 1});
  }
  SUBCASE("a non-topological order is rejected") {
    CHECK_THROWS_AS(assign_coordinates(f.h, TopoOrder::from_sequence({5, 4, 3, 2, 1, 0})),
                    std::invalid_argument);
  }
}

TEST_CASE("segment_hits_vertex finds interior vertices only") {
  Coords c;
  c.k = 3;
  c.pos = {{2, 1}, {4, 3}, {6, 5}};
  CHECK(segment_hits_vertex({2, 1}, {6, 5}, c) == 1);
  CHECK(!segment_hits_vertex({2, 1}, {4, 2}, c).has_value());
  // Endpoints do not count as hits.
  CHECK(!segment_hits_vertex({2, 1}, {4, 3}, c).has_value());
  // Near miss: (4,3) sits just off this segment's line.
  CHECK(!segment_hits_vertex({2, 1}, {5, 3}, c).has_value());
}

TEST_CASE("routing bends around an obstructing vertex") {
  // Path columns: [0,1] at x=2, [2,3] at x=4, [4] at x=6. The cross edge
  // (0,4) runs (2,1)->(6,5) straight through vertex 2 at (4,3), so it bends.
  Digraph g = make_graph(5, {{0, 1}, {2, 3}, {0, 4}});
  Dag d = condense(g);
  DecompGraph h =
      build_decomposition_graph(d, validate_decomposition(d, {{0, 1}, {2, 3}, {4}}));
  TopoOrder t = TopoOrder::from_sequence({0, 1, 2, 3, 4});
  Layout l = route_edges(h, assign_coordinates(h, t), apply_variant(h, 0));

  const DrawnEdge& bent = edge_of(l, {0, 4});
  REQUIRE(bent.bent());
  CHECK(bent.polyline == std::vector<Point>{{2, 1}, {3, 4}, {6, 5}});
  CHECK(edge_of(l, {0, 1}).polyline == std::vector<Point>{{2, 1}, {2, 2}});
}

TEST_CASE("routing draws straight whenever the segment is clear") {
  Fixture6 f = fixture6();
  Layout l = layout_variant(f.h, f.t, apply_variant(f.h, 0));
  CHECK(l.edges.size() == 7);
  for (const DrawnEdge& de : l.edges) CHECK(!de.bent());
  CHECK(l.bundles.empty());
}

TEST_CASE("a forced bend lands one row under the target, next to the source") {
  // Paths {0}, {1}, {2} with the jumping edge (0,2); vertex 1 also happens
  // to obstruct, so the forced and evasive bends coincide by construction.
  Digraph g = make_graph(3, {{0, 2}});
  Dag d = condense(g);
  DecompGraph h =
      build_decomposition_graph(d, validate_decomposition(d, {{0}, {1}, {2}}));
  TopoOrder t = TopoOrder::from_sequence({0, 1, 2});

  Layout forced = route_edges(h, assign_coordinates(h, t), apply_variant(h, 1));
  REQUIRE(forced.edges.size() == 1);
  CHECK(forced.edges[0].polyline == std::vector<Point>{{2, 1}, {3, 2}, {6, 3}});

  // Variant 0 bends the same edge for obstruction alone: same polyline.
  Layout evasive = route_edges(h, assign_coordinates(h, t), apply_variant(h, 0));
  CHECK(evasive.edges[0].polyline == forced.edges[0].polyline);
}

TEST_CASE("bends from one path into one target merge into a bundle") {
  // 0 and 1 share a path, both jump over the middle path into 3, so variant 1
  // forces two bends that coincide at (3,3).
  Digraph g = make_graph(4, {{0, 1}, {0, 3}, {1, 3}});
  Dag d = condense(g);
  DecompGraph h =
      build_decomposition_graph(d, validate_decomposition(d, {{0, 1}, {2}, {3}}));
  TopoOrder t = TopoOrder::from_sequence({0, 1, 2, 3});
  Layout l = layout_variant(h, t, apply_variant(h, 1));

  const DrawnEdge& e03 = edge_of(l, {0, 3});
  const DrawnEdge& e13 = edge_of(l, {1, 3});
  REQUIRE(e03.bent());
  REQUIRE(e13.bent());
  CHECK(e03.polyline[1] == e13.polyline[1]);
  CHECK(e03.polyline[1] == Point{3, 3});

  REQUIRE(l.bundles.size() == 1);
  CHECK(l.bundles[0].members.size() == 2);
  CHECK(l.bundles[0].bend == Point{3, 3});
  CHECK(l.bundles[0].target == 3);
  CHECK(e03.bundle_id == 0);
  CHECK(e13.bundle_id == 0);
  CHECK(edge_of(l, {0, 1}).bundle_id == -1);
}

TEST_CASE("layout geometry invariants hold on random instances") {
  std::mt19937 rng(55);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 49);
    Digraph g = gen_random_dag(n, 3.0 + static_cast<double>(rng() % 18), rng());
    PipelineOptions opt;
    opt.mode = trial % 2 ? DecomposeMode::minimum : DecomposeMode::greedy;
    opt.variant = static_cast<int>(rng() % 7);
    PipelineResult r = run_pipeline(g, opt);
    const Layout& l = r.layout;

    Coords coords;
    coords.k = l.k;
    coords.pos = l.vertex_pos;
    std::set<Point> vertex_points(l.vertex_pos.begin(), l.vertex_pos.end());
    CHECK(vertex_points.size() == l.vertex_pos.size());

    for (const DrawnEdge& de : l.edges) {
      // At most one bend, and no polyline segment passes through a vertex.
      CHECK(de.polyline.size() <= 3);
      CHECK(de.polyline.front() == l.vertex_pos[de.uv.u]);
      CHECK(de.polyline.back() == l.vertex_pos[de.uv.v]);
      for (size_t i = 0; i + 1 < de.polyline.size(); ++i)
        CHECK(!segment_hits_vertex(de.polyline[i], de.polyline[i + 1], coords));
      if (de.bent()) {
        Point bend = de.polyline[1];
        CHECK(bend.x % 2 == 1);  // bends live on odd columns
        CHECK(bend.y == l.vertex_pos[de.uv.v].y - 1);
        CHECK(std::abs(bend.x - l.vertex_pos[de.uv.u].x) == 1);
        CHECK(!vertex_points.count(bend));
      }
    }

    // Bend coincidence happens exactly for same source path + same target.
    std::vector<const DrawnEdge*> bent;
    for (const DrawnEdge& de : l.edges)
      if (de.bent()) bent.push_back(&de);
    for (size_t i = 0; i < bent.size(); ++i)
      for (size_t j = i + 1; j < bent.size(); ++j) {
        bool same_bend = bent[i]->polyline[1] == bent[j]->polyline[1];
        bool same_group = r.h.path_of[bent[i]->uv.u] == r.h.path_of[bent[j]->uv.u] &&
                          bent[i]->uv.v == bent[j]->uv.v;
        CHECK(same_bend == same_group);
        if (same_bend)
          CHECK((bent[i]->bundle_id >= 0 && bent[i]->bundle_id == bent[j]->bundle_id));
      }

    // Grid bound: at most 2k columns and n rows, bends included.
    int max_x = 0, max_y = 0;
    for (Point p : l.vertex_pos) {
      max_x = std::max(max_x, p.x);
      max_y = std::max(max_y, p.y);
    }
    for (const DrawnEdge* de : bent) {
      max_x = std::max(max_x, de->polyline[1].x);
      max_y = std::max(max_y, de->polyline[1].y);
    }
    CHECK(max_x <= 2 * l.k);
    CHECK(max_y <= l.n);

    // Re-running the pipeline reproduces the layout exactly.
    PipelineResult again = run_pipeline(g, opt);
    CHECK(again.layout.vertex_pos == l.vertex_pos);
    REQUIRE(again.layout.edges.size() == l.edges.size());
    for (size_t i = 0; i < l.edges.size(); ++i) {
      CHECK(again.layout.edges[i].uv == l.edges[i].uv);
      CHECK(again.layout.edges[i].polyline == l.edges[i].polyline);
      CHECK(again.layout.edges[i].bundle_id == l.edges[i].bundle_id);
    }
  }
}
