#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pbdraw/decomposition.hpp"
#include "pbdraw/graph.hpp"

namespace pbdraw::testing {

inline Digraph make_graph(int n, std::initializer_list<std::pair<int, int>> edges,
                          bool numbered_labels = false) {
  Digraph g;
  g.n = n;
  for (auto [u, v] : edges) g.edges.push_back({u, v});
  if (numbered_labels) {
    g.labels.resize(n);
    for (int v = 0; v < n; ++v) g.labels[v] = std::to_string(v + 1);
  }
  normalize(g);
  return g;
}

// Six-vertex worked example used across the suites. Labels "1".."6";
// paths (by label): [1,2,3], [4,5], [6]; cross edges (1,4), (1,5), (2,5),
// (4,3); vertex 6 is isolated.
struct Fixture6 {
  Dag dag;
  PathDecomposition sp;
  DecompGraph h;
  TopoOrder t;  // the order (1,4,2,5,3,6), supplied rather than canonical
};

inline Fixture6 fixture6() {
  Fixture6 f;
  Digraph g = make_graph(
      6, {{0, 1}, {1, 2}, {3, 4}, {0, 3}, {0, 4}, {1, 4}, {3, 2}}, true);
  f.dag = condense(g);
  f.sp = validate_decomposition(f.dag, {{0, 1, 2}, {3, 4}, {5}});
  f.h = build_decomposition_graph(f.dag, f.sp);
  f.t = TopoOrder::from_sequence({0, 3, 1, 4, 2, 5});
  return f;
}

// Arbitrary digraph, cycles allowed. For exercising condense and closure.
inline Digraph random_digraph(int n, int m, std::mt19937& rng) {
  Digraph g;
  g.n = n;
  for (int i = 0; i < m; ++i) {
    int u = static_cast<int>(rng() % n);
    int v = static_cast<int>(rng() % n);
    if (u != v) g.edges.push_back({u, v});
  }
  normalize(g);
  return g;
}

}  // namespace pbdraw::testing
