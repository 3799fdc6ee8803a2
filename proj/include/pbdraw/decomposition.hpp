#pragma once

#include <cstdint>
#include <vector>

#include "pbdraw/graph.hpp"

namespace pbdraw {

enum class EdgeClass : uint8_t { path_edge, cross_edge };

// Vertex-disjoint paths covering every vertex; consecutive path entries are
// edges of the underlying graph. Singleton paths are allowed.
struct PathDecomposition {
  std::vector<std::vector<int>> paths;

  int k() const { return static_cast<int>(paths.size()); }
};

// Checks a candidate decomposition against the DAG and returns it. Throws
// DecompositionError naming the offending vertex or pair.
PathDecomposition validate_decomposition(const Dag& d,
                                         const std::vector<std::vector<int>>& candidate);

// Peels paths greedily: start at the smallest-id uncovered source, repeatedly
// follow the smallest-id uncovered out-neighbor. Fast, not minimal.
PathDecomposition greedy_decompose(const Dag& d);

// Minimum path cover via maximum bipartite matching (Hopcroft-Karp) on the
// edge split graph: k = n - |matching|. Deterministic; paths are listed by
// ascending start vertex id.
PathDecomposition min_path_cover(const Dag& d);

// The drawing graph H: the DAG minus same-path edges between non-consecutive
// vertices (those stay reachable along the path). Every surviving edge is
// classified as a path edge or a cross edge.
struct DecompGraph {
  int n = 0;
  int k = 0;
  std::vector<Edge> edges;
  std::vector<EdgeClass> edge_class;  // parallel to edges
  std::vector<int> path_of;           // 0-based path index per vertex
  std::vector<int> pos_of;            // 1-based position within its path
  std::vector<Edge> removed;          // same-path shortcut edges dropped here

  bool is_path_edge(int e) const { return edge_class[e] == EdgeClass::path_edge; }
  int cross_edge_count() const;
};

DecompGraph build_decomposition_graph(const Dag& d, const PathDecomposition& sp);

}  // namespace pbdraw
