#include "pbdraw/decomposition.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <unordered_set>

namespace pbdraw {

namespace {

uint64_t edge_key(int u, int v, int n) {
  return static_cast<uint64_t>(u) * static_cast<uint64_t>(n) + static_cast<uint64_t>(v);
}

}  // namespace

PathDecomposition validate_decomposition(const Dag& d,
                                         const std::vector<std::vector<int>>& candidate) {
  const Digraph& g = d.graph;
  std::unordered_set<uint64_t> edge_set;
  edge_set.reserve(g.edges.size() * 2);
  for (const Edge& e : g.edges) edge_set.insert(edge_key(e.u, e.v, g.n));

  std::vector<int> owner(g.n, -1);
  for (size_t i = 0; i < candidate.size(); ++i) {
    const auto& path = candidate[i];
    if (path.empty())
      throw DecompositionError("path " + std::to_string(i + 1) + " is empty");
    for (int v : path) {
      if (v < 0 || v >= g.n)
        throw DecompositionError("path " + std::to_string(i + 1) +
                                 " names vertex id " + std::to_string(v) +
                                 ", which is out of range");
      if (owner[v] >= 0)
        throw DecompositionError(
            "vertex " + g.label_of(v) + " appears in path " +
            std::to_string(owner[v] + 1) + " and again in path " + std::to_string(i + 1));
      owner[v] = static_cast<int>(i);
    }
    for (size_t j = 0; j + 1 < path.size(); ++j)
      if (!edge_set.count(edge_key(path[j], path[j + 1], g.n)))
        throw DecompositionError("consecutive pair (" + g.label_of(path[j]) + "," +
                                 g.label_of(path[j + 1]) + ") in path " +
                                 std::to_string(i + 1) + " is not an edge");
  }
  for (int v = 0; v < g.n; ++v)
    if (owner[v] < 0)
      throw DecompositionError("vertex " + g.label_of(v) + " is not covered by any path");

  return PathDecomposition{candidate};
}

PathDecomposition greedy_decompose(const Dag& d) {
  const Digraph& g = d.graph;
  auto adj = g.out_adjacency();  // neighbor lists come out id-sorted
  std::vector<int> uncovered_indeg(g.n, 0);
  for (const Edge& e : g.edges) ++uncovered_indeg[e.v];

  std::vector<char> covered(g.n, 0);
  std::priority_queue<int, std::vector<int>, std::greater<int>> sources;
  for (int v = 0; v < g.n; ++v)
    if (uncovered_indeg[v] == 0) sources.push(v);

  PathDecomposition sp;
  auto mark_covered = [&](int v) {
    covered[v] = 1;
    for (int w : adj[v])
      if (--uncovered_indeg[w] == 0 && !covered[w]) sources.push(w);
  };

  while (!sources.empty()) {
    int v = sources.top();
    sources.pop();
    if (covered[v]) continue;
    std::vector<int> path{v};
    mark_covered(v);
    for (;;) {
      int next = -1;
      for (int w : adj[path.back()])
        if (!covered[w]) {
          next = w;
          break;
        }
      if (next < 0) break;
      path.push_back(next);
      mark_covered(next);
    }
    sp.paths.push_back(std::move(path));
  }
  return sp;
}

namespace {

// Hopcroft-Karp on the split graph (left copy = edge sources, right copy =
// edge targets). All scans run in ascending id order for determinism.
std::vector<int> max_matching_successor(const Digraph& g) {
  constexpr int kInf = std::numeric_limits<int>::max();
  auto adj = g.out_adjacency();
  std::vector<int> match_right(g.n, -1);  // right vertex -> matched left
  std::vector<int> match_left(g.n, -1);   // left vertex -> matched right
  std::vector<int> dist(g.n);

  auto bfs = [&]() {
    std::queue<int> q;
    bool found = false;
    for (int u = 0; u < g.n; ++u) {
      if (match_left[u] < 0) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        int next = match_right[v];
        if (next < 0) {
          found = true;
        } else if (dist[next] == kInf) {
          dist[next] = dist[u] + 1;
          q.push(next);
        }
      }
    }
    return found;
  };

  auto dfs = [&](auto&& self, int u) -> bool {
    for (int v : adj[u]) {
      int next = match_right[v];
      if (next < 0 || (dist[next] == dist[u] + 1 && self(self, next))) {
        match_left[u] = v;
        match_right[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  while (bfs())
    for (int u = 0; u < g.n; ++u)
      if (match_left[u] < 0) dfs(dfs, u);

  return match_left;
}

}  // namespace

PathDecomposition min_path_cover(const Dag& d) {
  const Digraph& g = d.graph;
  std::vector<int> succ = max_matching_successor(g);
  std::vector<char> has_pred(g.n, 0);
  for (int u = 0; u < g.n; ++u)
    if (succ[u] >= 0) has_pred[succ[u]] = 1;

  PathDecomposition sp;
  for (int v = 0; v < g.n; ++v) {
    if (has_pred[v]) continue;
    std::vector<int> path;
    for (int cur = v; cur >= 0; cur = succ[cur]) path.push_back(cur);
    sp.paths.push_back(std::move(path));
  }
  return sp;
}

int DecompGraph::cross_edge_count() const {
  int c = 0;
  for (EdgeClass ec : edge_class)
    if (ec == EdgeClass::cross_edge) ++c;
  return c;
}

DecompGraph build_decomposition_graph(const Dag& d, const PathDecomposition& sp) {
  const Digraph& g = d.graph;
  DecompGraph h;
  h.n = g.n;
  h.k = sp.k();
  h.path_of.assign(g.n, -1);
  h.pos_of.assign(g.n, 0);
  for (int p = 0; p < sp.k(); ++p) {
    const auto& path = sp.paths[p];
    for (size_t i = 0; i < path.size(); ++i) {
      int v = path[i];
      if (v < 0 || v >= g.n || h.path_of[v] >= 0)
        throw DecompositionError("decomposition does not partition the vertices");
      h.path_of[v] = p;
      h.pos_of[v] = static_cast<int>(i) + 1;
    }
  }
  for (int v = 0; v < g.n; ++v)
    if (h.path_of[v] < 0)
      throw DecompositionError("vertex " + g.label_of(v) + " is not covered by any path");

  for (const Edge& e : g.edges) {
    if (h.path_of[e.u] == h.path_of[e.v]) {
      int gap = h.pos_of[e.v] - h.pos_of[e.u];
      if (gap <= 0)
        throw InvariantViolation("same-path edge (" + g.label_of(e.u) + "," +
                                 g.label_of(e.v) + ") runs against path order");
      if (gap == 1) {
        h.edges.push_back(e);
        h.edge_class.push_back(EdgeClass::path_edge);
      } else {
        h.removed.push_back(e);
      }
    } else {
      h.edges.push_back(e);
      h.edge_class.push_back(EdgeClass::cross_edge);
    }
  }
  return h;
}

}  // namespace pbdraw
