#include "pbdraw/graph.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

namespace pbdraw {

std::string Digraph::label_of(int v) const {
  if (labels.empty()) return std::to_string(v);
  return labels[v];
}

std::vector<std::vector<int>> Digraph::out_adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : edges) adj[e.u].push_back(e.v);
  return adj;
}

std::vector<std::vector<int>> Digraph::in_adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : edges) adj[e.v].push_back(e.u);
  return adj;
}

NormalizeReport normalize(Digraph& g) {
  if (!g.labels.empty() && static_cast<int>(g.labels.size()) != g.n)
    throw std::invalid_argument("label count does not match vertex count");
  for (const Edge& e : g.edges)
    if (e.u < 0 || e.u >= g.n || e.v < 0 || e.v >= g.n)
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  NormalizeReport rep;
  auto loop = std::partition(g.edges.begin(), g.edges.end(),
                             [](const Edge& e) { return e.u != e.v; });
  rep.self_loops = static_cast<int>(g.edges.end() - loop);
  g.edges.erase(loop, g.edges.end());
  std::sort(g.edges.begin(), g.edges.end());
  auto dup = std::unique(g.edges.begin(), g.edges.end());
  rep.duplicate_edges = static_cast<int>(g.edges.end() - dup);
  g.edges.erase(dup, g.edges.end());
  return rep;
}

TopoOrder TopoOrder::from_sequence(std::vector<int> seq) {
  TopoOrder t;
  t.position.assign(seq.size(), 0);
  for (size_t i = 0; i < seq.size(); ++i) t.position[seq[i]] = static_cast<int>(i) + 1;
  t.order = std::move(seq);
  return t;
}

bool is_topological(const TopoOrder& t, const Digraph& g) {
  if (static_cast<int>(t.order.size()) != g.n ||
      static_cast<int>(t.position.size()) != g.n)
    return false;
  for (int p = 0; p < g.n; ++p) {
    int v = t.order[p];
    if (v < 0 || v >= g.n || t.position[v] != p + 1) return false;
  }
  for (const Edge& e : g.edges)
    if (t.position[e.u] >= t.position[e.v]) return false;
  return true;
}

namespace {

// Walks in-neighbors among the still-unprocessed vertices until one repeats,
// then returns the enclosed cycle in edge direction.
std::vector<int> extract_cycle(const Digraph& g, const std::vector<char>& processed) {
  std::vector<std::vector<int>> in_adj(g.n);
  for (const Edge& e : g.edges)
    if (!processed[e.u] && !processed[e.v]) in_adj[e.v].push_back(e.u);

  int start = 0;
  while (processed[start]) ++start;

  std::vector<int> seq;
  std::vector<int> seen_at(g.n, -1);
  int cur = start;
  while (seen_at[cur] < 0) {
    seen_at[cur] = static_cast<int>(seq.size());
    seq.push_back(cur);
    cur = *std::min_element(in_adj[cur].begin(), in_adj[cur].end());
  }
  // seq[j..] with j = seen_at[cur] loops back to cur; reversing it yields
  // vertices in edge direction.
  std::vector<int> cycle(seq.begin() + seen_at[cur], seq.end());
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

}  // namespace

TopoOrder topo_sort(const Digraph& g) {
  std::vector<int> indeg(g.n, 0);
  for (const Edge& e : g.edges) ++indeg[e.v];
  auto adj = g.out_adjacency();

  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < g.n; ++v)
    if (indeg[v] == 0) ready.push(v);

  TopoOrder t;
  t.order.reserve(g.n);
  t.position.assign(g.n, 0);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    t.order.push_back(v);
    t.position[v] = static_cast<int>(t.order.size());
    for (int w : adj[v])
      if (--indeg[w] == 0) ready.push(w);
  }

  if (static_cast<int>(t.order.size()) < g.n) {
    std::vector<char> processed(g.n, 0);
    for (int v : t.order) processed[v] = 1;
    std::vector<int> cycle = extract_cycle(g, processed);
    std::string msg = "graph contains a cycle:";
    for (int v : cycle) msg += " " + g.label_of(v);
    throw CycleError(msg, cycle);
  }
  return t;
}

namespace {

// Iterative Tarjan. Returns component ids in discovery order; the caller
// renumbers them.
std::pair<int, std::vector<int>> strong_components(int n,
                                                   const std::vector<std::vector<int>>& adj) {
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  int next_index = 0, comp_count = 0;

  struct Frame {
    int v;
    size_t child;
  };
  std::vector<Frame> frames;

  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    frames.push_back({root, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      int v = f.v;
      if (f.child == 0) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      bool descended = false;
      while (f.child < adj[v].size()) {
        int w = adj[v][f.child++];
        if (index[w] < 0) {
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = comp_count;
        } while (w != v);
        ++comp_count;
      }
      frames.pop_back();
      if (!frames.empty()) {
        int parent = frames.back().v;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return {comp_count, comp};
}

}  // namespace

Dag condense(const Digraph& g) {
  auto [comp_count, comp] = strong_components(g.n, g.out_adjacency());

  // Renumber components by ascending smallest member id.
  std::vector<int> min_member(comp_count, g.n);
  for (int v = 0; v < g.n; ++v) min_member[comp[v]] = std::min(min_member[comp[v]], v);
  std::vector<int> by_min(comp_count);
  for (int c = 0; c < comp_count; ++c) by_min[c] = c;
  std::sort(by_min.begin(), by_min.end(),
            [&](int a, int b) { return min_member[a] < min_member[b]; });
  std::vector<int> renum(comp_count);
  for (int rank = 0; rank < comp_count; ++rank) renum[by_min[rank]] = rank;

  Dag d;
  d.original_n = g.n;
  d.supernode_map.resize(g.n);
  for (int v = 0; v < g.n; ++v) d.supernode_map[v] = renum[comp[v]];

  d.graph.n = comp_count;
  for (const Edge& e : g.edges) {
    int cu = d.supernode_map[e.u], cv = d.supernode_map[e.v];
    if (cu != cv) d.graph.edges.push_back({cu, cv});
  }
  normalize(d.graph);

  if (!g.labels.empty()) {
    d.graph.labels.assign(comp_count, "");
    for (int v = 0; v < g.n; ++v) {
      std::string& l = d.graph.labels[d.supernode_map[v]];
      if (!l.empty()) l += "+";
      l += g.labels[v];
    }
  }

  d.topo = topo_sort(d.graph);
  return d;
}

ClosureMatrix::ClosureMatrix(int n)
    : n_(n), row_words_(static_cast<size_t>(n + 63) / 64), bits_(n * row_words_, 0) {}

ClosureMatrix transitive_closure(const Digraph& g) {
  ClosureMatrix c(g.n);
  auto adj = g.out_adjacency();
  std::vector<char> visited(g.n);
  std::vector<int> stack;
  for (int src = 0; src < g.n; ++src) {
    std::fill(visited.begin(), visited.end(), 0);
    stack.assign(1, src);
    visited[src] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (visited[w]) continue;
        visited[w] = 1;
        c.set(src, w);
        stack.push_back(w);
      }
    }
    c.set(src, src);
  }
  return c;
}

}  // namespace pbdraw
