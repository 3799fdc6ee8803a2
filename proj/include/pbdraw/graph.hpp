#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pbdraw/errors.hpp"

namespace pbdraw {

struct Edge {
  int u = 0;
  int v = 0;

  auto operator<=>(const Edge&) const = default;
};

// Directed graph over dense vertex ids 0..n-1. Labels are display names;
// when the vector is empty vertices print as their id.
struct Digraph {
  int n = 0;
  std::vector<Edge> edges;          // kept sorted, unique, self-loop free
  std::vector<std::string> labels;  // empty, or exactly n entries

  std::string label_of(int v) const;
  std::vector<std::vector<int>> out_adjacency() const;
  std::vector<std::vector<int>> in_adjacency() const;
};

struct NormalizeReport {
  int duplicate_edges = 0;
  int self_loops = 0;
};

// Sorts the edge list, dropping self-loops and duplicates. Throws
// std::invalid_argument on out-of-range endpoints or bad label count.
NormalizeReport normalize(Digraph& g);

struct TopoOrder {
  std::vector<int> order;     // order[p-1] = vertex at position p
  std::vector<int> position;  // position[v] in 1..n

  // Builds the position table from a vertex sequence.
  static TopoOrder from_sequence(std::vector<int> seq);
};

// True when `t` is a permutation of g's vertices and every edge goes from a
// smaller to a larger position.
bool is_topological(const TopoOrder& t, const Digraph& g);

// Kahn's algorithm with a smallest-id-first tie break, so the result is
// deterministic. Positions are 1-based. Throws CycleError naming a cycle when
// the graph is not acyclic.
TopoOrder topo_sort(const Digraph& g);

// Condensation of a digraph: each strongly connected component collapses to
// one supernode. Supernodes are numbered by ascending smallest original
// member id, so acyclic input condenses to itself with an identity map.
struct Dag {
  Digraph graph;
  TopoOrder topo;                  // acyclicity certificate
  std::vector<int> supernode_map;  // original vertex -> supernode
  int original_n = 0;

  int n() const { return graph.n; }
};

// Merged supernode labels join the member labels with '+' in ascending
// original id order.
Dag condense(const Digraph& g);

// Dense reachability matrix with a reflexive diagonal.
class ClosureMatrix {
 public:
  ClosureMatrix() = default;
  explicit ClosureMatrix(int n);

  int n() const { return n_; }
  bool reaches(int u, int v) const {
    return (bits_[static_cast<size_t>(u) * row_words_ + v / 64] >> (v % 64)) & 1u;
  }
  void set(int u, int v) {
    bits_[static_cast<size_t>(u) * row_words_ + v / 64] |= uint64_t{1} << (v % 64);
  }

  bool operator==(const ClosureMatrix&) const = default;

 private:
  int n_ = 0;
  size_t row_words_ = 0;
  std::vector<uint64_t> bits_;
};

// Reachability oracle: one DFS per source, O(n*(n+m)). Works on cyclic
// graphs too. Intended for graphs up to a few thousand vertices; everything
// downstream is checked against it.
ClosureMatrix transitive_closure(const Digraph& g);

}  // namespace pbdraw
