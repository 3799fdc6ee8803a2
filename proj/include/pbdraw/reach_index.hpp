#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "pbdraw/decomposition.hpp"

namespace pbdraw {

// Compressed reachability index over a path decomposition: for each vertex u
// and path j, the lowest 1-based position on path j that u can reach (its own
// position on its own path). Everything at or after that position is
// reachable, everything before is not, so membership queries are one integer
// comparison. Storage is exactly n*k entries.
class ReachIndex {
 public:
  static constexpr int32_t kUnreachable = std::numeric_limits<int32_t>::max();

  ReachIndex() = default;
  ReachIndex(int n, int k) : n_(n), k_(k), table_(static_cast<size_t>(n) * k, kUnreachable) {}

  int n() const { return n_; }
  int k() const { return k_; }
  size_t table_entries() const { return table_.size(); }

  int32_t entry(int u, int path) const { return table_[static_cast<size_t>(u) * k_ + path]; }
  int32_t& entry(int u, int path) { return table_[static_cast<size_t>(u) * k_ + path]; }

  // Does u reach v (reflexively)? Throws std::out_of_range on bad ids.
  bool query(int u, int v) const;

  std::vector<int> path_of;  // per vertex, 0-based
  std::vector<int> pos_of;   // per vertex, 1-based

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<int32_t> table_;
};

// One sweep in reverse topological order: a vertex's row is the minimum of
// its successors' rows, plus its own position on its own path. O(k*(n+m)).
ReachIndex build_index(const DecompGraph& h, const TopoOrder& t);

// Text form: header "n k", then one line per vertex:
//   label path position entry_1 ... entry_k
// with paths and positions 1-based and unreachable entries written as "inf".
std::string serialize_reach_index(const ReachIndex& idx,
                                  const std::vector<std::string>& labels);

struct NamedReachIndex {
  ReachIndex index;
  std::vector<std::string> labels;
};

NamedReachIndex parse_reach_index(std::string_view text);

}  // namespace pbdraw
