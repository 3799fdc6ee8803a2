#pragma once

#include <cstdint>
#include <vector>

#include "pbdraw/decomposition.hpp"

namespace pbdraw {

enum class RemovalReason : uint8_t {
  dominated_target,   // a lower-position target on the same path exists (variant 2 rule)
  dominated_source,   // a higher-position source on the same path exists (variant 3 rule)
  dominated_both,     // removed by both rules (variant 4)
  path_stripped,      // path edge dropped by a skeleton-free variant (5, 6)
};

// Which edges of H a variant draws, plus forced bends and removal records.
// All edge flags are indexed like DecompGraph::edges.
struct VariantDrawing {
  int variant_id = 0;
  std::vector<uint8_t> drawn;
  std::vector<uint8_t> forced_bend;

  struct Removal {
    int edge;  // index into DecompGraph::edges
    RemovalReason reason;
  };
  std::vector<Removal> removed;

  int drawn_count() const;
  std::vector<int> drawn_edge_indices() const;
};

// Cross edges spanning non-adjacent paths (path index gap > 1). These jump
// over at least one column of vertices.
std::vector<int> jumping_cross_edges(const DecompGraph& h);

// Variant 2: per source, per target path, keep only the edge to the
// lowest-position target; the rest are reachable through it.
VariantDrawing compute_v2(const DecompGraph& h);

// Variant 3: mirror of variant 2. Per target, per source path, keep only the
// edge from the highest-position source.
VariantDrawing compute_v3(const DecompGraph& h);

// Variant 4: keep edges kept by both the variant 2 and variant 3 rules,
// evaluated independently on the full H.
VariantDrawing compute_v4(const DecompGraph& h);

// Variants 5 and 6: drop the path edges from a variant 0 or 4 drawing,
// leaving cross edges only. Throws std::invalid_argument for other inputs.
VariantDrawing strip_path_edges(const VariantDrawing& vd, const DecompGraph& h);

// Dispatch for variant ids 0..6. Variant 0 draws everything; variant 1 draws
// everything and forces a bend on every jumping cross edge.
VariantDrawing apply_variant(const DecompGraph& h, int variant_id);

}  // namespace pbdraw
