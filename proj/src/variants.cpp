#include "pbdraw/variants.hpp"

#include <algorithm>
#include <stdexcept>

namespace pbdraw {

int VariantDrawing::drawn_count() const {
  int c = 0;
  for (uint8_t f : drawn) c += f;
  return c;
}

std::vector<int> VariantDrawing::drawn_edge_indices() const {
  std::vector<int> idx;
  for (size_t e = 0; e < drawn.size(); ++e)
    if (drawn[e]) idx.push_back(static_cast<int>(e));
  return idx;
}

std::vector<int> jumping_cross_edges(const DecompGraph& h) {
  std::vector<int> idx;
  for (size_t e = 0; e < h.edges.size(); ++e)
    if (std::abs(h.path_of[h.edges[e].u] - h.path_of[h.edges[e].v]) > 1)
      idx.push_back(static_cast<int>(e));
  return idx;
}

namespace {

VariantDrawing draw_all(const DecompGraph& h, int variant_id) {
  VariantDrawing vd;
  vd.variant_id = variant_id;
  vd.drawn.assign(h.edges.size(), 1);
  vd.forced_bend.assign(h.edges.size(), 0);
  return vd;
}

// Shared core of the variant 2 / variant 3 rules. For each `anchor` vertex
// (source for v2, target for v3), the edges toward each opposite path keep
// only the extreme endpoint: lowest target position (v2) or highest source
// position (v3). Path edges are their path's only same-path candidate, so
// they always survive.
VariantDrawing keep_extreme(const DecompGraph& h, bool per_source) {
  VariantDrawing vd;
  vd.variant_id = per_source ? 2 : 3;
  vd.drawn.assign(h.edges.size(), 1);
  vd.forced_bend.assign(h.edges.size(), 0);

  std::vector<std::vector<int>> edges_at(h.n);
  for (size_t e = 0; e < h.edges.size(); ++e)
    edges_at[per_source ? h.edges[e].u : h.edges[e].v].push_back(static_cast<int>(e));

  std::vector<int> best(h.k);
  std::vector<int> stamp(h.k, -1);
  for (int anchor = 0; anchor < h.n; ++anchor) {
    for (int e : edges_at[anchor]) {
      int other = per_source ? h.edges[e].v : h.edges[e].u;
      int p = h.path_of[other];
      int pos = h.pos_of[other];
      if (stamp[p] != anchor) {
        stamp[p] = anchor;
        best[p] = pos;
      } else if (per_source ? pos < best[p] : pos > best[p]) {
        best[p] = pos;
      }
    }
    for (int e : edges_at[anchor]) {
      int other = per_source ? h.edges[e].v : h.edges[e].u;
      if (h.pos_of[other] != best[h.path_of[other]]) {
        vd.drawn[e] = 0;
        vd.removed.push_back({e, per_source ? RemovalReason::dominated_target
                                            : RemovalReason::dominated_source});
      }
    }
  }
  std::sort(vd.removed.begin(), vd.removed.end(),
            [](const auto& a, const auto& b) { return a.edge < b.edge; });
  return vd;
}

}  // namespace

VariantDrawing compute_v2(const DecompGraph& h) { return keep_extreme(h, true); }

VariantDrawing compute_v3(const DecompGraph& h) { return keep_extreme(h, false); }

VariantDrawing compute_v4(const DecompGraph& h) {
  VariantDrawing v2 = compute_v2(h);
  VariantDrawing v3 = compute_v3(h);
  VariantDrawing vd;
  vd.variant_id = 4;
  vd.drawn.assign(h.edges.size(), 0);
  vd.forced_bend.assign(h.edges.size(), 0);
  for (size_t e = 0; e < h.edges.size(); ++e) {
    bool in2 = v2.drawn[e], in3 = v3.drawn[e];
    if (in2 && in3) {
      vd.drawn[e] = 1;
    } else {
      RemovalReason r = !in2 && !in3  ? RemovalReason::dominated_both
                        : !in2        ? RemovalReason::dominated_target
                                      : RemovalReason::dominated_source;
      vd.removed.push_back({static_cast<int>(e), r});
    }
  }
  return vd;
}

VariantDrawing strip_path_edges(const VariantDrawing& vd, const DecompGraph& h) {
  if (vd.variant_id != 0 && vd.variant_id != 4)
    throw std::invalid_argument("path edges can only be stripped from variant 0 or 4");
  VariantDrawing out = vd;
  out.variant_id = vd.variant_id == 0 ? 5 : 6;
  for (size_t e = 0; e < h.edges.size(); ++e)
    if (out.drawn[e] && h.is_path_edge(static_cast<int>(e))) {
      out.drawn[e] = 0;
      out.removed.push_back({static_cast<int>(e), RemovalReason::path_stripped});
    }
  return out;
}

VariantDrawing apply_variant(const DecompGraph& h, int variant_id) {
  switch (variant_id) {
    case 0:
      return draw_all(h, 0);
    case 1: {
      VariantDrawing vd = draw_all(h, 1);
      for (int e : jumping_cross_edges(h)) vd.forced_bend[e] = 1;
      return vd;
    }
    case 2:
      return compute_v2(h);
    case 3:
      return compute_v3(h);
    case 4:
      return compute_v4(h);
    case 5:
      return strip_path_edges(draw_all(h, 0), h);
    case 6:
      return strip_path_edges(compute_v4(h), h);
    default:
      throw std::invalid_argument("unknown variant id " + std::to_string(variant_id) +
                                  " (expected 0..6)");
  }
}

}  // namespace pbdraw
