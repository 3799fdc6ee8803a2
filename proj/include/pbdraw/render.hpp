#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pbdraw/layout.hpp"
#include "pbdraw/metrics.hpp"

namespace pbdraw {

struct SvgOptions {
  int scale = 40;  // pixels per grid unit
};

// Standalone SVG of a layout. Output is deterministic byte for byte: shared
// polyline segments (bundles) are emitted once, vertices are labeled circles,
// and edge targets get arrowheads.
std::string emit_svg(const Layout& layout, const std::vector<std::string>& labels,
                     const SvgOptions& opt = {});

// JSON wire form of a drawing: variant id, placed vertices with their path
// coordinates, drawn edges with polylines and bundle ids, and the metrics
// block. Lossless and deterministic.
struct LayoutDocument {
  int variant = 0;

  struct Vertex {
    std::string label;
    int x = 0, y = 0;
    int path = 0;  // 1-based
    int pos = 0;   // 1-based
  };
  std::vector<Vertex> vertices;

  struct DocEdge {
    std::string from, to;
    EdgeClass cls = EdgeClass::cross_edge;
    std::vector<Point> polyline;
    int bundle_id = -1;  // -1 = not bundled
  };
  std::vector<DocEdge> edges;

  MetricsReport metrics;
};

LayoutDocument make_layout_document(const Layout& layout, const DecompGraph& h,
                                    const std::vector<std::string>& labels,
                                    const MetricsReport& metrics);

std::string emit_layout_document(const LayoutDocument& doc);

LayoutDocument parse_layout_document(std::string_view text);

}  // namespace pbdraw
