#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pbdraw/layout.hpp"

namespace pbdraw {

struct MetricsReport {
  int edges_drawn = 0;
  int cross_edges_drawn = 0;
  int bends = 0;       // distinct bend points; a shared bend counts once
  int bent_edges = 0;  // edges drawn with a bend
  double bends_per_edge = 0.0;
  int crossings = 0;
  int area_width = 0;
  int area_height = 0;
  double elapsed_ms = 0.0;
};

// (edges drawn, cross edges drawn) for a variant.
std::pair<int, int> count_edges(const VariantDrawing& vd, const DecompGraph& h);

int count_bends(const Layout& layout);
int count_bent_edges(const Layout& layout);

// Exact integer test: do the closed segments ab and cd meet at a point that
// is not an endpoint shared by both? Collinear overlap of positive length
// counts as one crossing.
bool segments_cross(Point a, Point b, Point c, Point d);

// All drawn polyline segments with geometric duplicates collapsed (bundled
// edges overlap exactly); each segment is endpoint-sorted.
std::vector<std::pair<Point, Point>> drawn_segments(const Layout& layout);

// Unordered pairs of distinct drawn segments that cross.
int count_crossings(const Layout& layout);

// Bounding-box extents over vertex and bend coordinates; (0,0) when empty.
std::pair<int, int> area(const Layout& layout);

MetricsReport compute_metrics(const Layout& layout, const VariantDrawing& vd,
                              const DecompGraph& h);

// Flat key: value block, one metric per line.
std::string format_metrics(const MetricsReport& r);

}  // namespace pbdraw
