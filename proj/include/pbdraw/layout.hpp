#pragma once

#include <optional>
#include <vector>

#include "pbdraw/decomposition.hpp"
#include "pbdraw/variants.hpp"

namespace pbdraw {

struct Point {
  int x = 0;
  int y = 0;

  auto operator<=>(const Point&) const = default;
};

// Grid placement: vertices of path i (0-based) share column 2*(i+1), and a
// vertex's row is its 1-based topological position. Columns are even, so odd
// columns stay free for bend points.
struct Coords {
  std::vector<Point> pos;
  int k = 0;
};

// `t` must be a topological order of the DAG H was built from; it then orders
// H as well. Throws std::invalid_argument otherwise.
Coords assign_coordinates(const DecompGraph& h, const TopoOrder& t);

// Smallest-id vertex strictly inside the open segment (a,b), if any.
std::optional<int> segment_hits_vertex(Point a, Point b, const Coords& coords);

struct DrawnEdge {
  int edge = -1;  // index into DecompGraph::edges
  Edge uv;
  EdgeClass cls = EdgeClass::cross_edge;
  std::vector<Point> polyline;  // two points, or three with the bend between
  int bundle_id = -1;

  bool bent() const { return polyline.size() == 3; }
};

// Edges sharing a bend point. Sharing happens exactly for edges that leave
// the same path and enter the same target vertex.
struct Bundle {
  Point bend;
  int source_path = 0;  // 0-based
  int target = 0;
  std::vector<int> members;  // indices into Layout::edges
};

struct Layout {
  int variant_id = 0;
  int n = 0;
  int k = 0;
  std::vector<Point> vertex_pos;
  std::vector<DrawnEdge> edges;
  std::vector<Bundle> bundles;
};

// Draws every edge the variant kept. An edge bends only when forced by the
// variant or when the straight segment would pass through a vertex; the bend
// sits at (x(u)+-1, y(v)-1), one row below the target on the odd column next
// to the source. Every polyline is re-checked against vertex interiors;
// failure throws InvariantViolation.
Layout route_edges(const DecompGraph& h, const Coords& coords, const VariantDrawing& vd);

// Groups bent edges by bend point and verifies the sharing rule both ways.
void compute_bundles(Layout& layout, const DecompGraph& h);

// assign_coordinates + route_edges + compute_bundles.
Layout layout_variant(const DecompGraph& h, const TopoOrder& t, const VariantDrawing& vd);

}  // namespace pbdraw
