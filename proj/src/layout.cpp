#include "pbdraw/layout.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace pbdraw {

namespace {

uint64_t point_key(Point p) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(p.x)) << 32) |
         static_cast<uint32_t>(p.y);
}

int64_t cross(Point o, Point a, Point b) {
  return static_cast<int64_t>(a.x - o.x) * (b.y - o.y) -
         static_cast<int64_t>(a.y - o.y) * (b.x - o.x);
}

bool strictly_inside(Point p, Point a, Point b) {
  if (cross(a, b, p) != 0) return false;
  int64_t dot = static_cast<int64_t>(p.x - a.x) * (b.x - p.x) +
                static_cast<int64_t>(p.y - a.y) * (b.y - p.y);
  return dot > 0;
}

// Vertex lookup by grid point; finds interior obstructions by walking the
// segment's lattice points instead of scanning all vertices.
class VertexGrid {
 public:
  explicit VertexGrid(const std::vector<Point>& pos) {
    at_.reserve(pos.size() * 2);
    for (size_t v = 0; v < pos.size(); ++v) at_.emplace(point_key(pos[v]), static_cast<int>(v));
  }

  std::optional<int> interior_vertex(Point a, Point b) const {
    int g = std::gcd(std::abs(b.x - a.x), std::abs(b.y - a.y));
    if (g == 0) return std::nullopt;
    int sx = (b.x - a.x) / g, sy = (b.y - a.y) / g;
    for (int i = 1; i < g; ++i) {
      auto it = at_.find(point_key({a.x + i * sx, a.y + i * sy}));
      if (it != at_.end()) return it->second;
    }
    return std::nullopt;
  }

 private:
  std::unordered_map<uint64_t, int> at_;
};

}  // namespace

Coords assign_coordinates(const DecompGraph& h, const TopoOrder& t) {
  if (static_cast<int>(t.position.size()) != h.n ||
      static_cast<int>(t.order.size()) != h.n)
    throw std::invalid_argument("topological order size does not match the graph");
  for (const Edge& e : h.edges)
    if (t.position[e.u] >= t.position[e.v])
      throw std::invalid_argument("order is not topological for the decomposition graph");
  Coords c;
  c.k = h.k;
  c.pos.resize(h.n);
  for (int v = 0; v < h.n; ++v)
    c.pos[v] = {2 * (h.path_of[v] + 1), t.position[v]};
  return c;
}

std::optional<int> segment_hits_vertex(Point a, Point b, const Coords& coords) {
  for (size_t v = 0; v < coords.pos.size(); ++v)
    if (strictly_inside(coords.pos[v], a, b)) return static_cast<int>(v);
  return std::nullopt;
}

Layout route_edges(const DecompGraph& h, const Coords& coords, const VariantDrawing& vd) {
  Layout layout;
  layout.variant_id = vd.variant_id;
  layout.n = h.n;
  layout.k = h.k;
  layout.vertex_pos = coords.pos;

  VertexGrid grid(coords.pos);
  auto check_clear = [&](Point a, Point b, const Edge& uv) {
    if (auto hit = grid.interior_vertex(a, b))
      throw InvariantViolation("segment of edge (" + std::to_string(uv.u) + "," +
                               std::to_string(uv.v) + ") passes through vertex " +
                               std::to_string(*hit));
  };

  for (size_t e = 0; e < h.edges.size(); ++e) {
    if (!vd.drawn[e]) continue;
    const Edge& uv = h.edges[e];
    Point a = coords.pos[uv.u], b = coords.pos[uv.v];
    DrawnEdge de;
    de.edge = static_cast<int>(e);
    de.uv = uv;
    de.cls = h.edge_class[e];
    bool obstructed = grid.interior_vertex(a, b).has_value();
    if (!vd.forced_bend[e] && !obstructed) {
      de.polyline = {a, b};
    } else {
      if (a.x == b.x)
        throw InvariantViolation("same-column edge (" + std::to_string(uv.u) + "," +
                                 std::to_string(uv.v) + ") cannot bend");
      Point bend{a.x < b.x ? a.x + 1 : a.x - 1, b.y - 1};
      check_clear(a, bend, uv);
      check_clear(bend, b, uv);
      de.polyline = {a, bend, b};
    }
    layout.edges.push_back(std::move(de));
  }
  return layout;
}

void compute_bundles(Layout& layout, const DecompGraph& h) {
  // bend point -> bundle under construction
  std::map<Point, Bundle> groups;
  // (source path, target) -> bend point, to verify the converse direction
  std::map<std::pair<int, int>, Point> seen_key;

  for (size_t i = 0; i < layout.edges.size(); ++i) {
    DrawnEdge& de = layout.edges[i];
    de.bundle_id = -1;
    if (!de.bent()) continue;
    Point bend = de.polyline[1];
    int source_path = h.path_of[de.uv.u];
    int target = de.uv.v;

    auto [it, fresh] = groups.try_emplace(bend);
    if (fresh) {
      it->second.bend = bend;
      it->second.source_path = source_path;
      it->second.target = target;
    } else if (it->second.source_path != source_path || it->second.target != target) {
      throw InvariantViolation("edges with different source path or target share bend (" +
                               std::to_string(bend.x) + "," + std::to_string(bend.y) + ")");
    }
    it->second.members.push_back(static_cast<int>(i));

    auto [kit, key_fresh] = seen_key.try_emplace({source_path, target}, bend);
    if (!key_fresh && kit->second != bend)
      throw InvariantViolation("edges from one path into one target bend at two points");
  }

  layout.bundles.clear();
  std::vector<const Bundle*> ordered;
  for (const auto& [bend, bundle] : groups)
    if (bundle.members.size() >= 2) ordered.push_back(&bundle);
  std::sort(ordered.begin(), ordered.end(),
            [](const Bundle* a, const Bundle* b) { return a->members[0] < b->members[0]; });
  for (const Bundle* b : ordered) {
    int id = static_cast<int>(layout.bundles.size());
    for (int member : b->members) layout.edges[member].bundle_id = id;
    layout.bundles.push_back(*b);
  }
}

Layout layout_variant(const DecompGraph& h, const TopoOrder& t, const VariantDrawing& vd) {
  Coords coords = assign_coordinates(h, t);
  Layout layout = route_edges(h, coords, vd);
  compute_bundles(layout, h);
  return layout;
}

}  // namespace pbdraw
