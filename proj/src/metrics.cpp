#include "pbdraw/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace pbdraw {

std::pair<int, int> count_edges(const VariantDrawing& vd, const DecompGraph& h) {
  int total = 0, cross = 0;
  for (size_t e = 0; e < vd.drawn.size(); ++e) {
    if (!vd.drawn[e]) continue;
    ++total;
    if (h.edge_class[e] == EdgeClass::cross_edge) ++cross;
  }
  return {total, cross};
}

int count_bends(const Layout& layout) {
  std::set<Point> points;
  for (const DrawnEdge& de : layout.edges)
    if (de.bent()) points.insert(de.polyline[1]);
  return static_cast<int>(points.size());
}

int count_bent_edges(const Layout& layout) {
  int c = 0;
  for (const DrawnEdge& de : layout.edges) c += de.bent();
  return c;
}

namespace {

int64_t cross_sign(Point o, Point a, Point b) {
  int64_t v = static_cast<int64_t>(a.x - o.x) * (b.y - o.y) -
              static_cast<int64_t>(a.y - o.y) * (b.x - o.x);
  return v > 0 ? 1 : v < 0 ? -1 : 0;
}

// Assumes r collinear with pq.
bool within_box(Point p, Point q, Point r) {
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
         std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
}

bool closed_segments_intersect(Point a, Point b, Point c, Point d) {
  int64_t d1 = cross_sign(c, d, a);
  int64_t d2 = cross_sign(c, d, b);
  int64_t d3 = cross_sign(a, b, c);
  int64_t d4 = cross_sign(a, b, d);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && within_box(c, d, a)) return true;
  if (d2 == 0 && within_box(c, d, b)) return true;
  if (d3 == 0 && within_box(a, b, c)) return true;
  if (d4 == 0 && within_box(a, b, d)) return true;
  return false;
}

}  // namespace

bool segments_cross(Point a, Point b, Point c, Point d) {
  if (!closed_segments_intersect(a, b, c, d)) return false;
  bool share = a == c || a == d || b == c || b == d;
  if (!share) return true;
  bool collinear = cross_sign(a, b, c) == 0 && cross_sign(a, b, d) == 0;
  if (!collinear) return false;  // meeting only at the shared endpoint
  // Collinear with a shared endpoint: a crossing iff the overlap is longer
  // than that single point, i.e. the non-shared endpoints point the same way.
  auto overlap_length = [](int lo1, int hi1, int lo2, int hi2) {
    return std::min(hi1, hi2) - std::max(lo1, lo2);
  };
  int len_x = overlap_length(std::min(a.x, b.x), std::max(a.x, b.x),
                             std::min(c.x, d.x), std::max(c.x, d.x));
  int len_y = overlap_length(std::min(a.y, b.y), std::max(a.y, b.y),
                             std::min(c.y, d.y), std::max(c.y, d.y));
  return len_x > 0 || len_y > 0;
}

std::vector<std::pair<Point, Point>> drawn_segments(const Layout& layout) {
  std::vector<std::pair<Point, Point>> segs;
  for (const DrawnEdge& de : layout.edges)
    for (size_t i = 0; i + 1 < de.polyline.size(); ++i) {
      Point p = de.polyline[i], q = de.polyline[i + 1];
      if (q < p) std::swap(p, q);
      segs.emplace_back(p, q);
    }
  std::sort(segs.begin(), segs.end());
  segs.erase(std::unique(segs.begin(), segs.end()), segs.end());
  return segs;
}

int count_crossings(const Layout& layout) {
  auto segs = drawn_segments(layout);
  int count = 0;
  for (size_t i = 0; i < segs.size(); ++i)
    for (size_t j = i + 1; j < segs.size(); ++j)
      if (segments_cross(segs[i].first, segs[i].second, segs[j].first, segs[j].second))
        ++count;
  return count;
}

std::pair<int, int> area(const Layout& layout) {
  bool any = false;
  int min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  auto extend = [&](Point p) {
    if (!any) {
      min_x = max_x = p.x;
      min_y = max_y = p.y;
      any = true;
      return;
    }
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  };
  for (Point p : layout.vertex_pos) extend(p);
  for (const DrawnEdge& de : layout.edges)
    if (de.bent()) extend(de.polyline[1]);
  if (!any) return {0, 0};
  return {max_x - min_x + 1, max_y - min_y + 1};
}

MetricsReport compute_metrics(const Layout& layout, const VariantDrawing& vd,
                              const DecompGraph& h) {
  MetricsReport r;
  std::tie(r.edges_drawn, r.cross_edges_drawn) = count_edges(vd, h);
  r.bends = count_bends(layout);
  r.bent_edges = count_bent_edges(layout);
  r.bends_per_edge = r.edges_drawn > 0 ? static_cast<double>(r.bends) / r.edges_drawn : 0.0;
  r.crossings = count_crossings(layout);
  std::tie(r.area_width, r.area_height) = area(layout);
  return r;
}

std::string format_metrics(const MetricsReport& r) {
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "edges_drawn: %d\n"
                "cross_edges_drawn: %d\n"
                "bends: %d\n"
                "bent_edges: %d\n"
                "bends_per_edge: %.4f\n"
                "crossings: %d\n"
                "area_width: %d\n"
                "area_height: %d\n"
                "elapsed_ms: %.3f\n",
                r.edges_drawn, r.cross_edges_drawn, r.bends, r.bent_edges,
                r.bends_per_edge, r.crossings, r.area_width, r.area_height, r.elapsed_ms);
  return buf;
}

}  // namespace pbdraw
