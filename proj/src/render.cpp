#include "pbdraw/render.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "json.hpp"

#include "pbdraw/errors.hpp"

namespace pbdraw {

namespace {

struct SvgSegment {
  Point a, b;
  EdgeClass cls;
  bool arrow;  // last segment of an edge: gets an arrowhead at b
};

// Directed segments in first-appearance order with exact duplicates merged;
// bundled edges share their trailing segments.
std::vector<SvgSegment> svg_segments(const Layout& layout) {
  std::vector<SvgSegment> segs;
  std::map<std::array<int, 4>, size_t> at;
  auto add = [&](Point a, Point b, EdgeClass cls, bool arrow) {
    auto [it, fresh] = at.try_emplace({a.x, a.y, b.x, b.y}, segs.size());
    if (!fresh) {
      SvgSegment& s = segs[it->second];
      s.arrow = s.arrow || arrow;
      return;
    }
    segs.push_back({a, b, cls, arrow});
  };
  for (const DrawnEdge& de : layout.edges)
    for (size_t i = 0; i + 1 < de.polyline.size(); ++i)
      add(de.polyline[i], de.polyline[i + 1], de.cls,
          i + 2 == de.polyline.size());
  return segs;
}

}  // namespace

std::string emit_svg(const Layout& layout, const std::vector<std::string>& labels,
                     const SvgOptions& opt) {
  const int s = opt.scale;
  const int r = s * 3 / 10;
  const int font = std::max(8, s * 7 / 20);

  int min_x = 1, min_y = 1, max_x = 1, max_y = 1;
  bool any = false;
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

  const int x0 = (min_x - 1) * s, y0 = (min_y - 1) * s;
  const int width = (max_x - min_x + 2) * s, height = (max_y - min_y + 2) * s;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"" << x0 << ' ' << y0 << ' '
      << width << ' ' << height << "\">\n";
  out << "  <defs>\n"
      << "    <marker id=\"arrow\" markerUnits=\"userSpaceOnUse\" markerWidth=\"12\""
      << " markerHeight=\"10\" refX=\"" << 12 + r
      << "\" refY=\"5\" orient=\"auto\">\n"
      << "      <path d=\"M0,0 L12,5 L0,10 z\" fill=\"#555555\"/>\n"
      << "    </marker>\n"
      << "  </defs>\n";
  out << "  <rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << width
      << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";

  for (const SvgSegment& seg : svg_segments(layout)) {
    const char* color = seg.cls == EdgeClass::path_edge ? "#1a1a1a" : "#3465a4";
    out << "  <line x1=\"" << seg.a.x * s << "\" y1=\"" << seg.a.y * s << "\" x2=\""
        << seg.b.x * s << "\" y2=\"" << seg.b.y * s << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"";
    if (seg.arrow) out << " marker-end=\"url(#arrow)\"";
    out << "/>\n";
  }

  for (int v = 0; v < layout.n; ++v) {
    Point p = layout.vertex_pos[v];
    std::string label = labels.empty() ? std::to_string(v) : labels[v];
    out << "  <circle cx=\"" << p.x * s << "\" cy=\"" << p.y * s << "\" r=\"" << r
        << "\" fill=\"#ffffff\" stroke=\"#1a1a1a\" stroke-width=\"2\"/>\n";
    out << "  <text x=\"" << p.x * s << "\" y=\"" << p.y * s
        << "\" text-anchor=\"middle\" dominant-baseline=\"central\" font-family=\"sans-serif\""
        << " font-size=\"" << font << "\">" << label << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json metrics_to_json(const MetricsReport& m) {
  ordered_json j;
  j["edges_drawn"] = m.edges_drawn;
  j["cross_edges_drawn"] = m.cross_edges_drawn;
  j["bends"] = m.bends;
  j["bent_edges"] = m.bent_edges;
  j["bends_per_edge"] = m.bends_per_edge;
  j["crossings"] = m.crossings;
  j["area"] = {m.area_width, m.area_height};
  j["elapsed_ms"] = m.elapsed_ms;
  return j;
}

MetricsReport metrics_from_json(const ordered_json& j) {
  MetricsReport m;
  m.edges_drawn = j.at("edges_drawn").get<int>();
  m.cross_edges_drawn = j.at("cross_edges_drawn").get<int>();
  m.bends = j.at("bends").get<int>();
  m.bent_edges = j.at("bent_edges").get<int>();
  m.bends_per_edge = j.at("bends_per_edge").get<double>();
  m.crossings = j.at("crossings").get<int>();
  m.area_width = j.at("area").at(0).get<int>();
  m.area_height = j.at("area").at(1).get<int>();
  m.elapsed_ms = j.at("elapsed_ms").get<double>();
  return m;
}

}  // namespace

LayoutDocument make_layout_document(const Layout& layout, const DecompGraph& h,
                                    const std::vector<std::string>& labels,
                                    const MetricsReport& metrics) {
  LayoutDocument doc;
  doc.variant = layout.variant_id;
  doc.metrics = metrics;
  auto name = [&](int v) { return labels.empty() ? std::to_string(v) : labels[v]; };
  for (int v = 0; v < layout.n; ++v)
    doc.vertices.push_back({name(v), layout.vertex_pos[v].x, layout.vertex_pos[v].y,
                            h.path_of[v] + 1, h.pos_of[v]});
  for (const DrawnEdge& de : layout.edges)
    doc.edges.push_back({name(de.uv.u), name(de.uv.v), de.cls, de.polyline, de.bundle_id});
  return doc;
}

std::string emit_layout_document(const LayoutDocument& doc) {
  ordered_json j;
  j["variant"] = doc.variant;
  j["vertices"] = ordered_json::array();
  for (const auto& v : doc.vertices) {
    ordered_json jv;
    jv["label"] = v.label;
    jv["x"] = v.x;
    jv["y"] = v.y;
    jv["path"] = v.path;
    jv["pos"] = v.pos;
    j["vertices"].push_back(std::move(jv));
  }
  j["edges"] = ordered_json::array();
  for (const auto& e : doc.edges) {
    ordered_json je;
    je["from"] = e.from;
    je["to"] = e.to;
    je["class"] = e.cls == EdgeClass::path_edge ? "path" : "cross";
    je["polyline"] = ordered_json::array();
    for (Point p : e.polyline) je["polyline"].push_back({p.x, p.y});
    if (e.bundle_id >= 0) je["bundle"] = e.bundle_id;
    j["edges"].push_back(std::move(je));
  }
  j["metrics"] = metrics_to_json(doc.metrics);
  return j.dump(2) + "\n";
}

LayoutDocument parse_layout_document(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("layout JSON: ") + e.what());
  }
  try {
    LayoutDocument doc;
    doc.variant = j.at("variant").get<int>();
    for (const auto& jv : j.at("vertices"))
      doc.vertices.push_back({jv.at("label").get<std::string>(), jv.at("x").get<int>(),
                              jv.at("y").get<int>(), jv.at("path").get<int>(),
                              jv.at("pos").get<int>()});
    for (const auto& je : j.at("edges")) {
      LayoutDocument::DocEdge e;
      e.from = je.at("from").get<std::string>();
      e.to = je.at("to").get<std::string>();
      std::string cls = je.at("class").get<std::string>();
      if (cls != "path" && cls != "cross")
        throw ParseError("layout JSON: unknown edge class '" + cls + "'");
      e.cls = cls == "path" ? EdgeClass::path_edge : EdgeClass::cross_edge;
      for (const auto& jp : je.at("polyline"))
        e.polyline.push_back({jp.at(0).get<int>(), jp.at(1).get<int>()});
      e.bundle_id = je.contains("bundle") ? je.at("bundle").get<int>() : -1;
      doc.edges.push_back(std::move(e));
    }
    doc.metrics = metrics_from_json(j.at("metrics"));
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("layout JSON: ") + e.what());
  }
}

}  // namespace pbdraw
