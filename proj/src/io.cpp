#include "pbdraw/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

namespace pbdraw {

namespace {

using nlohmann::json;

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.emplace_back(text.substr(start));
      break;
    }
    lines.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(std::move(t));
  return toks;
}

// Accumulates labeled edges; vertices get ids by first appearance.
class GraphBuilder {
 public:
  int intern(const std::string& label) {
    auto [it, fresh] = ids_.try_emplace(label, static_cast<int>(labels_.size()));
    if (fresh) labels_.push_back(label);
    return it->second;
  }

  void add_edge(int u, int v) {
    if (u == v) {
      ++report_.self_loops;
      return;
    }
    uint64_t key = (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) |
                   static_cast<uint32_t>(v);
    if (!seen_.insert(key).second) {
      ++report_.duplicate_edges;
      return;
    }
    edges_.push_back({u, v});
  }

  ParsedGraph finish() {
    ParsedGraph pg;
    pg.graph.n = static_cast<int>(labels_.size());
    pg.graph.edges = std::move(edges_);
    pg.graph.labels = std::move(labels_);
    pg.report = report_;
    normalize(pg.graph);  // sorts; duplicates are already gone
    return pg;
  }

 private:
  std::unordered_map<std::string, int> ids_;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::unordered_set<uint64_t> seen_;
  ParseReport report_;
};

std::string json_label(const json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError(std::string("graph JSON: ") + what + " must be a string or integer");
}

ParsedGraph parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("graph JSON: top level must be an object");

  GraphBuilder b;
  if (doc.contains("nodes")) {
    if (!doc["nodes"].is_array()) throw ParseError("graph JSON: 'nodes' must be an array");
    std::unordered_set<std::string> seen;
    for (const json& node : doc["nodes"]) {
      std::string label = json_label(node, "node");
      if (!seen.insert(label).second)
        throw ParseError("graph JSON: duplicate node '" + label + "'");
      b.intern(label);
    }
  }
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError("graph JSON: 'edges' must be an array");
    for (const json& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2)
        throw ParseError("graph JSON: each edge must be a [from, to] pair");
      int u = b.intern(json_label(e[0], "edge endpoint"));
      int v = b.intern(json_label(e[1], "edge endpoint"));
      b.add_edge(u, v);
    }
  }
  return b.finish();
}

}  // namespace

ParsedGraph parse_graph(std::string_view text) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_graph_json(text);

  GraphBuilder b;
  auto lines = split_lines(text);
  for (size_t i = 0; i < lines.size(); ++i) {
    auto toks = tokenize(lines[i]);
    if (toks.empty()) continue;
    if (toks.size() == 1) {
      b.intern(toks[0]);
      continue;
    }
    if (toks.size() != 2)
      throw ParseError("line " + std::to_string(i + 1) +
                       ": expected 'from to', got " + std::to_string(toks.size()) +
                       " token(s)");
    int u = b.intern(toks[0]);
    int v = b.intern(toks[1]);
    b.add_edge(u, v);
  }
  return b.finish();
}

std::vector<std::vector<int>> parse_paths(std::string_view text, const Digraph& g) {
  std::unordered_map<std::string, int> ids;
  for (int v = 0; v < g.n; ++v) ids.emplace(g.label_of(v), v);

  std::vector<std::vector<int>> paths;
  auto lines = split_lines(text);
  for (size_t i = 0; i < lines.size(); ++i) {
    auto toks = tokenize(lines[i]);
    if (toks.empty()) continue;
    std::vector<int> path;
    for (const std::string& tok : toks) {
      auto it = ids.find(tok);
      if (it == ids.end())
        throw ParseError("line " + std::to_string(i + 1) + ": unknown vertex label '" +
                         tok + "'");
      path.push_back(it->second);
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

std::string emit_edge_list(const Digraph& g) {
  std::ostringstream out;
  out << "# n=" << g.n << " m=" << g.edges.size() << '\n';
  for (const Edge& e : g.edges) out << g.label_of(e.u) << ' ' << g.label_of(e.v) << '\n';
  std::vector<char> touched(g.n, 0);
  for (const Edge& e : g.edges) touched[e.u] = touched[e.v] = 1;
  for (int v = 0; v < g.n; ++v)
    if (!touched[v]) out << g.label_of(v) << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
}

}  // namespace pbdraw
