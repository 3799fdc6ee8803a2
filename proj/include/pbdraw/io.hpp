#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pbdraw/graph.hpp"

namespace pbdraw {

struct ParseReport {
  int duplicate_edges = 0;
  int self_loops = 0;
};

struct ParsedGraph {
  Digraph graph;
  ParseReport report;
};

// Accepts either format, auto-detected:
//  - edge list: one "u v" pair per line, labels are whitespace-free tokens,
//    '#' starts a comment; a single-token line declares an isolated vertex;
//  - JSON: {"nodes": [...], "edges": [[u, v], ...]}, "nodes" optional.
// Vertices are declared implicitly by first appearance. Duplicate edges and
// self-loops are dropped and counted. Malformed input throws ParseError
// naming the line.
ParsedGraph parse_graph(std::string_view text);

// One path per line: whitespace-separated vertex labels of g. Unknown labels
// throw ParseError naming the line. Blank lines and '#' comments are skipped.
std::vector<std::vector<int>> parse_paths(std::string_view text, const Digraph& g);

// Edge-list form of a graph, one "u v" per line after a "# n=.. m=.." header.
// Isolated vertices are declared on single-token lines at the end.
std::string emit_edge_list(const Digraph& g);

// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::string& path);

void write_file(const std::string& path, std::string_view content);

}  // namespace pbdraw
