#include "pbdraw/reach_index.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pbdraw/errors.hpp"

namespace pbdraw {

bool ReachIndex::query(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::out_of_range("query vertex id out of range");
  return entry(u, path_of[v]) <= pos_of[v];
}

ReachIndex build_index(const DecompGraph& h, const TopoOrder& t) {
  ReachIndex idx(h.n, h.k);
  idx.path_of = h.path_of;
  idx.pos_of = h.pos_of;

  std::vector<std::vector<int>> adj(h.n);
  for (const Edge& e : h.edges) adj[e.u].push_back(e.v);

  for (int p = h.n - 1; p >= 0; --p) {
    int u = t.order[p];
    for (int w : adj[u])
      for (int j = 0; j < h.k; ++j)
        idx.entry(u, j) = std::min(idx.entry(u, j), idx.entry(w, j));
    int32_t& own = idx.entry(u, h.path_of[u]);
    own = std::min(own, h.pos_of[u]);
  }
  return idx;
}

std::string serialize_reach_index(const ReachIndex& idx,
                                  const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << idx.n() << ' ' << idx.k() << '\n';
  for (int u = 0; u < idx.n(); ++u) {
    out << (labels.empty() ? std::to_string(u) : labels[u]) << ' '
        << idx.path_of[u] + 1 << ' ' << idx.pos_of[u];
    for (int j = 0; j < idx.k(); ++j) {
      int32_t e = idx.entry(u, j);
      if (e == ReachIndex::kUnreachable)
        out << " inf";
      else
        out << ' ' << e;
    }
    out << '\n';
  }
  return out.str();
}

NamedReachIndex parse_reach_index(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n, k;
  if (!(in >> n >> k) || n < 0 || k < 0)
    throw ParseError("reach index: bad header, expected 'n k'");
  ReachIndex idx(n, k);
  idx.path_of.assign(n, 0);
  idx.pos_of.assign(n, 0);
  std::vector<std::string> labels(n);
  for (int u = 0; u < n; ++u) {
    int path, pos;
    if (!(in >> labels[u] >> path >> pos))
      throw ParseError("reach index: truncated row " + std::to_string(u + 1));
    if (path < 1 || path > k || pos < 1)
      throw ParseError("reach index: bad path or position in row " + std::to_string(u + 1));
    idx.path_of[u] = path - 1;
    idx.pos_of[u] = pos;
    for (int j = 0; j < k; ++j) {
      std::string tok;
      if (!(in >> tok))
        throw ParseError("reach index: truncated row " + std::to_string(u + 1));
      if (tok == "inf") {
        idx.entry(u, j) = ReachIndex::kUnreachable;
      } else {
        try {
          idx.entry(u, j) = std::stoi(tok);
        } catch (const std::exception&) {
          throw ParseError("reach index: bad entry '" + tok + "' in row " +
                           std::to_string(u + 1));
        }
      }
    }
  }
  std::string extra;
  if (in >> extra) throw ParseError("reach index: trailing content '" + extra + "'");
  return {std::move(idx), std::move(labels)};
}

}  // namespace pbdraw
