#include "pbdraw/random_dag.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace pbdraw {

namespace {

// std::uniform_int_distribution output differs across standard libraries;
// Lemire-style rejection on top of mt19937_64 keeps results portable.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t below(uint64_t bound) {
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Pair index -> ordered pair (i, j), i < j, under the enumeration that lists
// all pairs with the larger element j consecutively: index = j*(j-1)/2 + i.
std::pair<int, int> unrank_pair(int64_t idx) {
  // Largest j with j*(j-1)/2 <= idx.
  int64_t j = static_cast<int64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(idx))) / 2.0);
  while (j * (j - 1) / 2 > idx) --j;
  while ((j + 1) * j / 2 <= idx) ++j;
  int64_t i = idx - j * (j - 1) / 2;
  return {static_cast<int>(i), static_cast<int>(j)};
}

}  // namespace

Digraph gen_random_dag_edges(int n, int64_t m, uint64_t seed) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  int64_t slots = static_cast<int64_t>(n) * (n - 1) / 2;
  if (m < 0 || m > slots)
    throw std::invalid_argument("edge count " + std::to_string(m) +
                                " outside [0, " + std::to_string(slots) + "]");
  Rng rng(seed);

  // Hidden total order: perm[i] = vertex at order position i (Fisher-Yates).
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.below(static_cast<uint64_t>(i) + 1)]);

  // Floyd's sampling: m distinct pair indices, uniform without replacement.
  std::unordered_set<int64_t> chosen;
  chosen.reserve(static_cast<size_t>(m) * 2);
  std::vector<int64_t> picks;
  picks.reserve(static_cast<size_t>(m));
  for (int64_t t = slots - m; t < slots; ++t) {
    int64_t r = static_cast<int64_t>(rng.below(static_cast<uint64_t>(t) + 1));
    if (chosen.insert(r).second) {
      picks.push_back(r);
    } else {
      chosen.insert(t);
      picks.push_back(t);
    }
  }

  Digraph g;
  g.n = n;
  g.labels.resize(n);
  for (int v = 0; v < n; ++v) g.labels[v] = std::to_string(v + 1);
  g.edges.reserve(picks.size());
  for (int64_t idx : picks) {
    auto [i, j] = unrank_pair(idx);
    g.edges.push_back({perm[i], perm[j]});
  }
  normalize(g);
  return g;
}

Digraph gen_random_dag(int n, double completeness_percent, uint64_t seed) {
  if (!(completeness_percent > 0.0) || completeness_percent > 100.0)
    throw std::invalid_argument("completeness must be in (0, 100]");
  int64_t slots = static_cast<int64_t>(n) * (n - 1) / 2;
  int64_t m = std::llround(completeness_percent / 100.0 * static_cast<double>(slots));
  return gen_random_dag_edges(n, m, seed);
}

}  // namespace pbdraw
