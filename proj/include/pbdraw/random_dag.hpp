#pragma once

#include <cstdint>

#include "pbdraw/graph.hpp"

namespace pbdraw {

// Random DAG: a hidden random total order over n vertices, plus m edge slots
// sampled uniformly without replacement from the n*(n-1)/2 order-respecting
// pairs. Labels are "1".."n". Same (n, m, seed) always yields the same graph,
// independent of platform. Throws std::invalid_argument when m exceeds the
// slot count.
Digraph gen_random_dag_edges(int n, int64_t m, uint64_t seed);

// Same, with the edge count given as a percentage of the n*(n-1)/2 maximum,
// rounded to the nearest integer. Requires 0 < completeness <= 100.
Digraph gen_random_dag(int n, double completeness_percent, uint64_t seed);

}  // namespace pbdraw
