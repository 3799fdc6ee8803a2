#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pbdraw/metrics.hpp"
#include "pbdraw/pipeline.hpp"

namespace pbdraw {

// One benchmark input: either a graph file or generator parameters.
struct BenchSource {
  std::string name;
  std::string file;  // nonempty: read and parse this path

  // Generator parameters, used when `file` is empty. Exactly one of
  // completeness (> 0) or edge count (>= 0) is set.
  int gen_n = 0;
  double gen_completeness = 0.0;
  int64_t gen_edges = -1;
  uint64_t gen_seed = 1;
};

struct BenchRow {
  std::string graph;
  int n = 0;
  int m = 0;
  int k = 0;
  int variant = 0;
  MetricsReport metrics;  // elapsed_ms averaged over the repeats
};

struct BenchResult {
  std::vector<BenchRow> rows;      // ordered by (input, variant)
  std::vector<std::string> errors; // one entry per failed input
};

// Runs every variant on every input. The timed region (decomposition graph +
// variant + layout) is repeated `repeats` times and averaged; metrics come
// from the last repeat. A failing input contributes an error entry and the
// run continues.
BenchResult run_bench(const std::vector<BenchSource>& sources,
                      const std::vector<int>& variants, DecomposeMode mode,
                      int repeats);

std::string format_bench_table(const std::vector<BenchRow>& rows);
std::string format_bench_csv(const std::vector<BenchRow>& rows);

}  // namespace pbdraw
