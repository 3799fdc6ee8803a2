#pragma once

#include <optional>
#include <vector>

#include "pbdraw/decomposition.hpp"
#include "pbdraw/graph.hpp"
#include "pbdraw/layout.hpp"
#include "pbdraw/metrics.hpp"
#include "pbdraw/variants.hpp"

namespace pbdraw {

enum class DecomposeMode { minimum, greedy };

struct PipelineOptions {
  DecomposeMode mode = DecomposeMode::minimum;
  // When set, used instead of computing a decomposition. Vertex ids refer to
  // the condensed graph.
  std::optional<std::vector<std::vector<int>>> paths;
  int variant = 0;
};

struct PipelineResult {
  Dag dag;
  PathDecomposition sp;
  DecompGraph h;
  VariantDrawing vd;
  Layout layout;
  MetricsReport metrics;  // elapsed_ms covers decomposition graph + variant + layout
};

// Full drawing pipeline: condense, decompose (or validate the supplied
// paths), build the decomposition graph, apply the variant, lay out, measure.
PipelineResult run_pipeline(const Digraph& g, const PipelineOptions& opt);

}  // namespace pbdraw
