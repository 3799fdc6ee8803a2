#include "pbdraw/pipeline.hpp"

#include <chrono>

namespace pbdraw {

PipelineResult run_pipeline(const Digraph& g, const PipelineOptions& opt) {
  PipelineResult r;
  r.dag = condense(g);
  if (opt.paths)
    r.sp = validate_decomposition(r.dag, *opt.paths);
  else
    r.sp = opt.mode == DecomposeMode::minimum ? min_path_cover(r.dag)
                                              : greedy_decompose(r.dag);

  auto t0 = std::chrono::steady_clock::now();
  r.h = build_decomposition_graph(r.dag, r.sp);
  r.vd = apply_variant(r.h, opt.variant);
  r.layout = layout_variant(r.h, r.dag.topo, r.vd);
  auto t1 = std::chrono::steady_clock::now();

  r.metrics = compute_metrics(r.layout, r.vd, r.h);
  r.metrics.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

}  // namespace pbdraw
