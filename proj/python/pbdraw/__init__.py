"""Path-based hierarchical DAG drawing.

Condense a digraph, cover it with vertex-disjoint paths, abstract the cross
edges (variants 0-6), lay the result out on an integer grid with at most one
bend per edge, and answer reachability queries from an n*k index.
"""

from ._pbdraw import (
    Bundle,
    ClosureMatrix,
    CycleError,
    Dag,
    DecompGraph,
    DecompositionError,
    Digraph,
    DrawnEdge,
    InvariantViolation,
    Layout,
    MetricsReport,
    ParseError,
    PathDecomposition,
    PipelineResult,
    ReachIndex,
    TopoOrder,
    VariantDrawing,
    apply_variant,
    build_decomposition_graph,
    build_index,
    compute_metrics,
    condense,
    emit_edge_list,
    emit_layout_json,
    emit_svg,
    gen_random_dag,
    gen_random_dag_edges,
    greedy_decompose,
    layout_variant,
    min_path_cover,
    parse_graph,
    parse_paths,
    parse_reach_index,
    run_pipeline,
    serialize_reach_index,
    topo_sort,
    transitive_closure,
    validate_decomposition,
)

__all__ = [
    "Bundle",
    "ClosureMatrix",
    "CycleError",
    "Dag",
    "DecompGraph",
    "DecompositionError",
    "Digraph",
    "DrawnEdge",
    "InvariantViolation",
    "Layout",
    "MetricsReport",
    "ParseError",
    "PathDecomposition",
    "PipelineResult",
    "ReachIndex",
    "TopoOrder",
    "VariantDrawing",
    "apply_variant",
    "build_decomposition_graph",
    "build_index",
    "compute_metrics",
    "condense",
    "emit_edge_list",
    "emit_layout_json",
    "emit_svg",
    "gen_random_dag",
    "gen_random_dag_edges",
    "greedy_decompose",
    "layout_variant",
    "min_path_cover",
    "parse_graph",
    "parse_paths",
    "parse_reach_index",
    "run_pipeline",
    "serialize_reach_index",
    "topo_sort",
    "transitive_closure",
    "validate_decomposition",
]
