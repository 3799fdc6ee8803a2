// Command-line front end: draw, gen, metrics, verify, index, bench.
// Exit codes: 0 success, 1 usage or input error, 2 verification failure,
// 3 internal invariant violation.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pbdraw/bench.hpp"
#include "pbdraw/io.hpp"
#include "pbdraw/pipeline.hpp"
#include "pbdraw/random_dag.hpp"
#include "pbdraw/reach_index.hpp"
#include "pbdraw/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitInternal = 3;

using namespace pbdraw;

struct GraphArgs {
  std::string input;
  std::string paths_file;
  std::string decompose = "min";
};

void add_graph_options(CLI::App* cmd, GraphArgs& args) {
  cmd->add_option("-i,--input", args.input, "graph file (edge list or JSON)")->required();
  auto* paths = cmd->add_option("--paths", args.paths_file,
                                "path decomposition file, one path of vertex labels per line");
  auto* mode = cmd->add_option("--decompose", args.decompose, "decomposition to compute")
                   ->check(CLI::IsMember({"min", "greedy"}))
                   ->capture_default_str();
  paths->excludes(mode);
}

Digraph load_graph(const std::string& path) {
  ParsedGraph pg = parse_graph(read_file(path));
  if (pg.report.duplicate_edges || pg.report.self_loops)
    std::cerr << path << ": dropped " << pg.report.duplicate_edges
              << " duplicate edge(s) and " << pg.report.self_loops << " self-loop(s)\n";
  return pg.graph;
}

// Condenses up front so a paths file can be resolved against the labels the
// pipeline will actually use (merged ones if the input had cycles).
PipelineResult run_from_args(const GraphArgs& args, int variant) {
  Digraph g = load_graph(args.input);
  Dag dag = condense(g);
  if (dag.n() < g.n)
    std::cerr << args.input << ": condensed " << g.n << " vertices into " << dag.n()
              << " supernodes\n";
  PipelineOptions opt;
  opt.variant = variant;
  opt.mode = args.decompose == "greedy" ? DecomposeMode::greedy : DecomposeMode::minimum;
  if (!args.paths_file.empty())
    opt.paths = parse_paths(read_file(args.paths_file), dag.graph);
  return run_pipeline(dag.graph, opt);
}

int cmd_draw(const GraphArgs& args, int variant, const std::string& svg_out,
             const std::string& json_out, int scale, bool quiet) {
  PipelineResult r = run_from_args(args, variant);
  if (!svg_out.empty()) {
    SvgOptions opt;
    opt.scale = scale;
    write_file(svg_out, emit_svg(r.layout, r.dag.graph.labels, opt));
  }
  if (!json_out.empty())
    write_file(json_out,
               emit_layout_document(
                   make_layout_document(r.layout, r.h, r.dag.graph.labels, r.metrics)));
  if (!quiet) {
    std::cout << "n: " << r.dag.n() << "\nm: " << r.dag.graph.edges.size()
              << "\nk: " << r.sp.k() << "\nvariant: " << variant << '\n'
              << format_metrics(r.metrics);
  }
  return kExitOk;
}

int cmd_gen(int nodes, std::optional<double> completeness, std::optional<int64_t> edges,
            uint64_t seed, const std::string& output) {
  Digraph g = edges ? gen_random_dag_edges(nodes, *edges, seed)
                    : gen_random_dag(nodes, *completeness, seed);
  std::string text = emit_edge_list(g);
  if (output.empty() || output == "-")
    std::cout << text;
  else
    write_file(output, text);
  return kExitOk;
}

int cmd_metrics(const GraphArgs& args, int variant) {
  PipelineResult r = run_from_args(args, variant);
  std::cout << format_metrics(r.metrics);
  return kExitOk;
}

int cmd_verify(const GraphArgs& args) {
  Digraph g = load_graph(args.input);
  Dag dag = condense(g);
  PipelineOptions base;
  base.mode = args.decompose == "greedy" ? DecomposeMode::greedy : DecomposeMode::minimum;
  if (!args.paths_file.empty())
    base.paths = parse_paths(read_file(args.paths_file), dag.graph);

  ClosureMatrix want = transitive_closure(dag.graph);
  bool ok = true;
  for (int variant = 0; variant <= 6; ++variant) {
    PipelineOptions opt = base;
    opt.variant = variant;
    PipelineResult r = run_pipeline(dag.graph, opt);

    Digraph drawn;
    drawn.n = r.h.n;
    for (int e : r.vd.drawn_edge_indices()) drawn.edges.push_back(r.h.edges[e]);
    // Variants 5 and 6 draw cross edges only; they abstract on top of the
    // path skeleton, so reachability is judged with the path edges back in.
    if (variant >= 5)
      for (size_t e = 0; e < r.h.edges.size(); ++e)
        if (r.h.is_path_edge(static_cast<int>(e))) drawn.edges.push_back(r.h.edges[e]);
    normalize(drawn);

    bool same = transitive_closure(drawn) == want;
    std::cout << "variant " << variant << ": "
              << (same ? "reachability preserved" : "REACHABILITY BROKEN") << '\n';
    ok = ok && same;
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_index_build(const GraphArgs& args, const std::string& output) {
  PipelineResult r = run_from_args(args, 0);
  std::string text = serialize_reach_index(build_index(r.h, r.dag.topo), r.dag.graph.labels);
  if (output.empty() || output == "-")
    std::cout << text;
  else
    write_file(output, text);
  return kExitOk;
}

int cmd_index_query(const std::string& index_file, const std::string& from,
                    const std::string& to) {
  NamedReachIndex named = parse_reach_index(read_file(index_file));
  auto find = [&](const std::string& label) {
    for (size_t v = 0; v < named.labels.size(); ++v)
      if (named.labels[v] == label) return static_cast<int>(v);
    throw ParseError("unknown vertex label '" + label + "'");
  };
  bool reach = named.index.query(find(from), find(to));
  std::cout << (reach ? "reachable" : "unreachable") << '\n';
  return kExitOk;
}

BenchSource parse_gen_source(const std::string& arg) {
  BenchSource src;
  src.name = "gen:" + arg;
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t colon = arg.find(':', start);
    parts.push_back(arg.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (parts.size() < 2 || parts.size() > 3)
    throw ParseError("generator argument '" + arg + "': expected n:edges[:seed] or n:pct%[:seed]");
  try {
    src.gen_n = std::stoi(parts[0]);
    if (!parts[1].empty() && parts[1].back() == '%')
      src.gen_completeness = std::stod(parts[1].substr(0, parts[1].size() - 1));
    else
      src.gen_edges = std::stoll(parts[1]);
    if (parts.size() == 3) src.gen_seed = std::stoull(parts[2]);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("generator argument '" + arg + "': bad number");
  }
  return src;
}

int cmd_bench(const std::vector<std::string>& files, const std::vector<std::string>& gens,
              const std::string& variants_arg, const std::string& decompose, int repeats,
              const std::string& csv_out) {
  std::vector<BenchSource> sources;
  for (const std::string& f : files) {
    BenchSource src;
    src.name = f;
    src.file = f;
    sources.push_back(std::move(src));
  }
  for (const std::string& g : gens) sources.push_back(parse_gen_source(g));
  if (sources.empty()) throw ParseError("bench: no inputs (pass files or --gen)");

  std::vector<int> variants;
  {
    std::istringstream in(variants_arg);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      if (tok.empty()) continue;
      if (tok.size() != 1 || tok[0] < '0' || tok[0] > '6')
        throw ParseError("bench: variant '" + tok + "' out of range 0..6");
      variants.push_back(tok[0] - '0');
    }
    if (variants.empty()) throw ParseError("bench: empty variant list");
  }

  BenchResult result = run_bench(sources, variants,
                                 decompose == "greedy" ? DecomposeMode::greedy
                                                       : DecomposeMode::minimum,
                                 repeats);
  std::cout << format_bench_table(result.rows);
  if (!csv_out.empty()) write_file(csv_out, format_bench_csv(result.rows));
  for (const std::string& err : result.errors) std::cerr << "bench: " << err << '\n';
  return result.errors.empty() ? kExitOk : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"path-based hierarchical DAG drawing and reachability tools"};
  app.require_subcommand(1);

  // draw
  auto* draw = app.add_subcommand("draw", "lay out a DAG and emit SVG/JSON");
  GraphArgs draw_args;
  int draw_variant = 0;
  std::string svg_out, json_out;
  int scale = 40;
  bool quiet = false;
  add_graph_options(draw, draw_args);
  draw->add_option("-V,--variant", draw_variant, "abstraction variant")
      ->check(CLI::Range(0, 6))
      ->capture_default_str();
  draw->add_option("--svg", svg_out, "write an SVG rendering here");
  draw->add_option("--json", json_out, "write the layout document here");
  draw->add_option("--scale", scale, "SVG pixels per grid unit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  draw->add_flag("-q,--quiet", quiet, "suppress the stdout summary");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random DAG as an edge list");
  int gen_nodes = 0;
  double gen_completeness = 0.0;
  int64_t gen_edges = 0;
  uint64_t gen_seed = 1;
  std::string gen_output = "-";
  gen->add_option("-n,--nodes", gen_nodes, "vertex count")->required();
  auto* comp_opt =
      gen->add_option("-c,--completeness", gen_completeness,
                      "edge density as a percentage of all forward pairs");
  auto* edges_opt = gen->add_option("-m,--edges", gen_edges, "exact edge count");
  comp_opt->excludes(edges_opt);
  gen->add_option("-s,--seed", gen_seed, "generator seed")->capture_default_str();
  gen->add_option("-o,--output", gen_output, "output file, '-' for stdout")
      ->capture_default_str();

  // metrics
  auto* metrics = app.add_subcommand("metrics", "print drawing metrics for one variant");
  GraphArgs metrics_args;
  int metrics_variant = 0;
  add_graph_options(metrics, metrics_args);
  metrics->add_option("-V,--variant", metrics_variant, "abstraction variant")
      ->check(CLI::Range(0, 6))
      ->capture_default_str();

  // verify
  auto* verify = app.add_subcommand(
      "verify", "check that every variant preserves reachability on this input");
  GraphArgs verify_args;
  add_graph_options(verify, verify_args);

  // index
  auto* index = app.add_subcommand("index", "reachability index operations");
  index->require_subcommand(1);
  auto* index_build = index->add_subcommand("build", "build and print the index");
  GraphArgs index_args;
  std::string index_output = "-";
  add_graph_options(index_build, index_args);
  index_build->add_option("-o,--output", index_output, "output file, '-' for stdout")
      ->capture_default_str();
  auto* index_query =
      index->add_subcommand("query", "answer one reachability query from an index file");
  std::string query_index_file, query_from, query_to;
  index_query->add_option("--index", query_index_file, "index file from 'index build'")
      ->required();
  index_query->add_option("from", query_from, "source vertex label")->required();
  index_query->add_option("to", query_to, "target vertex label")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "run the drawing pipeline over many inputs");
  std::vector<std::string> bench_files, bench_gens;
  std::string bench_variants = "0,1,2,3,4,5,6";
  std::string bench_decompose = "min";
  int bench_repeats = 5;
  std::string bench_csv;
  bench->add_option("files", bench_files, "graph files");
  bench->add_option("--gen", bench_gens,
                    "generated input, n:edges[:seed] or n:pct%[:seed] (repeatable)");
  bench->add_option("--variants", bench_variants, "comma-separated variant ids")
      ->capture_default_str();
  bench->add_option("--decompose", bench_decompose, "decomposition to compute")
      ->check(CLI::IsMember({"min", "greedy"}))
      ->capture_default_str();
  bench->add_option("--repeats", bench_repeats, "timing repetitions per row")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--csv", bench_csv, "also write rows as CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (draw->parsed())
      return cmd_draw(draw_args, draw_variant, svg_out, json_out, scale, quiet);
    if (gen->parsed()) {
      if (comp_opt->count() == 0 && edges_opt->count() == 0)
        throw ParseError("gen: pass --completeness or --edges");
      return cmd_gen(gen_nodes,
                     comp_opt->count() ? std::optional(gen_completeness) : std::nullopt,
                     edges_opt->count() ? std::optional(gen_edges) : std::nullopt,
                     gen_seed, gen_output);
    }
    if (metrics->parsed()) return cmd_metrics(metrics_args, metrics_variant);
    if (verify->parsed()) return cmd_verify(verify_args);
    if (index->parsed()) {
      if (index_build->parsed()) return cmd_index_build(index_args, index_output);
      return cmd_index_query(query_index_file, query_from, query_to);
    }
    if (bench->parsed())
      return cmd_bench(bench_files, bench_gens, bench_variants, bench_decompose,
                       bench_repeats, bench_csv);
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DecompositionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CycleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
