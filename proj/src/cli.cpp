#include "palette/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "palette/analysis.hpp"
#include "palette/constructions.hpp"
#include "palette/exact.hpp"
#include "palette/io.hpp"
#include "palette/palettes.hpp"
#include "palette/suite.hpp"

namespace palette {
namespace {

// Input or output file problems; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open " + path);
  buffer << file.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

const char* as_bool(bool b) { return b ? "true" : "false"; }

struct Options {
  std::string input = "-";
  std::string coloring_path;
  std::string output;

  std::string family;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t leaves = 0;
  std::size_t scale = 1;
  std::uint64_t seed = 1;

  std::string strategy = "auto";

  std::uint64_t max_nodes = SearchLimits{}.max_nodes;
  double max_seconds = SearchLimits{}.max_seconds;
  std::size_t max_colors = 0;
  std::size_t workers = 1;

  std::string filter;
  bool slow = false;
  std::size_t threads = 0;
};

int run_gen(const Options& o, std::ostream& out) {
  auto need = [](std::size_t value, const char* flag) {
    if (value == 0) throw UsageError(std::string("gen: missing ") + flag);
  };
  Graph g;
  if (o.family == "grid") {
    need(o.m, "--m");
    need(o.n, "--n");
    g = gen_grid(o.m, o.n);
  } else if (o.family == "kab") {
    need(o.a, "--a");
    need(o.b, "--b");
    g = gen_complete_bipartite(o.a, o.b);
  } else if (o.family == "biregular") {
    need(o.a, "--a");
    need(o.b, "--b");
    g = gen_random_biregular(o.a, o.b, o.scale, o.seed);
  } else {
    need(o.leaves, "--leaves");
    g = gen_star(o.leaves);
  }
  write_output(o.output, serialize_graph(g), out);
  return kExitOk;
}

ConstructionResult construct(const std::string& strategy, const Graph& g) {
  if (strategy == "auto") return color_auto(g);
  if (strategy == "even") return color_even_bipartite(g);
  if (strategy == "doubling") return color_via_doubling(g);
  if (strategy == "deg5") return color_deg5(g);
  if (strategy == "grid") return color_grid_graph(g);
  if (strategy == "kab") return color_complete_bipartite_graph(g);
  return color_biregular_auto(g);
}

int run_color(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = parse_graph(read_input(o.input, in));
  const ConstructionResult r = construct(o.strategy, g);
  write_output(o.output, serialize_coloring(g, r.coloring), out);
  out << "palettes=" << count_palettes(g, r.coloring) << " bound=" << r.claimed_palette_bound
      << " theorem=" << r.theorem_tag << '\n';
  return kExitOk;
}

int run_exact(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = parse_graph(read_input(o.input, in));
  SearchLimits limits;
  limits.max_nodes = o.max_nodes;
  limits.max_seconds = o.max_seconds;
  limits.workers = o.workers;
  if (o.max_colors > 0) limits.max_colors = o.max_colors;
  const PaletteIndexResult r = palette_index_exact(g, limits);
  if (r.witness.size() == g.edge_count() && r.witness.is_total()) {
    write_output(o.output, serialize_coloring(g, r.witness), out);
  }
  out << "palette_index=" << r.value << " proved=" << as_bool(r.proved);
  if (r.conditional) out << " conditional=true";
  out << '\n';
  return r.proved ? kExitOk : kExitBudget;
}

int run_bounds(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = parse_graph(read_input(o.input, in));
  std::optional<std::size_t> chi;
  if (g.is_regular() && g.edge_count() > 0 && g.edge_count() <= 64 && !g.has_loops()) {
    SearchLimits limits;
    limits.max_nodes = 1'000'000;
    limits.max_seconds = 5;
    const ChromaticIndexResult c = chromatic_index_exact(g, limits);
    if (c.proved) chi = c.value;
  }
  const BoundReport report = upper_bound_catalog(g, chi);
  for (const BoundEntry& e : report.entries) {
    out << (e.direction == Direction::Lower ? "lower " : "upper ") << e.value << ' ' << e.tag << '\n';
  }
  out << "best_lower=" << report.lower.value << " best_upper=" << report.upper.value
      << " lower_tag=" << report.lower.tag << " upper_tag=" << report.upper.tag << '\n';
  return kExitOk;
}

int run_verify(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = parse_graph(read_input(o.input, in));
  const ColoringFile file = parse_coloring(read_input(o.coloring_path, in));
  if (file.coloring.size() != g.edge_count()) {
    throw UsageError("coloring has " + std::to_string(file.coloring.size()) + " edges, graph has " +
                     std::to_string(g.edge_count()));
  }
  const auto violations = verify_proper(g, file.coloring);
  for (const Violation& v : violations) {
    out << "violation vertex=" << v.vertex + 1 << " edges=" << v.first + 1 << ',' << v.second + 1
        << " color=" << v.color << '\n';
  }
  if (!violations.empty()) {
    out << "proper=false violations=" << violations.size() << '\n';
    return kExitFailure;
  }
  out << "proper=true palettes=" << count_palettes(g, file.coloring) << '\n';
  return kExitOk;
}

int run_classify(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = parse_graph(read_input(o.input, in));
  out << classify_full_palette(g).family << '\n';
  return kExitOk;
}

int run_suite_command(const Options& o, std::ostream& out, std::ostream& err) {
  SuiteOptions options;
  options.filter = o.filter;
  options.slow = o.slow;
  options.threads = o.threads;
  const SuiteReport report = run_suite(options);
  out << report.machine_lines();
  err << report.human_summary();
  return report.all_passed() ? kExitOk : kExitFailure;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Palette index toolkit: constructions, bounds and exact search"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Write a generated graph as a GraphFile");
  gen->add_option("--family", o.family, "Graph family")
      ->required()
      ->check(CLI::IsMember({"grid", "kab", "biregular", "star"}));
  gen->add_option("--m", o.m, "Grid rows");
  gen->add_option("--n", o.n, "Grid columns");
  gen->add_option("--a", o.a, "Smaller degree / first part size");
  gen->add_option("--b", o.b, "Larger degree / second part size");
  gen->add_option("--scale", o.scale, "Random biregular size multiplier")->check(CLI::PositiveNumber);
  gen->add_option("--seed", o.seed, "Random seed");
  gen->add_option("--leaves", o.leaves, "Star leaves");
  gen->add_option("-o,--output", o.output, "Output path (default standard output)");

  auto* color = app.add_subcommand("color", "Color a graph with a construction");
  color->add_option("--strategy", o.strategy, "Construction")
      ->check(CLI::IsMember({"auto", "even", "doubling", "deg5", "grid", "kab", "biregular"}));
  color->add_option("graph", o.input, "GraphFile path, - for standard input");
  color->add_option("-o,--output", o.output, "ColoringFile path (default standard output)");

  auto* exact = app.add_subcommand("exact", "Compute the palette index exactly");
  exact->add_option("--max-nodes", o.max_nodes, "Search node budget")->check(CLI::PositiveNumber);
  exact->add_option("--max-seconds", o.max_seconds, "Search time budget")->check(CLI::PositiveNumber);
  exact->add_option("--max-colors", o.max_colors, "Cap on colors; results become conditional");
  exact->add_option("--workers", o.workers, "Parallel search workers")->check(CLI::PositiveNumber);
  exact->add_option("graph", o.input, "GraphFile path, - for standard input");
  exact->add_option("-o,--output", o.output, "Witness ColoringFile path (default standard output)");

  auto* bounds = app.add_subcommand("bounds", "List applicable lower and upper bounds");
  bounds->add_option("graph", o.input, "GraphFile path, - for standard input");

  auto* verify = app.add_subcommand("verify", "Check that a coloring is proper");
  verify->add_option("graph", o.input, "GraphFile path")->required();
  verify->add_option("coloring", o.coloring_path, "ColoringFile path")->required();

  auto* classify = app.add_subcommand("classify", "Recognize graphs whose palette index equals their order");
  classify->add_option("graph", o.input, "GraphFile path, - for standard input");

  auto* suite = app.add_subcommand("suite", "Run the reproduction suite");
  suite->add_option("--filter", o.filter, "Substring of case ids to run");
  suite->add_flag("--slow", o.slow, "Include the six-vertex sweep");
  suite->add_option("--threads", o.threads, "Worker threads (default PALETTE_SUITE_THREADS or 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return run_gen(o, out);
    if (*color) return run_color(o, in, out);
    if (*exact) return run_exact(o, in, out);
    if (*bounds) return run_bounds(o, in, out);
    if (*verify) return run_verify(o, in, out);
    if (*classify) return run_classify(o, in, out);
    return run_suite_command(o, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConstructionError& e) {
    err << "not applicable: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace palette
