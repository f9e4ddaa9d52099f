#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "palette/coloring.hpp"
#include "palette/graph.hpp"

namespace palette {

/// Saturating bound arithmetic; formulas such as 2^(D+1)-2 overflow quickly.
using Bound = std::uint64_t;

Bound binomial(std::uint64_t n, std::uint64_t k);

struct ConstructionResult {
  EdgeColoring coloring;
  /// Palette count the construction guarantees for this graph.
  Bound claimed_palette_bound = 0;
  std::string theorem_tag;
  std::size_t colors_used = 0;
};

/// Thrown when a construction's precondition does not hold for its input.
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Even bipartite graph: pad to a D-regular multigraph with loops, take a
/// 2-factorization and colour the cycles of factor i alternately 2i-1, 2i.
/// Bound: sum over degrees d of C(D/2, d/2).
ConstructionResult color_even_bipartite(const Graph& g);

/// Any bipartite graph: colour the even closure, restrict to copy 1.
ConstructionResult color_via_doubling(const Graph& g);

/// Bipartite with maximum degree 5: a matching M covering every degree-5
/// vertex (a perfect matching when one exists) gets color 5, the rest is
/// coloured by doubling with colors 1..4. Bound 23, or 12 with a perfect
/// matching.
ConstructionResult color_deg5(const Graph& g);

/// Palette index of the m x n grid (m, n >= 2).
Bound grid_palette_index(std::size_t m, std::size_t n);

/// Coloring of gen_grid(m, n) whose palette count equals grid_palette_index.
ConstructionResult color_grid(std::size_t m, std::size_t n);

/// color_grid for a graph with the vertex labeling and edge set of some
/// gen_grid(m, n), in any edge order.
ConstructionResult color_grid_graph(const Graph& g);

/// Coloring of gen_complete_bipartite(a, b), a < b, with 1 + b/gcd(a,b)
/// palettes.
ConstructionResult color_complete_bipartite(std::size_t a, std::size_t b);

/// Any labeling of K_{a,b} with a < b, through color_complete_bipartite.
ConstructionResult color_complete_bipartite_graph(const Graph& g);

/// (3,3r)-biregular, or (3r-3,3r) when `variant` is set; bound r^2 + 1.
ConstructionResult color_3_3r(const Graph& g, bool variant = false);

/// (4,4r)-biregular, or (4r-4,4r) when `variant` is set; bound r^2 + 1.
ConstructionResult color_4_4r(const Graph& g, bool variant = false);

/// (5,5r)-biregular; bound r^3 + 1.
ConstructionResult color_5_5r(const Graph& g);

/// (r,2r)-biregular; bound 2^ceil(r/2) + 1.
ConstructionResult color_r_2r(const Graph& g);

/// (3,5)-biregular; bound 7.
ConstructionResult color_3_5(const Graph& g);

/// (2,2r+1)-biregular via an interval (2r+2)-coloring folded modulo 2r+1;
/// bound 2r+2. Throws std::runtime_error if the interval search exceeds
/// `node_budget` expansions.
ConstructionResult color_2_odd(const Graph& g, std::uint64_t node_budget = 10'000'000);

/// (1,b)-biregular (disjoint stars): every star's edges get 1..b; bound b+1.
ConstructionResult color_star_forest(const Graph& g);

/// König coloring with the bound 1 + C(b,a) for (a,b)-biregular graphs
/// (1 for regular bipartite graphs).
ConstructionResult color_biregular_konig(const Graph& g);

/// Routes a biregular graph to every applicable construction and keeps the
/// one with the smallest claimed bound (earliest candidate on ties).
ConstructionResult color_biregular_auto(const Graph& g);

/// Best construction for an arbitrary graph: biregular routing, grids,
/// bipartite constructions, and Vizing's Delta+1 coloring as a fallback.
ConstructionResult color_auto(const Graph& g);

}  // namespace palette
