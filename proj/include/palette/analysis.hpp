#pragma once

#include <optional>
#include <string>
#include <vector>

#include "palette/coloring.hpp"
#include "palette/constructions.hpp"
#include "palette/exact.hpp"
#include "palette/graph.hpp"

namespace palette {

struct TaggedBound {
  Bound value = 0;
  std::string tag;
};

/// Largest applicable lower bound on the palette index:
///   distinct-degrees      number of distinct vertex degrees
///   biregular-ratio       1 + ceil(b/a) for (a,b)-biregular, a < b
///   biregular-3-5         5 for (3,5)-biregular
///   biregular-2-odd       r + 2 for (2,2r+1)-biregular
///   regular-class         1 (Class 1) or 3 (Class 2) for regular graphs
///                         when the chromatic index is supplied
///   grid                  exact value for gen_grid-labeled grids
/// Ties keep the earlier rule. Throws std::invalid_argument on isolated
/// vertices.
TaggedBound palette_lower_bound(const Graph& g, std::optional<std::size_t> chi_prime = {});

enum class Direction { Lower, Upper };

struct BoundEntry {
  Bound value = 0;
  Direction direction = Direction::Upper;
  std::string tag;
  std::string note;
  /// False for formulas cataloged without a construction behind them.
  bool constructed = true;
};

struct BoundReport {
  TaggedBound lower;
  TaggedBound upper;
  std::vector<BoundEntry> entries;
  /// Coloring from the best applicable construction, when one succeeded.
  std::optional<EdgeColoring> witness;
};

/// Every applicable lower and upper bound for g, in a fixed order. Throws
/// std::invalid_argument on isolated vertices.
BoundReport upper_bound_catalog(const Graph& g, std::optional<std::size_t> chi_prime = {});

struct FullPaletteClass {
  bool full = false;
  /// K3, star, K3-pendants, K3-star-bridge, K3+star, K1, empty or none;
  /// "+K1" is appended when a single isolated vertex was stripped.
  std::string family = "none";
};

/// Recognizes the graphs whose palette index equals their order. Throws
/// std::invalid_argument on loops or parallel edges.
FullPaletteClass classify_full_palette(const Graph& g);

struct PaletteTwoCertificate {
  /// Witness after recoloring so that the colors at minimum-degree vertices
  /// are a subset of those at maximum-degree vertices.
  EdgeColoring coloring;
  std::vector<EdgeId> h1;
  std::vector<EdgeId> h2;
  std::size_t h1_degree = 0;
  std::size_t h2_degree = 0;
};

struct PaletteTwoDecision {
  bool is_two = false;
  /// False when the exact search ran out of budget.
  bool proved = false;
  std::size_t palette_index = 0;
  std::optional<PaletteTwoCertificate> certificate;
};

/// Decides whether the palette index is 2 with the exact solver and, if so,
/// splits g into regular Class 1 graphs H1, H2 with V(H1) inside V(H2).
PaletteTwoDecision decide_palette_two(const Graph& g, const SearchLimits& limits = {});

/// Common degree of the vertices touched by `edges` in that edge subgraph;
/// nullopt when the degrees differ or `edges` is empty.
std::optional<std::size_t> subgraph_regular_degree(const Graph& g, const std::vector<EdgeId>& edges);

}  // namespace palette
