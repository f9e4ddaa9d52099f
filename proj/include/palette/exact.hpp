#pragma once

#include <cstdint>
#include <optional>

#include "palette/coloring.hpp"
#include "palette/graph.hpp"

namespace palette {

struct SearchLimits {
  std::uint64_t max_nodes = 200'000'000;
  double max_seconds = 600.0;
  /// Optional cap on the number of colors; results found under a cap are
  /// flagged as conditional.
  std::optional<std::size_t> max_colors;
  /// Worker threads for the palette search; 1 runs the serial kernel.
  std::size_t workers = 1;
};

struct PaletteIndexResult {
  std::size_t value = 0;
  /// Witness achieving `value`. Among all minimum colorings it is the
  /// lexicographically least restricted-growth assignment in search order.
  EdgeColoring witness;
  /// False when a budget ran out; `value` is then only an upper bound.
  bool proved = false;
  bool conditional = false;
  std::uint64_t nodes = 0;
};

/// Minimum number of distinct palettes over all proper edge colorings.
///
/// Branch and bound over partitions of E into matchings, enumerated as
/// restricted-growth color sequences (an edge may only open the next unused
/// color), with edges ordered by descending endpoint-degree sum. A node is
/// cut when the palettes frozen at saturated vertices plus the palettes that
/// unsaturated vertices are forced to add reach the incumbent. An isolated
/// vertex contributes the empty palette. Loops are rejected; |E| <= 64.
PaletteIndexResult palette_index_exact(const Graph& g, const SearchLimits& limits = {});

/// Number of partitions of E into matchings, as enumerated by the palette
/// search with pruning disabled.
std::uint64_t count_matching_partitions(const Graph& g);

struct BruteForceResult {
  std::size_t value = 0;
  /// Set partitions of E whose blocks are all matchings.
  std::uint64_t partitions = 0;
};

/// Reference enumeration without pruning: every set partition of E in
/// restricted-growth order, keeping those whose blocks are matchings.
/// |E| <= 14.
BruteForceResult palette_index_bruteforce(const Graph& g);

struct ChromaticIndexResult {
  std::size_t value = 0;
  bool proved = false;
  EdgeColoring witness;
};

/// Delta when a proper Delta-coloring exists, Delta + 1 otherwise. Bipartite
/// graphs short-circuit to König.
ChromaticIndexResult chromatic_index_exact(const Graph& g, const SearchLimits& limits = {});

/// Misra-Gries fan rotation: a proper coloring with at most Delta + 1 colors
/// of a simple graph.
EdgeColoring vizing_coloring(const Graph& g);

}  // namespace palette
