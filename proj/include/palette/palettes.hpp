#pragma once

#include <map>
#include <vector>

#include "palette/coloring.hpp"
#include "palette/graph.hpp"

namespace palette {

/// Sorted list of the colors on the edges at a vertex.
using Palette = std::vector<Color>;

struct Violation {
  VertexId vertex;
  EdgeId first;
  EdgeId second;
  Color color;
};

/// One entry per vertex and per pair of its edges sharing a color. Throws
/// std::invalid_argument when the coloring is partial or sized wrongly.
std::vector<Violation> verify_proper(const Graph& g, const EdgeColoring& c);

inline bool is_proper(const Graph& g, const EdgeColoring& c) { return verify_proper(g, c).empty(); }

struct PaletteSummary {
  std::vector<Palette> palette_of;
  std::size_t distinct_palettes = 0;
  std::map<Palette, std::size_t> multiplicity;
};

/// Throws std::invalid_argument when the coloring is partial or improper.
PaletteSummary palette_summary(const Graph& g, const EdgeColoring& c);

/// Shorthand for palette_summary(g, c).distinct_palettes.
std::size_t count_palettes(const Graph& g, const EdgeColoring& c);

}  // namespace palette
