#include "palette/palettes.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace palette {

std::vector<Violation> verify_proper(const Graph& g, const EdgeColoring& c) {
  if (c.size() != g.edge_count()) {
    throw std::invalid_argument("coloring has " + std::to_string(c.size()) + " entries for " +
                                std::to_string(g.edge_count()) + " edges");
  }
  if (!c.is_total()) throw std::invalid_argument("coloring is partial");
  std::vector<Violation> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        if (c[inc[i]] == c[inc[j]]) out.push_back({v, inc[i], inc[j], c[inc[i]]});
      }
    }
  }
  return out;
}

PaletteSummary palette_summary(const Graph& g, const EdgeColoring& c) {
  const auto violations = verify_proper(g, c);
  if (!violations.empty()) {
    const auto& bad = violations.front();
    throw std::invalid_argument("coloring is improper at vertex " + std::to_string(bad.vertex));
  }
  PaletteSummary s;
  s.palette_of.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Palette& p = s.palette_of[v];
    for (EdgeId e : g.incident(v)) p.push_back(c[e]);
    std::sort(p.begin(), p.end());
    ++s.multiplicity[p];
  }
  s.distinct_palettes = s.multiplicity.size();
  return s;
}

std::size_t count_palettes(const Graph& g, const EdgeColoring& c) {
  return palette_summary(g, c).distinct_palettes;
}

}  // namespace palette
