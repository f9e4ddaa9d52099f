#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "palette/coloring.hpp"
#include "palette/graph.hpp"

namespace palette {

/// Malformed GraphFile or ColoringFile text; `line()` is 1-based (0 when the
/// problem is not tied to a line, e.g. a missing header).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// "p <n> <m>" followed by m lines "e <u> <v>" (1-based endpoints). Lines
/// starting with '#' and blank lines are ignored.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

struct ColoringFile {
  std::size_t colors_used = 0;
  std::size_t distinct_palettes = 0;
  EdgeColoring coloring;
};

/// "s <colors_used> <distinct_palettes>" followed by one "c <edge> <color>"
/// line per edge (1-based edge index, any order). Comments, blank lines and
/// key=value summary lines are skipped so tool output can be read back.
ColoringFile parse_coloring(std::string_view text);

/// Header values are computed from g; the coloring must be total and proper.
std::string serialize_coloring(const Graph& g, const EdgeColoring& c);

}  // namespace palette
