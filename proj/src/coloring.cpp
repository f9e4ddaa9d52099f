#include "palette/coloring.hpp"

#include <algorithm>
#include <set>

namespace palette {

bool EdgeColoring::is_total() const {
  return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c <= 0; });
}

std::size_t EdgeColoring::colors_used() const {
  std::set<Color> seen;
  for (Color c : colors_) {
    if (c != kUncolored) seen.insert(c);
  }
  return seen.size();
}

Color EdgeColoring::max_color() const {
  return colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
}

}  // namespace palette
