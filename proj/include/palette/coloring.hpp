#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "palette/graph.hpp"

namespace palette {

using Color = int;

/// Edge-index -> color assignment. Colors are positive; 0 marks an edge that
/// is still uncolored while a construction is in progress.
class EdgeColoring {
 public:
  static constexpr Color kUncolored = 0;

  EdgeColoring() = default;
  explicit EdgeColoring(std::size_t edge_count) : colors_(edge_count, kUncolored) {}
  explicit EdgeColoring(std::vector<Color> colors) : colors_(std::move(colors)) {}

  std::size_t size() const { return colors_.size(); }
  Color operator[](EdgeId e) const { return colors_[e]; }
  Color& operator[](EdgeId e) { return colors_[e]; }
  std::span<const Color> colors() const { return colors_; }

  bool is_total() const;
  /// Number of distinct colors in use.
  std::size_t colors_used() const;
  Color max_color() const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::vector<Color> colors_;
};

}  // namespace palette
