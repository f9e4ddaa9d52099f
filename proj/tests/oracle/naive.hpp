#pragma once

// Test-only reference computations. They use their own edge-list
// representation and try every assignment of colors 1..|E| to the edges, so
// they share no code or search order with the library.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

struct EdgeList {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

inline bool proper(const EdgeList& g, const std::vector<int>& color) {
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
      if (color[i] != color[j]) continue;
      const auto [a, b] = g.edges[i];
      const auto [c, d] = g.edges[j];
      if (a == c || a == d || b == c || b == d) return false;
    }
  }
  return true;
}

inline std::size_t palettes(const EdgeList& g, const std::vector<int>& color) {
  std::vector<std::vector<int>> at(g.n);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    at[g.edges[i].first].push_back(color[i]);
    at[g.edges[i].second].push_back(color[i]);
  }
  std::set<std::vector<int>> distinct;
  for (auto& p : at) {
    std::sort(p.begin(), p.end());
    distinct.insert(p);
  }
  return distinct.size();
}

// Calls visit(color) for every assignment in {1..k}^|E|.
template <typename Visit>
void each_assignment(std::size_t m, int k, Visit&& visit) {
  std::vector<int> color(m, 1);
  while (true) {
    visit(color);
    std::size_t i = 0;
    while (i < m && color[i] == k) color[i++] = 1;
    if (i == m) return;
    ++color[i];
  }
}

struct PaletteOracle {
  std::size_t value = 0;
  // Distinct partitions of E into matchings, counted by normalizing every
  // proper assignment to first-occurrence labels.
  std::uint64_t partitions = 0;
};

// Exhaustive over |E|^|E| assignments; meant for |E| <= 7.
inline PaletteOracle palette_index(const EdgeList& g) {
  const std::size_t m = g.edges.size();
  PaletteOracle out;
  out.value = m == 0 ? 1 : static_cast<std::size_t>(g.n) + 1;
  if (m == 0) {
    out.partitions = 1;
    return out;
  }
  std::set<std::vector<int>> seen;
  each_assignment(m, static_cast<int>(m), [&](const std::vector<int>& color) {
    if (!proper(g, color)) return;
    std::vector<int> label(m + 1, 0);
    std::vector<int> normal(m);
    int next = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (label[color[i]] == 0) label[color[i]] = ++next;
      normal[i] = label[color[i]];
    }
    if (!seen.insert(normal).second) return;
    out.value = std::min(out.value, palettes(g, color));
  });
  out.partitions = seen.size();
  return out;
}

inline std::size_t chromatic_index(const EdgeList& g) {
  const std::size_t m = g.edges.size();
  for (int k = 1;; ++k) {
    bool found = false;
    each_assignment(m, k, [&](const std::vector<int>& color) {
      if (!found && proper(g, color)) found = true;
    });
    if (found || m == 0) return static_cast<std::size_t>(k);
  }
}

}  // namespace oracle
