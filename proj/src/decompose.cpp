#include "palette/decompose.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace palette {
namespace {

constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

// Kuhn augmenting-path step from an X vertex.
bool augment(const Graph& g, VertexId x, std::vector<EdgeId>& match, std::vector<char>& visited) {
  for (EdgeId e : g.incident(x)) {
    const VertexId y = g.other(e, x);
    if (visited[y]) continue;
    visited[y] = 1;
    if (match[y] == kNoEdge || augment(g, g.other(match[y], y), match, visited)) {
      match[y] = e;
      match[x] = e;
      return true;
    }
  }
  return false;
}

std::vector<EdgeId> kuhn_matching(const Graph& g, const Bipartition& bip) {
  const std::size_t n = g.vertex_count();
  std::vector<EdgeId> match(n, kNoEdge);
  std::vector<char> visited(n);
  for (VertexId x = 0; x < n; ++x) {
    if (bip.side(x) != Side::X || g.degree(x) == 0) continue;
    std::fill(visited.begin(), visited.end(), 0);
    augment(g, x, match, visited);
  }
  std::vector<EdgeId> edges;
  for (VertexId x = 0; x < n; ++x) {
    if (bip.side(x) == Side::X && match[x] != kNoEdge) edges.push_back(match[x]);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

// Peels `rounds` perfect matchings from a regular bipartite multigraph. Each
// returned matching holds edge ids of g.
std::vector<std::vector<EdgeId>> peel_perfect_matchings(const Graph& g, const Bipartition& bip,
                                                        std::size_t rounds) {
  std::vector<EdgeId> remaining(g.edge_count());
  for (EdgeId e = 0; e < remaining.size(); ++e) remaining[e] = e;
  const std::size_t side_size = bip.count(Side::X);
  std::vector<std::vector<EdgeId>> out;
  out.reserve(rounds);
  for (std::size_t t = 0; t < rounds; ++t) {
    const Graph sub = g.edge_subgraph(remaining);
    const auto local = kuhn_matching(sub, bip);
    if (local.size() != side_size) {
      throw std::logic_error("regular bipartite multigraph without a perfect matching");
    }
    std::vector<EdgeId> matched;
    matched.reserve(local.size());
    std::vector<char> taken(remaining.size(), 0);
    for (EdgeId le : local) {
      matched.push_back(remaining[le]);
      taken[le] = 1;
    }
    std::sort(matched.begin(), matched.end());
    std::vector<EdgeId> rest;
    rest.reserve(remaining.size() - local.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      if (!taken[i]) rest.push_back(remaining[i]);
    }
    remaining = std::move(rest);
    out.push_back(std::move(matched));
  }
  return out;
}

}  // namespace

std::vector<Circuit> eulerian_circuits(const Graph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) % 2 != 0) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " has odd degree");
    }
  }
  std::vector<char> used(g.edge_count(), 0);
  std::vector<std::size_t> cursor(g.vertex_count(), 0);
  std::vector<Circuit> out;
  for (const auto& comp : components(g)) {
    if (comp.graph.edge_count() == 0) continue;
    const VertexId start = comp.vertex_map.front();
    // Stack of (vertex, edge used to reach it).
    std::vector<std::pair<VertexId, EdgeId>> stack{{start, kNoEdge}};
    std::vector<EdgeId> reversed;
    while (!stack.empty()) {
      const VertexId v = stack.back().first;
      const auto inc = g.incident(v);
      std::size_t& cur = cursor[v];
      while (cur < inc.size() && used[inc[cur]]) ++cur;
      if (cur < inc.size()) {
        const EdgeId e = inc[cur];
        used[e] = 1;
        stack.emplace_back(g.other(e, v), e);
      } else {
        if (stack.back().second != kNoEdge) reversed.push_back(stack.back().second);
        stack.pop_back();
      }
    }
    Circuit c{start, {reversed.rbegin(), reversed.rend()}};
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<VertexId> circuit_vertices(const Graph& g, const Circuit& c) {
  std::vector<VertexId> walk{c.start};
  walk.reserve(c.edges.size() + 1);
  for (EdgeId e : c.edges) walk.push_back(g.other(e, walk.back()));
  return walk;
}

FactorSet two_factorization(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (!g.is_regular() || !g.is_even()) {
    throw std::invalid_argument("two-factorization needs an even regular multigraph");
  }
  const std::size_t r = n == 0 ? 0 : g.degree(0) / 2;
  if (r == 0) return {};

  // Orient every edge along its circuit; the out/in split graph is then
  // r-regular bipartite and each perfect matching pulls back to a 2-factor.
  std::vector<Edge> oriented(g.edge_count());
  for (const auto& c : eulerian_circuits(g)) {
    const auto walk = circuit_vertices(g, c);
    for (std::size_t k = 0; k < c.edges.size(); ++k) {
      oriented[c.edges[k]] = {walk[k], static_cast<VertexId>(walk[k + 1] + n)};
    }
  }
  const Graph split(2 * n, std::move(oriented));
  Bipartition bip{std::vector<Side>(2 * n, Side::Y)};
  std::fill(bip.side_of.begin(), bip.side_of.begin() + static_cast<std::ptrdiff_t>(n), Side::X);
  return {peel_perfect_matchings(split, bip, r)};
}

Matching maximum_matching(const Graph& g, const Bipartition& bip) {
  return {kuhn_matching(g, bip)};
}

EdgeColoring konig_coloring(const Graph& g, const Bipartition& bip) {
  if (g.has_loops()) throw std::invalid_argument("König coloring needs a loop-free graph");
  for (const auto& [u, v] : g.edges()) {
    if (bip.side(u) == bip.side(v)) {
      throw std::invalid_argument("König coloring needs a bipartite graph");
    }
  }
  const std::size_t delta = g.max_degree();
  EdgeColoring coloring(g.edge_count());
  if (delta == 0) return coloring;

  std::vector<VertexId> xs;
  std::vector<VertexId> ys;
  for (VertexId v = 0; v < g.vertex_count(); ++v) (bip.side(v) == Side::X ? xs : ys).push_back(v);
  auto next = static_cast<VertexId>(g.vertex_count());
  while (xs.size() < ys.size()) xs.push_back(next++);
  while (ys.size() < xs.size()) ys.push_back(next++);

  auto deficit = [&](VertexId v) { return v < g.vertex_count() ? delta - g.degree(v) : delta; };
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t dx = xs.empty() ? 0 : deficit(xs[0]);
  std::size_t dy = ys.empty() ? 0 : deficit(ys[0]);
  while (i < xs.size() && j < ys.size()) {
    if (dx == 0) {
      if (++i < xs.size()) dx = deficit(xs[i]);
      continue;
    }
    if (dy == 0) {
      if (++j < ys.size()) dy = deficit(ys[j]);
      continue;
    }
    const std::size_t take = std::min(dx, dy);
    edges.insert(edges.end(), take, Edge{xs[i], ys[j]});
    dx -= take;
    dy -= take;
  }

  const Graph padded(next, std::move(edges));
  Bipartition padded_bip{std::vector<Side>(next, Side::X)};
  for (VertexId y : ys) padded_bip.side_of[y] = Side::Y;
  const auto classes = peel_perfect_matchings(padded, padded_bip, delta);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (EdgeId e : classes[c]) {
      if (e < g.edge_count()) coloring[e] = static_cast<Color>(c + 1);
    }
  }
  return coloring;
}

Matching matching_covering_max_degree(const Graph& g, const Bipartition& bip) {
  const auto coloring = konig_coloring(g, bip);
  const std::size_t delta = g.max_degree();
  Matching m;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (coloring[e] != 1) continue;
    const auto [u, v] = g.edge(e);
    if (g.degree(u) == delta || g.degree(v) == delta) m.edge_ids.push_back(e);
  }
  return m;
}

SplitGraph split_part_vertices(const Graph& g, const Bipartition& bip, Side side,
                               std::size_t target) {
  if (target == 0) throw std::invalid_argument("split target must be positive");
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> first_copy(n);
  SplitGraph out;
  for (VertexId v = 0; v < n; ++v) {
    first_copy[v] = static_cast<VertexId>(out.back_map.size());
    std::size_t copies = 1;
    if (bip.side(v) == side) {
      if (g.degree(v) % target != 0) {
        throw std::invalid_argument("degree of vertex " + std::to_string(v) +
                                    " is not a multiple of the split target");
      }
      copies = std::max<std::size_t>(1, g.degree(v) / target);
    }
    out.back_map.insert(out.back_map.end(), copies, v);
  }

  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (VertexId v = 0; v < n; ++v) {
    if (bip.side(v) != side) {
      for (EdgeId e : g.incident(v)) {
        Edge& ed = edges[e];
        (g.edge(e).u == v ? ed.u : ed.v) = first_copy[v];
      }
      continue;
    }
    const auto inc = g.incident(v);
    for (std::size_t p = 0; p < inc.size(); ++p) {
      Edge& ed = edges[inc[p]];
      const auto copy = static_cast<VertexId>(first_copy[v] + p / target);
      (g.edge(inc[p]).u == v ? ed.u : ed.v) = copy;
    }
  }
  out.graph = Graph(out.back_map.size(), std::move(edges));
  return out;
}

ParitySplit parity_split(const Graph& g) {
  ParitySplit out;
  for (const auto& c : eulerian_circuits(g)) {
    if (c.edges.size() % 2 != 0) {
      throw std::invalid_argument("component containing vertex " + std::to_string(c.start) +
                                  " has an odd number of edges");
    }
    for (std::size_t k = 0; k < c.edges.size(); ++k) {
      (k % 2 == 0 ? out.red : out.blue).push_back(c.edges[k]);
    }
  }
  std::sort(out.red.begin(), out.red.end());
  std::sort(out.blue.begin(), out.blue.end());
  return out;
}

}  // namespace palette
