#include "palette/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace palette {
namespace {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Drops isolated vertices, keeping relative order.
Graph compact(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<VertexId> id(n, 0);
  std::vector<char> used(n, 0);
  for (const Edge& e : edges) used[e.u] = used[e.v] = 1;
  VertexId next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (used[v]) id[v] = next++;
  }
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.push_back({id[e.u], id[e.v]});
  return Graph(next, std::move(out));
}

std::pair<VertexId, VertexId> key(VertexId a, VertexId b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace

Graph gen_random_even_bipartite(std::size_t delta, std::uint64_t seed) {
  if (delta < 2 || delta % 2 != 0) throw std::invalid_argument("even bipartite generator: delta must be even");
  Rng rng(seed);
  while (true) {
    const std::size_t nx = uniform(rng, delta, delta + 3);
    const std::size_t ny = uniform(rng, delta, delta + 3);
    std::vector<std::size_t> degree(nx + ny, 0);
    std::set<std::pair<VertexId, VertexId>> present;
    std::vector<Edge> edges;
    std::vector<VertexId> xs(nx);
    std::vector<VertexId> ys(ny);
    std::iota(xs.begin(), xs.end(), VertexId{0});
    std::iota(ys.begin(), ys.end(), static_cast<VertexId>(nx));
    const std::size_t attempts = 12 * (nx + ny);
    for (std::size_t t = 0; t < attempts; ++t) {
      const std::size_t half = uniform(rng, 0, 1) == 0 ? 2 : 3;
      std::shuffle(xs.begin(), xs.end(), rng);
      std::shuffle(ys.begin(), ys.end(), rng);
      std::vector<Edge> cycle;
      for (std::size_t i = 0; i < half; ++i) {
        cycle.push_back({xs[i], ys[i]});
        cycle.push_back({ys[i], xs[(i + 1) % half]});
      }
      bool ok = true;
      for (std::size_t i = 0; i < half && ok; ++i) {
        ok = degree[xs[i]] + 2 <= delta && degree[ys[i]] + 2 <= delta;
      }
      for (const Edge& e : cycle) ok = ok && !present.count(key(e.u, e.v));
      if (!ok) continue;
      for (const Edge& e : cycle) {
        present.insert(key(e.u, e.v));
        ++degree[e.u];
        ++degree[e.v];
        edges.push_back(e);
      }
    }
    if (*std::max_element(degree.begin(), degree.end()) == delta) return compact(nx + ny, edges);
  }
}

Graph gen_palette_two_union(std::uint64_t seed) {
  Rng rng(seed);
  while (true) {
    const std::size_t k = uniform(rng, 3, 5);
    const std::size_t n = 2 * k;
    const std::size_t d2 = uniform(rng, 1, 2);
    const std::size_t s = uniform(rng, 1, k - 1);
    const std::size_t d1 = s >= 2 ? uniform(rng, 1, 2) : 1;

    std::set<std::pair<VertexId, VertexId>> present;
    std::vector<Edge> edges;
    // Adds `rounds` disjoint perfect matchings of `verts`; false on failure.
    auto add_matchings = [&](std::vector<VertexId> verts, std::size_t rounds) {
      for (std::size_t r = 0; r < rounds; ++r) {
        bool placed = false;
        for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
          std::shuffle(verts.begin(), verts.end(), rng);
          placed = true;
          for (std::size_t i = 0; i < verts.size() && placed; i += 2) {
            placed = !present.count(key(verts[i], verts[i + 1]));
          }
        }
        if (!placed) return false;
        for (std::size_t i = 0; i < verts.size(); i += 2) {
          present.insert(key(verts[i], verts[i + 1]));
          edges.push_back({verts[i], verts[i + 1]});
        }
      }
      return true;
    };
    std::vector<VertexId> all(n);
    std::iota(all.begin(), all.end(), VertexId{0});
    std::vector<VertexId> subset = all;
    std::shuffle(subset.begin(), subset.end(), rng);
    subset.resize(2 * s);
    std::sort(subset.begin(), subset.end());
    if (add_matchings(all, d2) && add_matchings(subset, d1)) return Graph(n, std::move(edges));
  }
}

std::vector<Graph> small_regular_graphs(std::size_t max_edges) {
  std::vector<Graph> out;
  for (std::size_t k = 1; k <= max_edges; ++k) {
    std::vector<Edge> edges;
    for (VertexId i = 0; i < k; ++i) edges.push_back({2 * i, 2 * i + 1});
    out.emplace_back(2 * k, std::move(edges));
  }
  // Unions of cycles: nondecreasing length sequences with total <= max_edges.
  std::vector<std::size_t> lengths;
  auto emit_cycles = [&](auto&& self, std::size_t min_len, std::size_t budget) -> void {
    if (!lengths.empty()) {
      Graph g;
      for (std::size_t len : lengths) g = disjoint_union(g, gen_cycle(len));
      out.push_back(std::move(g));
    }
    for (std::size_t len = min_len; len <= budget; ++len) {
      lengths.push_back(len);
      self(self, len, budget - len);
      lengths.pop_back();
    }
  };
  emit_cycles(emit_cycles, 3, max_edges);
  // Connected cubic graphs on 4 and 6 vertices, and K5.
  if (max_edges >= 6) out.push_back(gen_complete(4));
  if (max_edges >= 9) {
    out.push_back(gen_complete_bipartite(3, 3));
    out.push_back(Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}));
  }
  if (max_edges >= 10) out.push_back(gen_complete(5));
  if (max_edges > 10) throw std::invalid_argument("small_regular_graphs: supports at most 10 edges");
  return out;
}

std::vector<Graph> oracle_corpus(std::size_t count, std::size_t max_edges, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  while (out.size() < count) {
    const std::size_t n = uniform(rng, 2, 7);
    const std::size_t m = uniform(rng, 1, max_edges);
    const bool multi = uniform(rng, 0, 3) == 0;
    std::set<std::pair<VertexId, VertexId>> present;
    std::vector<Edge> edges;
    for (std::size_t t = 0; t < 8 * m && edges.size() < m; ++t) {
      const auto u = static_cast<VertexId>(uniform(rng, 0, n - 1));
      const auto v = static_cast<VertexId>(uniform(rng, 0, n - 1));
      if (u == v) continue;
      if (!multi && present.count(key(u, v))) continue;
      present.insert(key(u, v));
      edges.push_back({u, v});
    }
    out.push_back(compact(n, edges));
  }
  return out;
}

std::vector<Graph> all_graphs_without_isolated(std::size_t n) {
  if (n > 8) throw std::invalid_argument("all_graphs_without_isolated: n > 8");
  std::vector<Edge> pairs;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) pairs.push_back({i, j});
  }
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    std::uint32_t covered = 0;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (mask >> p & 1) covered |= (1u << pairs[p].u) | (1u << pairs[p].v);
    }
    if (covered != (1u << n) - 1) continue;
    std::vector<Edge> edges;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (mask >> p & 1) edges.push_back(pairs[p]);
    }
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

std::uint64_t canonical_form(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 8 || !g.is_simple()) throw std::invalid_argument("canonical_form: needs a simple graph on <= 8 vertices");
  std::vector<std::uint8_t> adj(n * n, 0);
  for (const Edge& e : g.edges()) adj[e.u * n + e.v] = adj[e.v * n + e.u] = 1;
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j, ++bit) {
        if (adj[perm[i] * n + perm[j]]) code |= std::uint64_t{1} << bit;
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace palette
