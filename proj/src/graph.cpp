#include "palette/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>

namespace palette {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, bool loop_allowed)
    : edges_(std::move(edges)),
      incident_(vertex_count),
      degree_(vertex_count, 0),
      loop_allowed_(loop_allowed) {
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    if (u >= vertex_count || v >= vertex_count) {
      throw std::invalid_argument("edge " + std::to_string(e) + " has an endpoint outside [0, " +
                                  std::to_string(vertex_count) + ")");
    }
    if (u == v) {
      if (!loop_allowed) {
        throw std::invalid_argument("edge " + std::to_string(e) + " is a loop");
      }
      incident_[u].push_back(e);
      degree_[u] += 2;
    } else {
      incident_[u].push_back(e);
      incident_[v].push_back(e);
      ++degree_[u];
      ++degree_[v];
    }
  }
}

std::size_t Graph::max_degree() const {
  return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

std::size_t Graph::min_degree() const {
  return degree_.empty() ? 0 : *std::min_element(degree_.begin(), degree_.end());
}

std::set<std::size_t> Graph::degree_set() const { return {degree_.begin(), degree_.end()}; }

bool Graph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.u == e.v; });
}

bool Graph::has_parallel_edges() const {
  std::vector<std::pair<VertexId, VertexId>> keys;
  keys.reserve(edges_.size());
  for (const auto& [u, v] : edges_) keys.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) != keys.end();
}

bool Graph::has_isolated_vertices() const {
  return std::find(degree_.begin(), degree_.end(), 0) != degree_.end();
}

bool Graph::is_regular() const { return degree_set().size() <= 1; }

bool Graph::is_even() const {
  return std::all_of(degree_.begin(), degree_.end(), [](std::size_t d) { return d % 2 == 0; });
}

Graph Graph::edge_subgraph(std::span<const EdgeId> edge_ids) const {
  std::vector<Edge> sub;
  sub.reserve(edge_ids.size());
  for (EdgeId e : edge_ids) sub.push_back(edges_.at(e));
  return Graph(vertex_count(), std::move(sub), loop_allowed_);
}

Graph build_graph(std::size_t vertex_count, std::vector<Edge> edges, bool loop_allowed) {
  return Graph(vertex_count, std::move(edges), loop_allowed);
}

std::size_t Bipartition::count(Side s) const {
  return static_cast<std::size_t>(std::count(side_of.begin(), side_of.end(), s));
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Bipartition bip{std::vector<Side>(n, Side::X)};
  std::vector<bool> seen(n, false);
  std::queue<VertexId> queue;
  for (VertexId root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    bip.side_of[root] = Side::X;
    queue.push(root);
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop();
      for (EdgeId e : g.incident(v)) {
        const VertexId w = g.other(e, v);
        if (w == v) return std::nullopt;
        if (!seen[w]) {
          seen[w] = true;
          bip.side_of[w] = opposite(bip.side_of[v]);
          queue.push(w);
        } else if (bip.side_of[w] == bip.side_of[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return bip;
}

std::optional<BiregularLayout> biregular_layout(const Graph& g) {
  if (g.edge_count() == 0 || g.has_isolated_vertices()) return std::nullopt;
  auto bip = bipartition(g);
  if (!bip) return std::nullopt;

  // Degrees found on each side of every component; a component whose sides
  // are not degree-homogeneous rules the graph out.
  std::size_t a = 0;
  std::size_t b = 0;
  for (const auto& comp : components(g)) {
    std::size_t dx = 0;
    std::size_t dy = 0;
    for (VertexId local = 0; local < comp.vertex_map.size(); ++local) {
      const VertexId v = comp.vertex_map[local];
      std::size_t& slot = bip->side(v) == Side::X ? dx : dy;
      if (slot == 0) {
        slot = g.degree(v);
      } else if (slot != g.degree(v)) {
        return std::nullopt;
      }
    }
    const std::size_t lo = std::min(dx, dy);
    const std::size_t hi = std::max(dx, dy);
    if (a == 0) {
      a = lo;
      b = hi;
    } else if (a != lo || b != hi) {
      return std::nullopt;
    }
    if (dx != lo) {
      for (VertexId v : comp.vertex_map) bip->side_of[v] = opposite(bip->side_of[v]);
    }
  }
  BiregularLayout layout;
  layout.profile = {a, b, bip->count(Side::X), bip->count(Side::Y)};
  layout.sides = std::move(*bip);
  return layout;
}

std::optional<BiregularProfile> biregular_profile(const Graph& g) {
  auto layout = biregular_layout(g);
  if (!layout) return std::nullopt;
  return layout->profile;
}

Graph gen_complete_bipartite(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite dimensions must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(a * b);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(a + j)});
    }
  }
  return Graph(a + b, std::move(edges));
}

Graph gen_grid(std::size_t m, std::size_t n) {
  if (m < 2 || n < 2) throw std::invalid_argument("grid dimensions must be >= 2");
  auto id = [n](std::size_t i, std::size_t j) { return static_cast<VertexId>(i * n + j); };
  std::vector<Edge> edges;
  edges.reserve(m * (n - 1) + n * (m - 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) edges.push_back({id(i, j), id(i, j + 1)});
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) edges.push_back({id(i, j), id(i + 1, j)});
  }
  return Graph(m * n, std::move(edges));
}

Graph gen_random_biregular(std::size_t a, std::size_t b, std::size_t scale, std::uint64_t seed) {
  if (a < 1 || a > b) throw std::invalid_argument("biregular generator needs 1 <= a <= b");
  if (scale < 1) throw std::invalid_argument("biregular generator needs scale >= 1");
  const std::size_t g = std::gcd(a, b);
  const std::size_t k = g + scale - 1;
  const std::size_t x_count = k * b / g;
  const std::size_t y_count = k * a / g;
  const std::size_t budget = 10 * scale * b;

  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  std::vector<VertexId> stubs;
  std::vector<VertexId> candidates;
  std::vector<std::uint32_t> mark(x_count, UINT32_MAX);
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    stubs.clear();
    for (VertexId x = 0; x < x_count; ++x) stubs.insert(stubs.end(), a, x);
    edges.clear();
    bool stuck = false;
    for (std::size_t yi = 0; yi < y_count && !stuck; ++yi) {
      const auto y = static_cast<VertexId>(x_count + yi);
      const auto tag = static_cast<std::uint32_t>(attempt * y_count + yi);
      for (std::size_t s = 0; s < b; ++s) {
        candidates.clear();
        for (std::size_t idx = 0; idx < stubs.size(); ++idx) {
          if (mark[stubs[idx]] != tag) candidates.push_back(static_cast<VertexId>(idx));
        }
        if (candidates.empty()) {
          stuck = true;
          break;
        }
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        const std::size_t idx = candidates[pick(rng)];
        const VertexId x = stubs[idx];
        stubs[idx] = stubs.back();
        stubs.pop_back();
        mark[x] = tag;
        edges.push_back({x, y});
      }
    }
    if (stuck) continue;
    std::sort(edges.begin(), edges.end(),
              [](const Edge& l, const Edge& r) { return std::pair(l.u, l.v) < std::pair(r.u, r.v); });
    return Graph(x_count + y_count, std::move(edges));
  }
  if (b > x_count) throw std::runtime_error("random biregular generation exhausted its restart budget");

  // Dense profiles: start from the circulant graph where y_j takes the b
  // consecutive X-vertices from j*b (mod |X|), then apply random switches
  // (x1 y1, x2 y2) -> (x1 y2, x2 y1) that keep the graph simple.
  edges.clear();
  std::set<std::pair<VertexId, VertexId>> present;
  for (std::size_t yi = 0; yi < y_count; ++yi) {
    for (std::size_t t = 0; t < b; ++t) {
      const auto x = static_cast<VertexId>((yi * b + t) % x_count);
      const auto y = static_cast<VertexId>(x_count + yi);
      edges.push_back({x, y});
      present.emplace(x, y);
    }
  }
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  for (std::size_t swap = 0; swap < 20 * edges.size(); ++swap) {
    Edge& e1 = edges[pick(rng)];
    Edge& e2 = edges[pick(rng)];
    if (e1.u == e2.u || e1.v == e2.v) continue;
    if (present.count({e1.u, e2.v}) || present.count({e2.u, e1.v})) continue;
    present.erase({e1.u, e1.v});
    present.erase({e2.u, e2.v});
    std::swap(e1.v, e2.v);
    present.emplace(e1.u, e1.v);
    present.emplace(e2.u, e2.v);
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& l, const Edge& r) { return std::pair(l.u, l.v) < std::pair(r.u, r.v); });
  return Graph(x_count + y_count, std::move(edges));
}

Graph gen_star(std::size_t leaves) { return gen_complete_bipartite(1, leaves); }

Graph gen_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) edges.push_back({i, static_cast<VertexId>((i + 1) % n)});
  return Graph(n, std::move(edges));
}

Graph gen_path(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph gen_complete(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges));
}

Graph gen_petersen() {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return Graph(10, std::move(edges));
}

Graph disjoint_union(const Graph& first, const Graph& second) {
  const auto shift = static_cast<VertexId>(first.vertex_count());
  std::vector<Edge> edges(first.edges().begin(), first.edges().end());
  for (const auto& [u, v] : second.edges()) edges.push_back({u + shift, v + shift});
  return Graph(first.vertex_count() + second.vertex_count(), std::move(edges),
               first.loop_allowed() || second.loop_allowed());
}

EvenClosure even_closure(const Graph& g) {
  if (g.has_loops() || !bipartition(g)) {
    throw std::invalid_argument("even closure needs a loop-free bipartite graph");
  }
  const auto n = static_cast<VertexId>(g.vertex_count());
  const auto m = static_cast<EdgeId>(g.edge_count());
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (const auto& [u, v] : g.edges()) edges.push_back({u + n, v + n});
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) % 2 == 1) edges.push_back({v, v + n});
  }
  EvenClosure closure{Graph(2 * g.vertex_count(), std::move(edges)), std::vector<EdgeId>(m)};
  std::iota(closure.embedding.begin(), closure.embedding.end(), EdgeId{0});
  return closure;
}

std::vector<Component> components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> comp_of(n, -1);
  std::vector<std::vector<VertexId>> members;
  for (VertexId root = 0; root < n; ++root) {
    if (comp_of[root] >= 0) continue;
    const int c = static_cast<int>(members.size());
    members.emplace_back();
    std::vector<VertexId> stack{root};
    comp_of[root] = c;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      members[c].push_back(v);
      for (EdgeId e : g.incident(v)) {
        const VertexId w = g.other(e, v);
        if (comp_of[w] < 0) {
          comp_of[w] = c;
          stack.push_back(w);
        }
      }
    }
  }

  std::vector<VertexId> local_id(n);
  std::vector<Component> out;
  out.reserve(members.size());
  std::vector<std::vector<EdgeId>> edge_lists(members.size());
  for (EdgeId e = 0; e < g.edge_count(); ++e) edge_lists[comp_of[g.edge(e).u]].push_back(e);
  for (std::size_t c = 0; c < members.size(); ++c) {
    auto& verts = members[c];
    std::sort(verts.begin(), verts.end());
    for (VertexId i = 0; i < verts.size(); ++i) local_id[verts[i]] = i;
    std::vector<Edge> edges;
    edges.reserve(edge_lists[c].size());
    for (EdgeId e : edge_lists[c]) edges.push_back({local_id[g.edge(e).u], local_id[g.edge(e).v]});
    out.push_back({Graph(verts.size(), std::move(edges), g.loop_allowed()), verts,
                   std::move(edge_lists[c])});
  }
  return out;
}

}  // namespace palette

namespace palette {

std::optional<std::pair<std::size_t, std::size_t>> recognize_grid(const Graph& g) {
  const std::size_t n_vertices = g.vertex_count();
  auto key_set = [](const Graph& h) {
    std::vector<std::pair<VertexId, VertexId>> keys;
    for (const auto& [u, v] : h.edges()) keys.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(keys.begin(), keys.end());
    return keys;
  };
  const auto mine = key_set(g);
  for (std::size_t m = 2; m * 2 <= n_vertices; ++m) {
    if (n_vertices % m != 0) continue;
    const std::size_t n = n_vertices / m;
    if (m * (n - 1) + n * (m - 1) != g.edge_count()) continue;
    if (key_set(gen_grid(m, n)) == mine) return std::pair(m, n);
  }
  return std::nullopt;
}

}  // namespace palette
