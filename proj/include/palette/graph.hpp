#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace palette {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite undirected multigraph with dense vertex and edge indices.
///
/// Edge i is the i-th entry of the edge list for the lifetime of the value.
/// Loops are rejected unless the graph is built with `loop_allowed`; a loop
/// contributes 2 to the degree of its vertex. Instances are immutable after
/// construction.
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on out-of-range endpoints or forbidden loops.
  Graph(std::size_t vertex_count, std::vector<Edge> edges, bool loop_allowed = false);

  std::size_t vertex_count() const { return degree_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool loop_allowed() const { return loop_allowed_; }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  /// Incident edges of v in ascending edge order; a loop is listed once.
  std::span<const EdgeId> incident(VertexId v) const { return incident_[v]; }
  std::size_t degree(VertexId v) const { return degree_[v]; }

  /// Endpoint of e that is not v (v itself for a loop).
  VertexId other(EdgeId e, VertexId v) const {
    const Edge& ed = edges_[e];
    return ed.u == v ? ed.v : ed.u;
  }

  std::size_t max_degree() const;
  std::size_t min_degree() const;
  std::set<std::size_t> degree_set() const;

  bool has_loops() const;
  bool has_parallel_edges() const;
  bool is_simple() const { return !has_loops() && !has_parallel_edges(); }
  bool has_isolated_vertices() const;
  bool is_regular() const;
  bool is_even() const;

  /// Same vertex set, edges taken in the given order. Edge i of the result
  /// is `edge_ids[i]` of this graph.
  Graph edge_subgraph(std::span<const EdgeId> edge_ids) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<std::size_t> degree_;
  bool loop_allowed_ = false;
};

Graph build_graph(std::size_t vertex_count, std::vector<Edge> edges, bool loop_allowed = false);

enum class Side : std::uint8_t { X, Y };

inline Side opposite(Side s) { return s == Side::X ? Side::Y : Side::X; }

struct Bipartition {
  std::vector<Side> side_of;

  Side side(VertexId v) const { return side_of[v]; }
  std::size_t count(Side s) const;
};

/// 2-coloring by breadth-first search. The lowest-id vertex of every
/// component (and every isolated vertex) is put on X. Absent when the graph
/// has an odd cycle (loops count as odd cycles).
std::optional<Bipartition> bipartition(const Graph& g);

/// Every X-vertex has degree a, every Y-vertex degree b; a <= b.
struct BiregularProfile {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t x_count = 0;
  std::size_t y_count = 0;

  friend bool operator==(const BiregularProfile&, const BiregularProfile&) = default;
};

struct BiregularLayout {
  BiregularProfile profile;
  /// X holds the degree-a vertices of every component. For a == b this is
  /// the plain BFS bipartition.
  Bipartition sides;
};

std::optional<BiregularLayout> biregular_layout(const Graph& g);
std::optional<BiregularProfile> biregular_profile(const Graph& g);

/// Vertices u_1..u_a are ids 0..a-1, v_1..v_b are ids a..a+b-1. Edge
/// (i-1)*b + (j-1) is u_i v_j.
Graph gen_complete_bipartite(std::size_t a, std::size_t b);

/// Cartesian product of paths P_m x P_n. Vertex v_j^(i) has id (i-1)*n+(j-1).
/// Horizontal edges come first (row by row), then vertical edges.
Graph gen_grid(std::size_t m, std::size_t n);

/// Random simple (a,b)-biregular graph, deterministic in `seed`. X is
/// vertices 0..|X|-1 (degree a), Y follows (degree b). The part sizes are
/// |X| = k*b/g and |Y| = k*a/g with g = gcd(a,b) and k = g + scale - 1, so
/// scale 1 is K_{a,b}-sized. Half-edges are paired at random with restarts;
/// after 10*scale*b failed restarts the graph is instead obtained by random
/// edge switches from a circulant (a,b)-biregular graph.
Graph gen_random_biregular(std::size_t a, std::size_t b, std::size_t scale, std::uint64_t seed);

Graph gen_star(std::size_t leaves);
Graph gen_cycle(std::size_t n);
Graph gen_path(std::size_t n);
Graph gen_complete(std::size_t n);
Graph gen_petersen();

/// (m, n) when g has exactly the vertex labeling and edge set of
/// gen_grid(m, n) for some m, n >= 2 (edge order may differ).
std::optional<std::pair<std::size_t, std::size_t>> recognize_grid(const Graph& g);

/// Vertices and edges of `second` are appended after those of `first`.
Graph disjoint_union(const Graph& first, const Graph& second);

struct EvenClosure {
  Graph graph;
  /// Copy-1 edge i of the closure is edge embedding[i] of the source graph;
  /// copy-1 edges are exactly the first |E| edges of the closure.
  std::vector<EdgeId> embedding;
};

/// Two disjoint copies of g plus an edge joining the two copies of every
/// odd-degree vertex. Copy 1 keeps vertex and edge ids, copy 2 is shifted by
/// |V| and |E|; join edges come last in vertex order.
EvenClosure even_closure(const Graph& g);

struct Component {
  Graph graph;
  /// Local vertex i is vertex_map[i] in the parent graph.
  std::vector<VertexId> vertex_map;
  /// Local edge i is edge_map[i] in the parent graph.
  std::vector<EdgeId> edge_map;
};

/// Connected components ordered by smallest vertex id. Local ids preserve the
/// parent's relative order.
std::vector<Component> components(const Graph& g);

}  // namespace palette
