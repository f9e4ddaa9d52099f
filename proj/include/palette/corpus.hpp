#pragma once

#include <cstdint>
#include <vector>

#include "palette/graph.hpp"

namespace palette {

/// Random simple even bipartite graph with maximum degree exactly `delta`
/// (even, >= 2) and no isolated vertices: a union of edge-disjoint random
/// 4- and 6-cycles. Deterministic in `seed`.
Graph gen_random_even_bipartite(std::size_t delta, std::uint64_t seed);

/// Non-regular graph H1 + H2 where H2 is a union of disjoint perfect
/// matchings of all vertices and H1 a union of perfect matchings of a proper
/// subset, edge-disjoint from H2. Deterministic in `seed`.
Graph gen_palette_two_union(std::uint64_t seed);

/// Every simple regular graph without isolated vertices and with 1 to
/// `max_edges` edges, one per isomorphism class (matchings, unions of
/// cycles, and the cubic and quartic graphs that fit).
std::vector<Graph> small_regular_graphs(std::size_t max_edges);

/// `count` seeded graphs with 1..max_edges edges on at most 7 vertices,
/// without isolated vertices; roughly one in four has a parallel edge.
std::vector<Graph> oracle_corpus(std::size_t count, std::size_t max_edges, std::uint64_t seed);

/// Every labeled simple graph on exactly n vertices with no isolated vertex,
/// in increasing order of the edge-subset bitmask over pairs (i<j)
/// enumerated lexicographically.
std::vector<Graph> all_graphs_without_isolated(std::size_t n);

/// Lexicographically least adjacency bitmask over all vertex permutations;
/// equal exactly for isomorphic simple graphs. n <= 8.
std::uint64_t canonical_form(const Graph& g);

}  // namespace palette
