#pragma once

#include <vector>

#include "palette/coloring.hpp"
#include "palette/graph.hpp"

namespace palette {

/// Closed trail: edges[k] joins vertex k and vertex k+1 of the walk, which
/// starts (and ends) at `start`.
struct Circuit {
  VertexId start = 0;
  std::vector<EdgeId> edges;
};

struct Matching {
  /// Ascending edge ids of the host graph.
  std::vector<EdgeId> edge_ids;
};

struct FactorSet {
  /// Disjoint edge-id sets covering every edge of the host; each ascending.
  std::vector<std::vector<EdgeId>> factors;
};

struct SplitGraph {
  /// Edge i of `graph` is edge i of the source.
  Graph graph;
  /// New vertex -> source vertex.
  std::vector<VertexId> back_map;
};

struct ParitySplit {
  std::vector<EdgeId> red;
  std::vector<EdgeId> blue;
};

/// One closed Eulerian trail per component that has edges, in component
/// order. Each trail starts at the component's smallest vertex; Hierholzer
/// splicing always leaves a vertex through its smallest unused edge.
/// Throws std::invalid_argument when some vertex has odd degree.
std::vector<Circuit> eulerian_circuits(const Graph& g);

/// Vertex sequence of a circuit (first vertex repeated at the end).
std::vector<VertexId> circuit_vertices(const Graph& g, const Circuit& c);

/// Petersen decomposition of a 2r-regular multigraph (loops allowed) into r
/// spanning 2-regular factors. Eulerian orientation, then r perfect
/// matchings peeled from the out/in split graph.
FactorSet two_factorization(const Graph& g);

/// Maximum-cardinality matching by augmenting paths, X vertices in id order,
/// edges in ascending order.
Matching maximum_matching(const Graph& g, const Bipartition& bip);

/// Proper edge coloring with colors 1..max_degree of a bipartite multigraph.
/// The graph is padded to a max_degree-regular bipartite multigraph and
/// perfect matchings are peeled off one color at a time.
EdgeColoring konig_coloring(const Graph& g, const Bipartition& bip);

/// Inclusion-minimal matching covering every maximum-degree vertex.
Matching matching_covering_max_degree(const Graph& g, const Bipartition& bip);

/// Splits every `side` vertex of degree k*target into k copies of degree
/// `target`; copy t receives the incident edges t*target..t*target+target-1
/// in ascending edge order. Throws std::invalid_argument when some degree on
/// that side is not a multiple of `target`.
SplitGraph split_part_vertices(const Graph& g, const Bipartition& bip, Side side,
                               std::size_t target);

/// Alternating red/blue colouring along each component's Eulerian circuit.
/// Requires even degrees and an even number of edges in every component.
ParitySplit parity_split(const Graph& g);

}  // namespace palette
