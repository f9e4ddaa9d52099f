#include <gtest/gtest.h>

#include <numeric>

#include "palette/coloring.hpp"
#include "palette/decompose.hpp"
#include "palette/graph.hpp"
#include "palette/palettes.hpp"
#include "test_util.hpp"

namespace palette {
namespace {

using test::make;

std::size_t degree_sum(const Graph& g) {
  std::size_t total = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
  return total;
}

TEST(Graph, BuildsTriangle) {
  const Graph g = make(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.is_regular());
  EXPECT_TRUE(g.is_simple());
}

TEST(Graph, IsolatedVertex) {
  const Graph g(1, {});
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_TRUE(g.has_isolated_vertices());
}

TEST(Graph, RejectsLoopsByDefault) {
  EXPECT_THROW(Graph(2, {{0, 0}}), std::invalid_argument);
  EXPECT_NO_THROW(Graph(2, {{0, 0}}, true));
  EXPECT_EQ(Graph(2, {{0, 0}}, true).degree(0), 2u);
}

TEST(Graph, RejectsOutOfRangeEndpoint) { EXPECT_THROW(Graph(2, {{0, 2}}), std::invalid_argument); }

TEST(Graph, ParallelEdges) {
  const Graph g = make(2, {{0, 1}, {1, 0}});
  EXPECT_TRUE(g.has_parallel_edges());
  EXPECT_FALSE(g.is_simple());
  EXPECT_EQ(g.degree(0), 2u);
}

TEST(Bipartition, CycleAlternates) {
  const auto bip = bipartition(gen_cycle(4));
  ASSERT_TRUE(bip);
  EXPECT_EQ(bip->side(0), Side::X);
  EXPECT_EQ(bip->side(1), Side::Y);
  EXPECT_EQ(bip->side(2), Side::X);
  EXPECT_EQ(bip->side(3), Side::Y);
}

TEST(Bipartition, OddCycleAbsent) { EXPECT_FALSE(bipartition(gen_complete(3))); }

TEST(Bipartition, CompleteBipartiteSidesFollowVertexZero) {
  const auto bip = bipartition(gen_complete_bipartite(2, 3));
  ASSERT_TRUE(bip);
  EXPECT_EQ(bip->count(Side::X), 2u);
  EXPECT_EQ(bip->count(Side::Y), 3u);
}

TEST(BiregularProfile, Examples) {
  const auto k24 = biregular_profile(gen_complete_bipartite(2, 4));
  ASSERT_TRUE(k24);
  EXPECT_EQ(*k24, (BiregularProfile{2, 4, 4, 2}));
  const auto p3 = biregular_profile(gen_path(3));
  ASSERT_TRUE(p3);
  EXPECT_EQ(p3->a, 1u);
  EXPECT_EQ(p3->b, 2u);
  EXPECT_FALSE(biregular_profile(gen_complete(3)));
}

TEST(Generators, CompleteBipartite) {
  const Graph k23 = gen_complete_bipartite(2, 3);
  EXPECT_EQ(k23.vertex_count(), 5u);
  EXPECT_EQ(k23.edge_count(), 6u);
  EXPECT_EQ(k23.edge(4), (Edge{1, 3}));
  EXPECT_EQ(gen_complete_bipartite(1, 1).edge_count(), 1u);
  const Graph k46 = gen_complete_bipartite(4, 6);
  EXPECT_EQ(k46.edge_count(), 24u);
  const auto profile = biregular_profile(k46);
  ASSERT_TRUE(profile);
  EXPECT_EQ(profile->a, 4u);
  EXPECT_EQ(profile->b, 6u);
  EXPECT_THROW(gen_complete_bipartite(0, 2), std::invalid_argument);
}

TEST(Generators, Grid) {
  const Graph g22 = gen_grid(2, 2);
  EXPECT_EQ(g22.edge_count(), 4u);
  EXPECT_EQ(g22.degree_set(), (std::set<std::size_t>{2}));
  const Graph g23 = gen_grid(2, 3);
  EXPECT_EQ(g23.vertex_count(), 6u);
  EXPECT_EQ(g23.edge_count(), 7u);
  EXPECT_EQ(gen_grid(3, 3).degree_set(), (std::set<std::size_t>{2, 3, 4}));
  EXPECT_THROW(gen_grid(1, 3), std::invalid_argument);
}

TEST(Generators, GridDegreeSetsAndLabels) {
  for (std::size_t m = 2; m <= 7; ++m) {
    for (std::size_t n = 2; n <= 7; ++n) {
      const Graph g = gen_grid(m, n);
      EXPECT_EQ(g.edge_count(), m * (n - 1) + n * (m - 1));
      std::set<std::size_t> want{2};
      if (std::max(m, n) >= 3) want.insert(3);
      if (std::min(m, n) >= 3) want.insert(4);
      EXPECT_EQ(g.degree_set(), want) << m << 'x' << n;
      EXPECT_EQ(degree_sum(g), 2 * g.edge_count());
      const auto dims = recognize_grid(g);
      ASSERT_TRUE(dims);
      EXPECT_EQ(dims->first, m);
      EXPECT_EQ(dims->second, n);
    }
  }
  // Vertex v_2^(1) (id 1) is adjacent to v_2^(2) (id n + 1).
  const Graph g = gen_grid(3, 4);
  bool found = false;
  for (const Edge& e : g.edges()) found |= (e.u == 1 && e.v == 5) || (e.u == 5 && e.v == 1);
  EXPECT_TRUE(found);
}

TEST(Generators, RandomBiregularProfileAndSimplicity) {
  const std::pair<std::size_t, std::size_t> params[] = {{2, 4}, {3, 5}, {3, 6}, {4, 8}, {2, 3},
                                                        {5, 10}, {4, 6}, {3, 9}, {6, 9}};
  for (const auto& [a, b] : params) {
    for (std::size_t scale = 1; scale <= 3; ++scale) {
      for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const Graph g = gen_random_biregular(a, b, scale, seed);
        EXPECT_TRUE(g.is_simple());
        EXPECT_EQ(degree_sum(g), 2 * g.edge_count());
        const auto profile = biregular_profile(g);
        ASSERT_TRUE(profile) << a << ',' << b << " scale " << scale << " seed " << seed;
        EXPECT_EQ(profile->a, a);
        EXPECT_EQ(profile->b, b);
        EXPECT_EQ(profile->x_count * a, profile->y_count * b);
      }
    }
  }
}

TEST(Generators, RandomBiregularIsDeterministic) {
  const Graph a = gen_random_biregular(3, 6, 2, 11);
  const Graph b = gen_random_biregular(3, 6, 2, 11);
  EXPECT_TRUE(std::equal(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end()));
}

TEST(Generators, RandomBiregularForcedStar) {
  const Graph g = gen_random_biregular(1, 3, 1, 0);
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.max_degree(), 3u);
}

TEST(Generators, RandomBiregularSmallestThreeFive) {
  const auto profile = biregular_profile(gen_random_biregular(3, 5, 1, 4));
  ASSERT_TRUE(profile);
  EXPECT_EQ(profile->x_count, 5u);
  EXPECT_EQ(profile->y_count, 3u);
}

TEST(EvenClosure, EvenGraphGetsNoJoinEdges) {
  const Graph c6 = gen_cycle(6);
  const EvenClosure closure = even_closure(c6);
  EXPECT_EQ(closure.graph.edge_count(), 12u);
  EXPECT_EQ(closure.graph.vertex_count(), 12u);
}

TEST(EvenClosure, JoinEdgeCounts) {
  EXPECT_EQ(even_closure(gen_star(3)).graph.edge_count(), 10u);
  EXPECT_EQ(even_closure(gen_path(3)).graph.edge_count(), 6u);
  EXPECT_THROW(even_closure(gen_complete(3)), std::invalid_argument);
}

TEST(EvenClosure, RestrictedColoringIsProper) {
  const Graph sources[] = {gen_star(3), gen_path(5), gen_grid(3, 4), gen_complete_bipartite(3, 5),
                           gen_random_biregular(2, 3, 2, 5)};
  for (const Graph& g : sources) {
    const EvenClosure closure = even_closure(g);
    EXPECT_TRUE(closure.graph.is_even());
    ASSERT_TRUE(bipartition(closure.graph));
    const auto bip = bipartition(closure.graph);
    const EdgeColoring full = konig_coloring(closure.graph, *bip);
    EdgeColoring restricted(g.edge_count());
    for (EdgeId e = 0; e < closure.embedding.size(); ++e) restricted[closure.embedding[e]] = full[e];
    EXPECT_TRUE(is_proper(g, restricted));
  }
}

TEST(Components, Examples) {
  const Graph g = disjoint_union(gen_complete(3), gen_star(3));
  const auto parts = components(g);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].graph.edge_count(), 3u);
  EXPECT_EQ(parts[1].vertex_map.front(), 3u);
  EXPECT_EQ(components(gen_grid(3, 3)).size(), 1u);
  EXPECT_TRUE(components(Graph()).empty());
}

TEST(Components, MapsBack) {
  const Graph g = disjoint_union(gen_cycle(5), gen_complete_bipartite(2, 3));
  for (const Component& c : components(g)) {
    for (EdgeId e = 0; e < c.graph.edge_count(); ++e) {
      const Edge local = c.graph.edge(e);
      const Edge parent = g.edge(c.edge_map[e]);
      EXPECT_EQ(c.vertex_map[local.u], parent.u);
      EXPECT_EQ(c.vertex_map[local.v], parent.v);
    }
  }
}

}  // namespace
}  // namespace palette
