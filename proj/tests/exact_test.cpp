#include <gtest/gtest.h>

#include "palette/corpus.hpp"
#include "palette/exact.hpp"
#include "palette/palettes.hpp"
#include "test_util.hpp"

namespace palette {
namespace {

using test::make;

void expect_witness(const Graph& g, const PaletteIndexResult& r) {
  ASSERT_EQ(r.witness.size(), g.edge_count());
  EXPECT_TRUE(is_proper(g, r.witness));
  EXPECT_EQ(count_palettes(g, r.witness), r.value);
}

TEST(PaletteIndex, Examples) {
  const std::pair<Graph, std::size_t> cases[] = {
      {gen_complete_bipartite(2, 3), 4}, {gen_cycle(5), 3}, {gen_complete(4), 1},
      {gen_complete_bipartite(2, 4), 3}, {gen_star(4), 5},  {gen_grid(3, 3), 5},
  };
  for (const auto& [g, want] : cases) {
    const PaletteIndexResult r = palette_index_exact(g);
    EXPECT_TRUE(r.proved);
    EXPECT_FALSE(r.conditional);
    EXPECT_EQ(r.value, want);
    expect_witness(g, r);
  }
}

TEST(PaletteIndex, CompleteBipartiteThreeFive) {
  const PaletteIndexResult r = palette_index_exact(gen_complete_bipartite(3, 5));
  EXPECT_TRUE(r.proved);
  EXPECT_EQ(r.value, 5u);
}

TEST(PaletteIndex, RejectsLoops) {
  EXPECT_THROW(palette_index_exact(Graph(1, {{0, 0}}, true)), std::invalid_argument);
}

TEST(PaletteIndex, BudgetExhaustionIsReported) {
  SearchLimits limits;
  limits.max_nodes = 5;
  const PaletteIndexResult r = palette_index_exact(gen_grid(3, 4), limits);
  EXPECT_FALSE(r.proved);
  expect_witness(gen_grid(3, 4), r);
}

TEST(PaletteIndex, ColorCapIsConditional) {
  SearchLimits limits;
  limits.max_colors = 3;
  const PaletteIndexResult r = palette_index_exact(gen_cycle(5), limits);
  EXPECT_TRUE(r.conditional);
  EXPECT_EQ(r.value, 3u);
}

TEST(PaletteIndex, AgreesWithNaiveOracle) {
  for (const Graph& g : oracle_corpus(120, 6, 4242)) {
    const auto want = oracle::palette_index(test::to_oracle(g));
    const PaletteIndexResult r = palette_index_exact(g);
    ASSERT_TRUE(r.proved);
    EXPECT_EQ(r.value, want.value);
    expect_witness(g, r);
    EXPECT_EQ(count_matching_partitions(g), want.partitions);
  }
}

TEST(PaletteIndex, BruteForceAgreesWithNaiveOracle) {
  for (const Graph& g : oracle_corpus(60, 7, 17)) {
    const auto want = oracle::palette_index(test::to_oracle(g));
    const BruteForceResult r = palette_index_bruteforce(g);
    EXPECT_EQ(r.value, want.value);
    EXPECT_EQ(r.partitions, want.partitions);
  }
}

TEST(PaletteIndex, RegularGraphsNeverTwo) {
  for (const Graph& g : small_regular_graphs(10)) {
    const PaletteIndexResult r = palette_index_exact(g);
    ASSERT_TRUE(r.proved);
    EXPECT_NE(r.value, 2u);
  }
}

TEST(PaletteIndex, ParallelMatchesSerial) {
  const Graph graphs[] = {gen_grid(3, 3), gen_complete_bipartite(2, 3), gen_complete_bipartite(3, 4),
                          gen_petersen(), gen_random_biregular(2, 3, 2, 1),
                          disjoint_union(gen_complete(3), gen_star(3))};
  for (const Graph& g : graphs) {
    const PaletteIndexResult serial = palette_index_exact(g);
    for (std::size_t workers : {2u, 3u, 8u}) {
      SearchLimits limits;
      limits.workers = workers;
      const PaletteIndexResult parallel = palette_index_exact(g, limits);
      EXPECT_TRUE(parallel.proved);
      EXPECT_EQ(parallel.value, serial.value);
      EXPECT_EQ(parallel.witness, serial.witness) << "workers " << workers;
    }
  }
}

TEST(ChromaticIndex, Examples) {
  EXPECT_EQ(chromatic_index_exact(gen_cycle(5)).value, 3u);
  EXPECT_EQ(chromatic_index_exact(gen_complete_bipartite(3, 3)).value, 3u);
  const ChromaticIndexResult petersen = chromatic_index_exact(gen_petersen());
  EXPECT_TRUE(petersen.proved);
  EXPECT_EQ(petersen.value, 4u);
  EXPECT_TRUE(is_proper(gen_petersen(), petersen.witness));
}

TEST(ChromaticIndex, AgreesWithNaiveOracle) {
  for (const Graph& g : oracle_corpus(60, 7, 99)) {
    const ChromaticIndexResult r = chromatic_index_exact(g);
    EXPECT_TRUE(r.proved);
    EXPECT_EQ(r.value, oracle::chromatic_index(test::to_oracle(g)));
  }
}

TEST(Vizing, Examples) {
  EXPECT_EQ(vizing_coloring(gen_cycle(5)).colors_used(), 3u);
  const EdgeColoring k4 = vizing_coloring(gen_complete(4));
  EXPECT_TRUE(is_proper(gen_complete(4), k4));
  EXPECT_LE(k4.max_color(), 4);
  const EdgeColoring k33 = vizing_coloring(gen_complete_bipartite(3, 3));
  EXPECT_TRUE(is_proper(gen_complete_bipartite(3, 3), k33));
  EXPECT_LE(k33.max_color(), 4);
}

TEST(Vizing, AtMostDeltaPlusOneOnSimpleGraphs) {
  for (std::size_t n = 5; n <= 7; ++n) {
    const auto graphs = all_graphs_without_isolated(n);
    for (std::size_t i = 0; i < graphs.size(); i += 97) {
      const Graph& g = graphs[i];
      const EdgeColoring c = vizing_coloring(g);
      EXPECT_TRUE(is_proper(g, c));
      EXPECT_LE(static_cast<std::size_t>(c.max_color()), g.max_degree() + 1);
    }
  }
}

}  // namespace
}  // namespace palette
