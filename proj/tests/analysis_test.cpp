#include <gtest/gtest.h>

#include <algorithm>

#include "palette/analysis.hpp"
#include "palette/corpus.hpp"
#include "palette/exact.hpp"
#include "palette/palettes.hpp"
#include "test_util.hpp"

namespace palette {
namespace {

using test::make;

bool has_upper(const BoundReport& r, const std::string& tag, Bound value) {
  return std::any_of(r.entries.begin(), r.entries.end(), [&](const BoundEntry& e) {
    return e.direction == Direction::Upper && e.tag == tag && e.value == value;
  });
}

TEST(LowerBound, Examples) {
  const TaggedBound k35 = palette_lower_bound(gen_complete_bipartite(3, 5));
  EXPECT_EQ(k35.value, 5u);
  EXPECT_EQ(palette_lower_bound(gen_random_biregular(2, 4, 2, 1)).value, 3u);
  const TaggedBound g34 = palette_lower_bound(gen_grid(3, 4));
  EXPECT_EQ(g34.value, 3u);
  EXPECT_THROW(palette_lower_bound(Graph(3, {{0, 1}})), std::invalid_argument);
}

TEST(LowerBound, RegularClassTwo) {
  EXPECT_EQ(palette_lower_bound(gen_petersen(), 4).value, 3u);
  EXPECT_EQ(palette_lower_bound(gen_complete(4), 3).value, 1u);
}

TEST(LowerBound, FamilyBounds) {
  EXPECT_EQ(palette_lower_bound(gen_random_biregular(5, 15, 1, 1)).value, 4u);
  EXPECT_EQ(palette_lower_bound(gen_random_biregular(2, 5, 2, 1)).value, 4u);
}

TEST(Catalog, EvenBipartiteMaxDegreeFour) {
  const Graph g = gen_random_even_bipartite(4, 2);
  const BoundReport r = upper_bound_catalog(g);
  EXPECT_TRUE(has_upper(r, "even-bipartite-max-degree-4", 3));
  EXPECT_LE(r.upper.value, 3u);
}

TEST(Catalog, FourSixBiregular) {
  const BoundReport r = upper_bound_catalog(gen_random_biregular(4, 6, 2, 1));
  EXPECT_TRUE(has_upper(r, "even-bipartite-max-degree-6", 7));
  EXPECT_LE(r.upper.value, 7u);
}

TEST(Catalog, BipartiteMaxDegreeFive) {
  const BoundReport r = upper_bound_catalog(gen_complete_bipartite(3, 5));
  EXPECT_TRUE(has_upper(r, "bipartite-max-degree-5", 23));
}

TEST(Catalog, LowerNeverExceedsUpperOrExact) {
  for (const Graph& g : oracle_corpus(80, 8, 5)) {
    const BoundReport r = upper_bound_catalog(g);
    const PaletteIndexResult exact = palette_index_exact(g);
    ASSERT_TRUE(exact.proved);
    EXPECT_LE(r.lower.value, exact.value);
    EXPECT_GE(r.upper.value, exact.value);
    if (r.witness) {
      EXPECT_TRUE(is_proper(g, *r.witness));
      EXPECT_LE(count_palettes(g, *r.witness), r.upper.value);
    }
  }
}

TEST(Classify, Examples) {
  const FullPaletteClass star = classify_full_palette(gen_star(4));
  EXPECT_TRUE(star.full);
  EXPECT_EQ(star.family, "star");
  EXPECT_FALSE(classify_full_palette(gen_cycle(4)).full);
  EXPECT_FALSE(classify_full_palette(disjoint_union(gen_complete(3), gen_star(2))).full);
  EXPECT_TRUE(classify_full_palette(disjoint_union(gen_complete(3), gen_star(3))).full);
  EXPECT_TRUE(classify_full_palette(gen_complete(3)).full);
}

TEST(Classify, RejectsMultigraphs) {
  EXPECT_THROW(classify_full_palette(make(2, {{0, 1}, {0, 1}})), std::invalid_argument);
}

TEST(Classify, AgreesWithExactOnFiveVertices) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const Graph& g : all_graphs_without_isolated(n)) {
      const PaletteIndexResult r = palette_index_exact(g);
      ASSERT_TRUE(r.proved);
      EXPECT_EQ(classify_full_palette(g).full, r.value == n);
    }
  }
}

TEST(PaletteTwo, CycleWithChord) {
  const Graph g = make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
  const PaletteTwoDecision d = decide_palette_two(g);
  EXPECT_TRUE(d.proved);
  EXPECT_TRUE(d.is_two);
  ASSERT_TRUE(d.certificate);
  EXPECT_EQ(d.certificate->h1.size(), 1u);
  EXPECT_EQ(d.certificate->h2.size(), 6u);
  EXPECT_EQ(subgraph_regular_degree(g, d.certificate->h2), 2u);
}

TEST(PaletteTwo, RegularGraphsAreNotTwo) {
  for (const Graph& g : small_regular_graphs(9)) {
    const PaletteTwoDecision d = decide_palette_two(g);
    EXPECT_TRUE(d.proved);
    EXPECT_FALSE(d.is_two);
  }
}

TEST(PaletteTwo, PathOfThree) {
  const PaletteTwoDecision d = decide_palette_two(gen_path(3));
  EXPECT_FALSE(d.is_two);
  EXPECT_EQ(d.palette_index, 3u);
}

TEST(PaletteTwo, CertificatesOnGeneratedUnions) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = gen_palette_two_union(seed);
    const PaletteTwoDecision d = decide_palette_two(g);
    ASSERT_TRUE(d.proved);
    ASSERT_TRUE(d.is_two);
    const PaletteTwoCertificate& c = *d.certificate;
    EXPECT_TRUE(is_proper(g, c.coloring));
    EXPECT_EQ(count_palettes(g, c.coloring), 2u);
    EXPECT_EQ(c.h1.size() + c.h2.size(), g.edge_count());
    EXPECT_EQ(subgraph_regular_degree(g, c.h1), c.h1_degree);
    EXPECT_EQ(subgraph_regular_degree(g, c.h2), c.h2_degree);
    // H2 spans every vertex; H1 touches only a proper subset.
    std::vector<bool> in_h1(g.vertex_count(), false);
    std::vector<bool> in_h2(g.vertex_count(), false);
    for (EdgeId e : c.h1) in_h1[g.edge(e).u] = in_h1[g.edge(e).v] = true;
    for (EdgeId e : c.h2) in_h2[g.edge(e).u] = in_h2[g.edge(e).v] = true;
    EXPECT_TRUE(std::all_of(in_h2.begin(), in_h2.end(), [](bool b) { return b; }));
    EXPECT_FALSE(std::all_of(in_h1.begin(), in_h1.end(), [](bool b) { return b; }));
    // Each subgraph is Class 1: its colors number its degree.
    std::set<Color> h1_colors;
    std::set<Color> h2_colors;
    for (EdgeId e : c.h1) h1_colors.insert(c.coloring[e]);
    for (EdgeId e : c.h2) h2_colors.insert(c.coloring[e]);
    EXPECT_EQ(h1_colors.size(), c.h1_degree);
    EXPECT_EQ(h2_colors.size(), c.h2_degree);
  }
}

TEST(SubgraphDegree, Examples) {
  const Graph g = gen_complete_bipartite(2, 3);
  EXPECT_EQ(subgraph_regular_degree(g, {0, 4}), 1u);
  EXPECT_FALSE(subgraph_regular_degree(g, {0, 1}));
  EXPECT_FALSE(subgraph_regular_degree(g, {}));
}

}  // namespace
}  // namespace palette
