#include <gtest/gtest.h>

#include "palette/palettes.hpp"
#include "test_util.hpp"

namespace palette {
namespace {

TEST(VerifyProper, CycleOfFour) {
  const Graph c4 = gen_cycle(4);
  EXPECT_TRUE(verify_proper(c4, EdgeColoring({1, 2, 1, 2})).empty());
  EXPECT_EQ(verify_proper(c4, EdgeColoring({1, 1, 2, 2})).size(), 2u);
}

TEST(VerifyProper, Triangle) { EXPECT_TRUE(is_proper(gen_complete(3), EdgeColoring({1, 2, 3}))); }

TEST(VerifyProper, RejectsPartialAndMissized) {
  EXPECT_THROW(verify_proper(gen_cycle(4), EdgeColoring({1, 2, 1})), std::invalid_argument);
  EXPECT_THROW(verify_proper(gen_cycle(4), EdgeColoring({1, 2, 0, 2})), std::invalid_argument);
}

TEST(PaletteSummary, OddCycle) {
  const PaletteSummary s = palette_summary(gen_cycle(5), EdgeColoring({1, 2, 1, 2, 3}));
  EXPECT_EQ(s.distinct_palettes, 3u);
  EXPECT_EQ(s.multiplicity.at(Palette{1, 2}), 3u);
  EXPECT_EQ(s.multiplicity.at(Palette{2, 3}), 1u);
  EXPECT_EQ(s.multiplicity.at(Palette{1, 3}), 1u);
}

TEST(PaletteSummary, StarAllDistinct) {
  EXPECT_EQ(count_palettes(gen_star(3), EdgeColoring({1, 2, 3})), 4u);
}

TEST(PaletteSummary, ImproperRejected) {
  EXPECT_THROW(palette_summary(gen_cycle(4), EdgeColoring({1, 1, 2, 2})), std::invalid_argument);
}

TEST(PaletteSummary, IsolatedVertexHasEmptyPalette) {
  const Graph g(3, {{0, 1}});
  const PaletteSummary s = palette_summary(g, EdgeColoring(std::vector<Color>{1}));
  EXPECT_EQ(s.distinct_palettes, 2u);
  EXPECT_TRUE(s.palette_of[2].empty());
}

TEST(PaletteSummary, AgreesWithOracleCount) {
  const Graph g = gen_grid(3, 3);
  std::vector<Color> colors(g.edge_count());
  // Greedy first-fit coloring in edge order.
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Color c = 1;
    for (bool clash = true; clash;) {
      clash = false;
      for (EdgeId f = 0; f < e; ++f) {
        const Edge a = g.edge(e);
        const Edge b = g.edge(f);
        if (colors[f] == c && (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)) {
          clash = true;
          ++c;
          break;
        }
      }
    }
    colors[e] = c;
  }
  const EdgeColoring coloring(colors);
  ASSERT_TRUE(is_proper(g, coloring));
  EXPECT_EQ(count_palettes(g, coloring), oracle::palettes(test::to_oracle(g), colors));
}

}  // namespace
}  // namespace palette
