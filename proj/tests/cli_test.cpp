#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "palette/cli.hpp"
#include "palette/io.hpp"
#include "test_util.hpp"

namespace palette {
namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "palette");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = cli_main(static_cast<int>(argv.size()), argv.data(), in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::path(testing::TempDir()) / name;
  std::ofstream(path) << text;
  return path.string();
}

TEST(Cli, ExactOnCompleteBipartiteTwoThree) {
  const std::string path = write_temp("k23.graph", serialize_graph(gen_complete_bipartite(2, 3)));
  const CliRun r = run({"exact", path});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("palette_index=4 proved=true"), std::string::npos) << r.out;
}

TEST(Cli, ExactReadsStandardInput) {
  const CliRun r = run({"exact", "-"}, serialize_graph(gen_cycle(5)));
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("palette_index=3 proved=true"), std::string::npos);
}

TEST(Cli, ExactBudgetExitCode) {
  const CliRun r = run({"exact", "--max-nodes", "3", "-"}, serialize_graph(gen_grid(3, 4)));
  EXPECT_EQ(r.code, kExitBudget);
  EXPECT_NE(r.out.find("proved=false"), std::string::npos);
}

TEST(Cli, ColorGrid) {
  const CliRun gen = run({"gen", "--family", "grid", "--m", "4", "--n", "5"});
  ASSERT_EQ(gen.code, kExitOk);
  const CliRun r = run({"color", "--strategy", "grid", "-"}, gen.out);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("palettes=3"), std::string::npos) << r.out;
}

TEST(Cli, ColorOutputVerifies) {
  const std::string graph = write_temp("k35.graph", serialize_graph(gen_complete_bipartite(3, 5)));
  const std::string coloring = (std::filesystem::path(testing::TempDir()) / "k35.coloring").string();
  ASSERT_EQ(run({"color", graph, "-o", coloring}).code, kExitOk);
  const CliRun r = run({"verify", graph, coloring});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("proper=true"), std::string::npos);
}

TEST(Cli, VerifyTamperedColoring) {
  const std::string graph = write_temp("c4.graph", serialize_graph(gen_cycle(4)));
  const std::string coloring = write_temp("c4.coloring", "s 2 2\nc 1 1\nc 2 1\nc 3 2\nc 4 2\n");
  const CliRun r = run({"verify", graph, coloring});
  EXPECT_NE(r.code, kExitOk);
  EXPECT_NE(r.out.find("violation"), std::string::npos);
}

TEST(Cli, BoundsReportsBest) {
  const CliRun r = run({"bounds", "-"}, serialize_graph(gen_complete_bipartite(3, 5)));
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("best_lower=5"), std::string::npos) << r.out;
}

TEST(Cli, Classify) {
  const CliRun r = run({"classify", "-"}, serialize_graph(gen_star(4)));
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "star\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"exact", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"exact", "-"}, "p 2 1\ne 1 3\n").code, kExitUsage);
  EXPECT_EQ(run({"exact", "/nonexistent/file"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "--family", "grid"}).code, kExitUsage);
}

TEST(Cli, InapplicableConstruction) {
  const CliRun r = run({"color", "--strategy", "even", "-"}, serialize_graph(gen_cycle(5)));
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("not applicable"), std::string::npos);
}

TEST(Cli, SuiteFilter) {
  const CliRun r = run({"suite", "--filter", "grid-exact-2x2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("case=grid-exact-2x2 "), std::string::npos);
  EXPECT_NE(r.out.find("cases=1 passed=1 failed=0"), std::string::npos);
}

}  // namespace
}  // namespace palette
