#include <gtest/gtest.h>

#include <algorithm>

#include "palette/suite.hpp"

namespace palette {
namespace {

TEST(Suite, FilterSelectsGridCasesOnly) {
  SuiteOptions options;
  options.filter = "grid";
  const SuiteReport report = run_suite(options);
  ASSERT_FALSE(report.cases.empty());
  for (const SuiteCase& c : report.cases) EXPECT_NE(c.id.find("grid"), std::string::npos);
  std::size_t expected = 0;
  for (const auto& id : suite_case_ids(false)) expected += id.find("grid") != std::string::npos;
  EXPECT_EQ(report.cases.size(), expected);
  EXPECT_TRUE(report.all_passed());
}

TEST(Suite, FullRunPasses) {
  const SuiteReport report = run_suite();
  EXPECT_GE(report.cases.size(), 20u);
  EXPECT_EQ(report.cases.size(), suite_case_ids(false).size());
  for (const SuiteCase& c : report.cases) EXPECT_TRUE(c.passed) << c.id << ' ' << c.note;
}

TEST(Suite, EmptyFilterMatch) {
  SuiteOptions options;
  options.filter = "no-such-case";
  const SuiteReport report = run_suite(options);
  EXPECT_TRUE(report.cases.empty());
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.machine_lines(), "cases=0 passed=0 failed=0\n");
}

TEST(Suite, CaseIdsAreUnique) {
  auto ids = suite_case_ids(true);
  std::sort(ids.begin(), ids.end());
  EXPECT_EQ(std::adjacent_find(ids.begin(), ids.end()), ids.end());
  EXPECT_EQ(suite_case_ids(true).size(), suite_case_ids(false).size() + 1);
}

TEST(Suite, MachineLinesIgnoreThreadCount) {
  SuiteOptions one;
  one.filter = "kab-";
  one.threads = 1;
  SuiteOptions four = one;
  four.threads = 4;
  EXPECT_EQ(run_suite(one).machine_lines(), run_suite(four).machine_lines());
}

TEST(FullPaletteSweep, FiveVerticesSerialAndParallel) {
  const FullPaletteSweep serial = sweep_full_palette(5, 1);
  EXPECT_EQ(serial.mismatches, 0u);
  // Unlabeled graphs without isolated vertices on 2..5 vertices: 1+2+7+23.
  EXPECT_EQ(serial.classes, 33u);
  const FullPaletteSweep parallel = sweep_full_palette(5, 4);
  EXPECT_EQ(parallel.graphs, serial.graphs);
  EXPECT_EQ(parallel.classes, serial.classes);
  EXPECT_EQ(parallel.full, serial.full);
  EXPECT_EQ(parallel.mismatches, 0u);
}

}  // namespace
}  // namespace palette
