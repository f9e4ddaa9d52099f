#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "palette/constructions.hpp"

namespace palette {

enum class Comparison { Equal, AtMost };

struct SuiteCase {
  std::string id;
  /// Where the expected value comes from: published, derived or formula.
  std::string source;
  Comparison rule = Comparison::Equal;
  Bound expected = 0;
  Bound computed = 0;
  /// False when an exact search ran out of budget.
  bool proved = true;
  bool passed = false;
  std::string note;
  /// Wall time; reported on the diagnostic stream only.
  double seconds = 0.0;
};

struct SuiteReport {
  std::vector<SuiteCase> cases;

  bool all_passed() const;
  /// One "case=..." line per case plus a closing "cases=... passed=...
  /// failed=..." line. Independent of timing and worker count.
  std::string machine_lines() const;
  /// Human-readable table including runtimes.
  std::string human_summary() const;
};

struct SuiteOptions {
  /// Substring of the case id; empty runs everything.
  std::string filter;
  /// Adds the six-vertex full-palette sweep.
  bool slow = false;
  /// Worker threads; 0 reads PALETTE_SUITE_THREADS and falls back to 1.
  std::size_t threads = 0;
};

/// Case ids in report order.
std::vector<std::string> suite_case_ids(bool slow);

SuiteReport run_suite(const SuiteOptions& options = {});

struct FullPaletteSweep {
  std::size_t graphs = 0;
  std::size_t classes = 0;
  std::size_t mismatches = 0;
  std::size_t full = 0;
};

/// Compares classify_full_palette with palette_index_exact == |V| on every
/// labeled simple graph with 1..max_vertices vertices and no isolated
/// vertex. Exact values are shared between isomorphic graphs. threads == 1
/// runs the serial reference loop.
FullPaletteSweep sweep_full_palette(std::size_t max_vertices, std::size_t threads);

}  // namespace palette
