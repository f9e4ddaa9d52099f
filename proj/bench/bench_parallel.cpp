// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "palette/exact.hpp"
#include "palette/graph.hpp"
#include "palette/suite.hpp"

namespace {

using palette::Graph;

void exact_search(benchmark::State& state, const Graph& g) {
  palette::SearchLimits limits;
  limits.workers = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const auto r = palette::palette_index_exact(g, limits);
    benchmark::DoNotOptimize(r.value);
    state.counters["nodes"] = static_cast<double>(r.nodes);
  }
}

void BM_ExactGrid3x4(benchmark::State& state) { exact_search(state, palette::gen_grid(3, 4)); }
void BM_ExactK35(benchmark::State& state) { exact_search(state, palette::gen_complete_bipartite(3, 5)); }
void BM_ExactPetersen(benchmark::State& state) { exact_search(state, palette::gen_petersen()); }

void BM_FullPaletteSweep(benchmark::State& state) {
  const auto threads = static_cast<std::size_t>(state.range(0));
  const auto vertices = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    const auto sweep = palette::sweep_full_palette(vertices, threads);
    benchmark::DoNotOptimize(sweep.mismatches);
  }
}

BENCHMARK(BM_ExactGrid3x4)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactK35)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactPetersen)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FullPaletteSweep)->Args({1, 5})->Args({4, 5})->Args({1, 6})->Args({4, 6})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
