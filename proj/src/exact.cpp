#include "palette/exact.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <stdexcept>

#include "palette/constructions.hpp"
#include "palette/decompose.hpp"
#include "palette/palettes.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace palette {
namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr std::size_t kMaxEdges = 64;
constexpr std::uint64_t kTimeCheckPeriod = 4096;

std::vector<EdgeId> search_order(const Graph& g) {
  std::vector<EdgeId> order(g.edge_count());
  for (EdgeId e = 0; e < order.size(); ++e) order[e] = e;
  auto weight = [&](EdgeId e) { return g.degree(g.edge(e).u) + g.degree(g.edge(e).v); };
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId l, EdgeId r) { return weight(l) > weight(r); });
  return order;
}

// Shared budget bookkeeping; `nodes` is shared between workers.
struct Budget {
  std::uint64_t max_nodes;
  Clock::time_point deadline;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};

  Budget(const SearchLimits& limits)
      : max_nodes(limits.max_nodes),
        deadline(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(limits.max_seconds))) {}

  // Returns false once the budget is spent.
  bool tick() {
    if (exhausted.load(std::memory_order_relaxed)) return false;
    const std::uint64_t n = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > max_nodes || (n % kTimeCheckPeriod == 0 && Clock::now() > deadline)) {
      exhausted.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }
};

// Search state for restricted-growth colorings of the edges in `order`.
// Colors are block indices 0..open-1.
class PartitionState {
 public:
  PartitionState(const Graph& g, const std::vector<EdgeId>& order, std::size_t color_cap)
      : g_(g), order_(order), cap_(color_cap), mask_(g.vertex_count(), 0),
        remaining_(g.vertex_count()), block_(order.size(), -1) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      remaining_[v] = g.degree(v);
      if (remaining_[v] == 0) freeze(0);
    }
  }

  std::size_t depth() const { return depth_; }
  std::size_t open() const { return open_; }
  bool complete() const { return depth_ == order_.size(); }
  std::size_t frozen_distinct() const { return frozen_.size(); }
  const std::vector<int>& blocks() const { return block_; }

  // Blocks admissible for the next edge, ascending; a fresh block last.
  Mask choices() const {
    const Edge& e = g_.edge(order_[depth_]);
    const std::size_t limit = std::min(open_ + 1, cap_);
    const Mask all = limit >= 64 ? ~Mask{0} : (Mask{1} << limit) - 1;
    return all & ~(mask_[e.u] | mask_[e.v]);
  }

  void push(int b) {
    const Edge& e = g_.edge(order_[depth_]);
    const Mask bit = Mask{1} << b;
    block_[depth_++] = b;
    if (static_cast<std::size_t>(b) == open_) ++open_;
    for (VertexId x : {e.u, e.v}) {
      mask_[x] |= bit;
      if (--remaining_[x] == 0) freeze(mask_[x]);
    }
  }

  void pop() {
    const int b = block_[--depth_];
    const Edge& e = g_.edge(order_[depth_]);
    const Mask bit = Mask{1} << b;
    for (VertexId x : {e.v, e.u}) {
      if (remaining_[x]++ == 0) thaw(mask_[x]);
      mask_[x] &= ~bit;
    }
    block_[depth_] = -1;
    if (static_cast<std::size_t>(b) + 1 == open_) {
      bool still_used = false;
      for (std::size_t k = 0; k < depth_ && !still_used; ++k) still_used = block_[k] == b;
      if (!still_used) --open_;
    }
  }

  // Frozen palettes plus palettes that unsaturated vertices must add: a
  // vertex whose partial palette fits in no frozen palette of its final size
  // needs a new palette, and new palettes of different sizes differ.
  std::size_t lower_bound() const {
    Mask forced_sizes = 0;
    std::size_t extra = 0;
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (remaining_[v] == 0) continue;
      const std::size_t d = g_.degree(v);
      const Mask size_bit = d < 64 ? Mask{1} << d : 0;
      if (size_bit != 0 && (forced_sizes & size_bit)) continue;
      bool fits = false;
      for (const auto& [palette, count] : frozen_) {
        if (static_cast<std::size_t>(std::popcount(palette)) == d && (mask_[v] & ~palette) == 0) {
          fits = true;
          break;
        }
      }
      if (fits) continue;
      if (size_bit != 0) {
        forced_sizes |= size_bit;
        ++extra;
      }
    }
    return frozen_.size() + extra;
  }

 private:
  void freeze(Mask palette) {
    for (auto& [p, count] : frozen_) {
      if (p == palette) {
        ++count;
        return;
      }
    }
    frozen_.emplace_back(palette, 1);
  }

  void thaw(Mask palette) {
    for (std::size_t i = 0; i < frozen_.size(); ++i) {
      if (frozen_[i].first == palette) {
        if (--frozen_[i].second == 0) {
          frozen_[i] = frozen_.back();
          frozen_.pop_back();
        }
        return;
      }
    }
  }

  const Graph& g_;
  const std::vector<EdgeId>& order_;
  std::size_t cap_;
  std::vector<Mask> mask_;
  std::vector<std::size_t> remaining_;
  std::vector<int> block_;
  std::vector<std::pair<Mask, std::size_t>> frozen_;
  std::size_t depth_ = 0;
  std::size_t open_ = 0;
};

struct SubtreeResult {
  std::size_t value = std::numeric_limits<std::size_t>::max();
  std::vector<int> blocks;
};

// Depth-first branch and bound below the current state. Nodes whose lower
// bound reaches `best` are cut; so are nodes strictly above `shared_best`.
class PaletteSearch {
 public:
  PaletteSearch(PartitionState& state, Budget& budget, std::size_t root_bound,
                std::atomic<std::size_t>* shared_best)
      : state_(state), budget_(budget), root_bound_(root_bound), shared_best_(shared_best) {}

  void run(SubtreeResult& result) {
    result_ = &result;
    dfs();
  }

 private:
  bool dfs() {
    if (!budget_.tick()) return false;
    const std::size_t lb = state_.lower_bound();
    if (lb >= result_->value) return true;
    if (shared_best_ != nullptr && lb > shared_best_->load(std::memory_order_relaxed)) return true;
    if (state_.complete()) {
      result_->value = lb;
      result_->blocks = state_.blocks();
      if (shared_best_ != nullptr) {
        std::size_t cur = shared_best_->load();
        while (lb < cur && !shared_best_->compare_exchange_weak(cur, lb)) {
        }
      }
      return lb > root_bound_;
    }
    for (Mask options = state_.choices(); options != 0; options &= options - 1) {
      state_.push(std::countr_zero(options));
      const bool go_on = dfs();
      state_.pop();
      if (!go_on) return false;
    }
    return true;
  }

  PartitionState& state_;
  Budget& budget_;
  std::size_t root_bound_;
  std::atomic<std::size_t>* shared_best_;
  SubtreeResult* result_ = nullptr;
};

void require_searchable(const Graph& g) {
  if (g.has_loops()) throw std::invalid_argument("exact search: graph has loops");
  if (g.edge_count() > kMaxEdges) throw std::invalid_argument("exact search: more than 64 edges");
}

std::size_t heuristic_value(const Graph& g) {
  std::size_t best = g.vertex_count();
  try {
    if (!g.has_isolated_vertices() && g.edge_count() > 0) {
      best = std::min(best, count_palettes(g, color_auto(g).coloring));
    }
  } catch (const std::exception&) {
    // Falls back to |V|.
  }
  return best;
}

EdgeColoring to_coloring(const std::vector<EdgeId>& order, const std::vector<int>& blocks) {
  EdgeColoring c(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) c[order[k]] = blocks[k] + 1;
  return c;
}

// Prefixes of length `depth` in depth-first order whose lower bound stays
// below `seed`.
void collect_prefixes(PartitionState& state, std::size_t depth, std::size_t seed,
                      std::vector<std::vector<int>>& out) {
  if (state.lower_bound() >= seed) return;
  if (state.depth() == depth || state.complete()) {
    out.emplace_back(state.blocks().begin(), state.blocks().begin() + state.depth());
    return;
  }
  for (Mask options = state.choices(); options != 0; options &= options - 1) {
    state.push(std::countr_zero(options));
    collect_prefixes(state, depth, seed, out);
    state.pop();
  }
}

std::size_t root_lower_bound(const Graph& g) {
  std::vector<std::size_t> degrees;
  for (VertexId v = 0; v < g.vertex_count(); ++v) degrees.push_back(g.degree(v));
  std::sort(degrees.begin(), degrees.end());
  return static_cast<std::size_t>(std::unique(degrees.begin(), degrees.end()) - degrees.begin());
}

SubtreeResult search_serial(const Graph& g, const std::vector<EdgeId>& order, std::size_t cap,
                            std::size_t seed, std::size_t root_bound, Budget& budget) {
  PartitionState state(g, order, cap);
  SubtreeResult result;
  result.value = seed;
  PaletteSearch(state, budget, root_bound, nullptr).run(result);
  return result;
}

SubtreeResult search_parallel(const Graph& g, const std::vector<EdgeId>& order, std::size_t cap,
                              std::size_t seed, std::size_t root_bound, Budget& budget,
                              std::size_t workers) {
  std::vector<std::vector<int>> prefixes;
  {
    PartitionState state(g, order, cap);
    std::size_t depth = 0;
    while (depth < order.size()) {
      ++depth;
      prefixes.clear();
      collect_prefixes(state, depth, seed, prefixes);
      if (prefixes.size() >= 16 * workers) break;
    }
  }
  const auto count = static_cast<std::ptrdiff_t>(prefixes.size());
  std::vector<SubtreeResult> results(prefixes.size());
  std::atomic<std::size_t> shared_best{seed};
  // Earliest prefix that reached the root bound; later prefixes are moot.
  std::atomic<std::ptrdiff_t> settled{count};

#pragma omp parallel for schedule(dynamic, 1) num_threads(static_cast<int>(workers))
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    if (i > settled.load() || budget.exhausted.load()) continue;
    PartitionState state(g, order, cap);
    for (int b : prefixes[i]) state.push(b);
    results[i].value = seed;
    PaletteSearch(state, budget, root_bound, &shared_best).run(results[i]);
    if (results[i].value <= root_bound) {
      std::ptrdiff_t cur = settled.load();
      while (i < cur && !settled.compare_exchange_weak(cur, i)) {
      }
    }
  }

  SubtreeResult merged;
  merged.value = seed;
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    if (!results[i].blocks.empty() && results[i].value < merged.value) merged = results[i];
  }
  return merged;
}

}  // namespace

PaletteIndexResult palette_index_exact(const Graph& g, const SearchLimits& limits) {
  require_searchable(g);
  PaletteIndexResult out;
  if (g.edge_count() == 0) {
    out.value = g.vertex_count() > 0 ? 1 : 0;
    out.proved = true;
    return out;
  }
  const std::vector<EdgeId> order = search_order(g);
  const std::size_t cap = limits.max_colors.value_or(kMaxEdges);
  out.conditional = limits.max_colors.has_value();
  const std::size_t fallback = heuristic_value(g);
  const std::size_t seed = fallback + 1;
  const std::size_t root_bound = root_lower_bound(g);

  Budget budget(limits);
  const std::size_t workers = std::max<std::size_t>(limits.workers, 1);
  const SubtreeResult found = workers == 1
                                  ? search_serial(g, order, cap, seed, root_bound, budget)
                                  : search_parallel(g, order, cap, seed, root_bound, budget, workers);
  out.nodes = budget.nodes.load();
  out.proved = !budget.exhausted.load();
  if (!found.blocks.empty()) {
    out.value = found.value;
    out.witness = to_coloring(order, found.blocks);
  } else {
    // Nothing beat the heuristic seed within budget.
    out.value = fallback;
    if (fallback < g.vertex_count() || !g.has_isolated_vertices()) {
      try {
        out.witness = color_auto(g).coloring;
      } catch (const std::exception&) {
        out.witness = EdgeColoring{};
      }
    }
  }
  return out;
}

std::uint64_t count_matching_partitions(const Graph& g) {
  require_searchable(g);
  const std::vector<EdgeId> order = search_order(g);
  PartitionState state(g, order, kMaxEdges);
  std::uint64_t leaves = 0;
  auto walk = [&](auto&& self) -> void {
    if (state.complete()) {
      ++leaves;
      return;
    }
    for (Mask options = state.choices(); options != 0; options &= options - 1) {
      state.push(std::countr_zero(options));
      self(self);
      state.pop();
    }
  };
  walk(walk);
  return leaves;
}

BruteForceResult palette_index_bruteforce(const Graph& g) {
  require_searchable(g);
  const std::size_t m = g.edge_count();
  if (m > 14) throw std::invalid_argument("palette_index_bruteforce: more than 14 edges");
  BruteForceResult out;
  out.value = std::numeric_limits<std::size_t>::max();
  std::vector<int> block(m, 0);
  std::vector<Mask> palette(g.vertex_count());
  auto evaluate = [&] {
    std::fill(palette.begin(), palette.end(), 0);
    for (EdgeId e = 0; e < m; ++e) {
      const Mask bit = Mask{1} << block[e];
      const Edge& ed = g.edge(e);
      if ((palette[ed.u] & bit) || (palette[ed.v] & bit)) return;
      palette[ed.u] |= bit;
      palette[ed.v] |= bit;
    }
    ++out.partitions;
    std::vector<Mask> distinct(palette);
    std::sort(distinct.begin(), distinct.end());
    const auto count = static_cast<std::size_t>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());
    out.value = std::min(out.value, count);
  };
  auto walk = [&](auto&& self, std::size_t k, int open) -> void {
    if (k == m) {
      evaluate();
      return;
    }
    for (int b = 0; b <= open; ++b) {
      block[k] = b;
      self(self, k + 1, std::max(open, b + 1));
    }
  };
  if (m == 0) {
    out.value = g.vertex_count() > 0 ? 1 : 0;
    out.partitions = 1;
    return out;
  }
  walk(walk, 0, 0);
  return out;
}

namespace {

// Proper coloring with at most k colors, restricted growth, or nullopt.
std::optional<EdgeColoring> k_edge_coloring(const Graph& g, std::size_t k, Budget& budget) {
  const std::vector<EdgeId> order = search_order(g);
  PartitionState state(g, order, k);
  std::optional<EdgeColoring> found;
  auto walk = [&](auto&& self) -> bool {
    if (!budget.tick()) return true;
    if (state.complete()) {
      found = to_coloring(order, state.blocks());
      return true;
    }
    for (Mask options = state.choices(); options != 0; options &= options - 1) {
      state.push(std::countr_zero(options));
      const bool done = self(self);
      state.pop();
      if (done) return true;
    }
    return false;
  };
  walk(walk);
  return found;
}

}  // namespace

ChromaticIndexResult chromatic_index_exact(const Graph& g, const SearchLimits& limits) {
  require_searchable(g);
  ChromaticIndexResult out;
  const std::size_t delta = g.max_degree();
  if (g.edge_count() == 0) {
    out.proved = true;
    out.witness = EdgeColoring(std::size_t{0});
    return out;
  }
  if (const auto bip = bipartition(g)) {
    out.value = delta;
    out.proved = true;
    out.witness = konig_coloring(g, *bip);
    return out;
  }
  Budget budget(limits);
  for (std::size_t k = delta;; ++k) {
    if (k == delta + 1 && g.is_simple()) {
      out.value = k;
      out.proved = !budget.exhausted.load();
      out.witness = vizing_coloring(g);
      return out;
    }
    if (auto c = k_edge_coloring(g, k, budget)) {
      out.value = k;
      out.proved = true;
      out.witness = std::move(*c);
      return out;
    }
    if (budget.exhausted.load()) {
      out.value = k + 1;
      out.proved = false;
      if (g.is_simple()) out.witness = vizing_coloring(g);
      return out;
    }
  }
}

namespace {

// Misra-Gries state: at_[v][c] is the edge of color c at v, or kNone.
class FanColoring {
 public:
  static constexpr EdgeId kNone = std::numeric_limits<EdgeId>::max();

  explicit FanColoring(const Graph& g)
      : g_(g), colors_(g.max_degree() + 1), coloring_(g.edge_count()),
        at_(g.vertex_count(), std::vector<EdgeId>(colors_ + 1, kNone)) {}

  EdgeColoring run() {
    for (EdgeId e = 0; e < g_.edge_count(); ++e) color_edge(e);
    return coloring_;
  }

 private:
  bool free_at(VertexId v, Color c) const { return at_[v][c] == kNone; }

  Color free_color(VertexId v) const {
    for (Color c = 1; c <= static_cast<Color>(colors_); ++c) {
      if (free_at(v, c)) return c;
    }
    throw std::logic_error("vizing: no free color");
  }

  void set(EdgeId e, Color c) {
    const Edge& ed = g_.edge(e);
    if (coloring_[e] != EdgeColoring::kUncolored) {
      at_[ed.u][coloring_[e]] = kNone;
      at_[ed.v][coloring_[e]] = kNone;
    }
    coloring_[e] = c;
    if (c != EdgeColoring::kUncolored) {
      at_[ed.u][c] = e;
      at_[ed.v][c] = e;
    }
  }

  void color_edge(EdgeId e0) {
    const VertexId u = g_.edge(e0).u;
    // Maximal fan at u starting with the uncolored edge e0.
    std::vector<EdgeId> fan{e0};
    std::vector<VertexId> tips{g_.other(e0, u)};
    std::vector<char> in_fan(g_.vertex_count(), 0);
    in_fan[tips[0]] = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (EdgeId f : g_.incident(u)) {
        const VertexId x = g_.other(f, u);
        if (coloring_[f] == EdgeColoring::kUncolored || in_fan[x]) continue;
        if (free_at(tips.back(), coloring_[f])) {
          fan.push_back(f);
          tips.push_back(x);
          in_fan[x] = 1;
          grew = true;
          break;
        }
      }
    }
    const Color c = free_color(u);
    const Color d = free_color(tips.back());

    // Invert the cd-path starting at u (its first edge has color d).
    std::vector<EdgeId> path;
    VertexId cur = u;
    for (Color want = d; at_[cur][want] != kNone; want = want == d ? c : d) {
      const EdgeId f = at_[cur][want];
      path.push_back(f);
      cur = g_.other(f, cur);
    }
    std::vector<Color> flipped;
    for (EdgeId f : path) flipped.push_back(coloring_[f] == c ? d : c);
    for (EdgeId f : path) set(f, EdgeColoring::kUncolored);
    for (std::size_t i = 0; i < path.size(); ++i) set(path[i], flipped[i]);

    // First fan prefix that is still a fan and ends at a vertex missing d.
    std::size_t w = 0;
    for (;; ++w) {
      if (w >= tips.size()) throw std::logic_error("vizing: fan rotation failed");
      if (w > 0 && !free_at(tips[w - 1], coloring_[fan[w]])) {
        throw std::logic_error("vizing: fan prefix broken");
      }
      if (free_at(tips[w], d)) break;
    }
    std::vector<Color> shifted;
    for (std::size_t i = 0; i < w; ++i) shifted.push_back(coloring_[fan[i + 1]]);
    for (std::size_t i = 1; i <= w; ++i) set(fan[i], EdgeColoring::kUncolored);
    for (std::size_t i = 0; i < w; ++i) set(fan[i], shifted[i]);
    set(fan[w], d);
  }

  const Graph& g_;
  std::size_t colors_;
  EdgeColoring coloring_;
  std::vector<std::vector<EdgeId>> at_;
};

}  // namespace

EdgeColoring vizing_coloring(const Graph& g) {
  if (!g.is_simple()) throw std::invalid_argument("vizing: graph is not simple");
  return FanColoring(g).run();
}

}  // namespace palette
