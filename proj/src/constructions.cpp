#include "palette/constructions.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

#include "palette/decompose.hpp"
#include "palette/exact.hpp"
#include "palette/palettes.hpp"

namespace palette {

Bound binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr Bound kMax = std::numeric_limits<Bound>::max();
  Bound result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    const Bound factor = n - k + i;
    const Bound g = std::gcd(result, i);
    const Bound num = result / g;
    const Bound den = i / g;
    if (num > kMax / (factor / den)) return kMax;
    result = num * (factor / den);
  }
  return result;
}

namespace {

constexpr Bound kInfinite = std::numeric_limits<Bound>::max();

Bound sat_add(Bound a, Bound b) { return a > kInfinite - b ? kInfinite : a + b; }
Bound sat_mul(Bound a, Bound b) { return (b != 0 && a > kInfinite / b) ? kInfinite : a * b; }
Bound pow2(std::uint64_t e) { return e >= 64 ? kInfinite : Bound{1} << e; }

ConstructionResult finish(const Graph& g, EdgeColoring coloring, Bound bound, std::string tag) {
  const auto violations = verify_proper(g, coloring);
  if (!violations.empty()) {
    throw std::logic_error(tag + " produced an improper coloring");
  }
  const std::size_t palettes = count_palettes(g, coloring);
  if (palettes > bound) {
    throw std::logic_error(tag + " produced " + std::to_string(palettes) +
                           " palettes, above its bound " + std::to_string(bound));
  }
  ConstructionResult r;
  r.colors_used = coloring.colors_used();
  r.coloring = std::move(coloring);
  r.claimed_palette_bound = bound;
  r.theorem_tag = std::move(tag);
  return r;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConstructionError(what);
}

Bipartition require_bipartite(const Graph& g, const std::string& who) {
  require(!g.has_loops(), who + ": graph has loops");
  auto bip = bipartition(g);
  require(bip.has_value(), who + ": graph is not bipartite");
  return *bip;
}

void require_no_isolated(const Graph& g, const std::string& who) {
  require(!g.has_isolated_vertices(), who + ": graph has isolated vertices");
}

std::vector<EdgeId> complement_edges(std::size_t edge_count, std::span<const EdgeId> removed) {
  std::vector<char> gone(edge_count, 0);
  for (EdgeId e : removed) gone[e] = 1;
  std::vector<EdgeId> rest;
  for (EdgeId e = 0; e < edge_count; ++e) {
    if (!gone[e]) rest.push_back(e);
  }
  return rest;
}

// Copies colors of a subgraph (edge i of sub = host edge ids[i]) into host,
// shifted by `offset`.
void paste(EdgeColoring& host, const EdgeColoring& sub, std::span<const EdgeId> ids,
           Color offset = 0) {
  for (std::size_t i = 0; i < ids.size(); ++i) host[ids[i]] = sub[static_cast<EdgeId>(i)] + offset;
}

// Pad to a D-regular multigraph with loops, 2-factorize, color the cycles of
// factor i alternately 2i+1, 2i+2. Isolated vertices are tolerated.
EdgeColoring even_bipartite_core(const Graph& g) {
  const std::size_t delta = g.max_degree();
  const std::size_t m = g.edge_count();
  EdgeColoring coloring(m);
  if (delta == 0) return coloring;

  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    edges.insert(edges.end(), (delta - g.degree(v)) / 2, Edge{v, v});
  }
  const Graph padded(g.vertex_count(), std::move(edges), /*loop_allowed=*/true);
  const FactorSet factors = two_factorization(padded);

  std::vector<std::vector<EdgeId>> at(g.vertex_count());
  for (std::size_t i = 0; i < factors.factors.size(); ++i) {
    for (auto& list : at) list.clear();
    for (EdgeId e : factors.factors[i]) {
      if (e >= m) continue;
      at[g.edge(e).u].push_back(e);
      at[g.edge(e).v].push_back(e);
    }
    const auto low = static_cast<Color>(2 * i + 1);
    for (VertexId start = 0; start < g.vertex_count(); ++start) {
      if (at[start].empty() || coloring[at[start].front()] != EdgeColoring::kUncolored) continue;
      // Factor edges at a vertex are ascending, so front() is the smaller one.
      VertexId cur = start;
      EdgeId e = at[start].front();
      Color c = low;
      while (true) {
        coloring[e] = c;
        c = c == low ? low + 1 : low;
        cur = g.other(e, cur);
        const auto& here = at[cur];
        auto next = std::find_if(here.begin(), here.end(), [&](EdgeId f) {
          return coloring[f] == EdgeColoring::kUncolored;
        });
        if (next == here.end()) break;
        e = *next;
      }
    }
  }
  return coloring;
}

Bound even_bipartite_bound(const Graph& g) {
  const std::size_t half = g.max_degree() / 2;
  Bound total = 0;
  for (std::size_t d : g.degree_set()) total = sat_add(total, binomial(half, d / 2));
  return total;
}

EdgeColoring doubling_core(const Graph& g) {
  if (g.is_even()) return even_bipartite_core(g);
  const EvenClosure closure = even_closure(g);
  const EdgeColoring full = even_bipartite_core(closure.graph);
  EdgeColoring coloring(g.edge_count());
  for (EdgeId e = 0; e < closure.embedding.size(); ++e) coloring[closure.embedding[e]] = full[e];
  return coloring;
}

Bound doubling_bound(const Graph& g) {
  const std::size_t half = (g.max_degree() + 1) / 2;
  Bound total = 0;
  for (std::size_t d : g.degree_set()) {
    if (d % 2 == 1) {
      total = sat_add(total, sat_mul(binomial(half, (d + 1) / 2), d + 1));
    } else {
      total = sat_add(total, binomial(half, d / 2));
    }
  }
  return total;
}

bool has_pendant(const Graph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 1) return true;
  }
  return false;
}

// (a,b)-biregular layout or a ConstructionError naming the expected profile.
BiregularLayout require_layout(const Graph& g, const std::string& who) {
  require(!g.has_loops(), who + ": graph has loops");
  auto layout = biregular_layout(g);
  require(layout.has_value(), who + ": graph is not biregular");
  return *layout;
}

Bipartition sides_of_split(const SplitGraph& split, const Bipartition& sides) {
  Bipartition out;
  out.side_of.reserve(split.back_map.size());
  for (VertexId v : split.back_map) out.side_of.push_back(sides.side(v));
  return out;
}

std::vector<EdgeId> perfect_matching_of(const Graph& h, const Bipartition& bip,
                                        const std::string& who) {
  auto m = maximum_matching(h, bip).edge_ids;
  if (2 * m.size() != h.vertex_count()) {
    throw std::logic_error(who + ": regular bipartite graph without a perfect matching");
  }
  return m;
}

// At every Y-vertex, colors the given edges first, first+1, ... in
// ascending edge order.
void color_per_y_ascending(const Graph& g, const Bipartition& sides, std::span<const EdgeId> edges,
                           Color first, EdgeColoring& out) {
  std::vector<Color> next(g.vertex_count(), first);
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  for (EdgeId e : sorted) {
    const auto [u, v] = g.edge(e);
    const VertexId y = sides.side(u) == Side::Y ? u : v;
    out[e] = next[y]++;
  }
}

// Red/blue split of an even bipartite graph whose components have even size,
// each half colored by the even-bipartite scheme; blue shifted by D/2.
EdgeColoring parity_core(const Graph& g) {
  const ParitySplit split = parity_split(g);
  const auto shift = static_cast<Color>(g.max_degree() / 2);
  EdgeColoring coloring(g.edge_count());
  paste(coloring, even_bipartite_core(g.edge_subgraph(split.red)), split.red);
  paste(coloring, even_bipartite_core(g.edge_subgraph(split.blue)), split.blue, shift);
  return coloring;
}

// (2k,4k)-biregular: decompose into k (2,4)-biregular graphs and color the
// i-th one with 4i+1..4i+4.
EdgeColoring r2r_even_core(const Graph& g, const Bipartition& sides, std::size_t k) {
  const SplitGraph by_x = split_part_vertices(g, sides, Side::X, k);
  const Bipartition bx = sides_of_split(by_x, sides);
  const SplitGraph by_y = split_part_vertices(by_x.graph, bx, Side::Y, k);
  const Bipartition by = sides_of_split(by_y, bx);
  const EdgeColoring classes = konig_coloring(by_y.graph, by);

  std::vector<std::vector<EdgeId>> parts(k);
  for (EdgeId e = 0; e < g.edge_count(); ++e) parts[classes[e] - 1].push_back(e);
  EdgeColoring coloring(g.edge_count());
  for (std::size_t i = 0; i < k; ++i) {
    paste(coloring, even_bipartite_core(g.edge_subgraph(parts[i])), parts[i],
          static_cast<Color>(4 * i));
  }
  return coloring;
}

}  // namespace

ConstructionResult color_even_bipartite(const Graph& g) {
  const std::string who = "even-bipartite";
  require_bipartite(g, who);
  require(g.is_even(), who + ": graph has odd-degree vertices");
  require_no_isolated(g, who);
  return finish(g, even_bipartite_core(g), even_bipartite_bound(g), "even-bipartite-2-factor");
}

ConstructionResult color_via_doubling(const Graph& g) {
  const std::string who = "doubling";
  require_bipartite(g, who);
  require_no_isolated(g, who);
  Bound bound = doubling_bound(g);
  if (g.max_degree() == 4) bound = std::min<Bound>(bound, has_pendant(g) ? 11 : 7);
  return finish(g, doubling_core(g), bound, "bipartite-doubling");
}

ConstructionResult color_deg5(const Graph& g) {
  const std::string who = "deg5";
  const Bipartition bip = require_bipartite(g, who);
  require(g.max_degree() == 5, who + ": maximum degree is not 5");
  require_no_isolated(g, who);

  auto matching = maximum_matching(g, bip).edge_ids;
  Bound bound = 12;
  if (2 * matching.size() != g.vertex_count()) {
    matching = matching_covering_max_degree(g, bip).edge_ids;
    bound = 23;
  }
  const auto rest = complement_edges(g.edge_count(), matching);
  EdgeColoring coloring(g.edge_count());
  paste(coloring, doubling_core(g.edge_subgraph(rest)), rest);
  for (EdgeId e : matching) coloring[e] = 5;
  return finish(g, std::move(coloring), bound, bound == 12 ? "deg5-perfect-matching" : "deg5-matching");
}

// Grid colorings follow the row/column rules verbatim, with 1-based (i, j).
namespace {

struct GridIds {
  std::size_t m;
  std::size_t n;
  EdgeId horizontal(std::size_t i, std::size_t j) const {  // v_j^(i) v_{j+1}^(i)
    return static_cast<EdgeId>((i - 1) * (n - 1) + (j - 1));
  }
  EdgeId vertical(std::size_t i, std::size_t j) const {  // v_j^(i) v_j^(i+1)
    return static_cast<EdgeId>(m * (n - 1) + (i - 1) * n + (j - 1));
  }
};

// m even.
EdgeColoring grid_alpha(std::size_t m, std::size_t n) {
  const GridIds id{m, n};
  EdgeColoring c(m * (n - 1) + n * (m - 1));
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j < n; ++j) c[id.horizontal(i, j)] = j % 2 == 1 ? 2 : 1;
  }
  for (std::size_t i = 1; i <= m / 2; ++i) {
    for (std::size_t j = 1; j < n; ++j) c[id.vertical(2 * i - 1, j)] = j == 1 ? 1 : 3;
    c[id.vertical(2 * i - 1, n)] = n % 2 == 1 ? 2 : 1;
  }
  for (std::size_t i = 1; i + 1 <= m / 2; ++i) {
    for (std::size_t j = 1; j <= n; ++j) c[id.vertical(2 * i, j)] = (j == 1 || j == n) ? 3 : 4;
  }
  return c;
}

EdgeColoring grid_beta(std::size_t n) {
  const GridIds id{3, n};
  EdgeColoring c(3 * (n - 1) + 2 * n);
  for (std::size_t j = 1; j < n; ++j) {
    const bool odd = j % 2 == 1;
    c[id.horizontal(1, j)] = odd ? 2 : 1;
    c[id.horizontal(2, j)] = odd ? 2 : 4;
    c[id.horizontal(3, j)] = odd ? 4 : 2;
  }
  for (std::size_t j = 2; j < n; ++j) {
    c[id.vertical(1, j)] = 3;
    c[id.vertical(2, j)] = 1;
  }
  c[id.vertical(1, 1)] = 1;
  c[id.vertical(2, n)] = 1;
  c[id.vertical(1, n)] = 2;
  c[id.vertical(2, 1)] = 3;
  return c;
}

}  // namespace

Bound grid_palette_index(std::size_t m, std::size_t n) {
  if (m < 2 || n < 2) throw ConstructionError("grid dimensions must be >= 2");
  if (m == 2 && n == 2) return 1;
  if (std::min(m, n) == 2) return 2;
  return (m * n) % 2 == 0 ? 3 : 5;
}

ConstructionResult color_grid(std::size_t m, std::size_t n) {
  const Bound value = grid_palette_index(m, n);
  const Graph g = gen_grid(m, n);
  const GridIds id{m, n};
  EdgeColoring c(g.edge_count());
  if (m % 2 == 0) {
    c = grid_alpha(m, n);
  } else if (n % 2 == 0) {
    // Transpose: v_j^(i) of G(m,n) is v_i^(j) of G(n,m).
    const GridIds t{n, m};
    const EdgeColoring ct = grid_alpha(n, m);
    for (std::size_t i = 1; i <= m; ++i) {
      for (std::size_t j = 1; j < n; ++j) c[id.horizontal(i, j)] = ct[t.vertical(j, i)];
    }
    for (std::size_t i = 1; i < m; ++i) {
      for (std::size_t j = 1; j <= n; ++j) c[id.vertical(i, j)] = ct[t.horizontal(j, i)];
    }
  } else if (m == 3) {
    c = grid_beta(n);
  } else {
    // Rows 1..m-3 by the even rule, rows m-2..m by the three-row rule, the
    // joining column edges colored 4.
    const std::size_t top = m - 3;
    const GridIds upper{top, n};
    const GridIds lower{3, n};
    const EdgeColoring ca = grid_alpha(top, n);
    const EdgeColoring cb = grid_beta(n);
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t i = 1; i <= top; ++i) c[id.horizontal(i, j)] = ca[upper.horizontal(i, j)];
      for (std::size_t i = 1; i <= 3; ++i) c[id.horizontal(top + i, j)] = cb[lower.horizontal(i, j)];
    }
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t i = 1; i < top; ++i) c[id.vertical(i, j)] = ca[upper.vertical(i, j)];
      for (std::size_t i = 1; i < 3; ++i) c[id.vertical(top + i, j)] = cb[lower.vertical(i, j)];
      c[id.vertical(top, j)] = 4;
    }
  }
  return finish(g, std::move(c), value, "grid");
}

ConstructionResult color_grid_graph(const Graph& g) {
  const auto grid = recognize_grid(g);
  require(grid.has_value(), "grid: graph is not a gen_grid labeling");
  const auto [m, n] = *grid;
  const Graph canonical = gen_grid(m, n);
  const ConstructionResult r = color_grid(m, n);
  std::map<std::pair<VertexId, VertexId>, Color> by_ends;
  for (EdgeId e = 0; e < canonical.edge_count(); ++e) {
    by_ends[{canonical.edge(e).u, canonical.edge(e).v}] = r.coloring[e];
  }
  EdgeColoring c(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    c[e] = by_ends.at({std::min(u, v), std::max(u, v)});
  }
  return finish(g, std::move(c), r.claimed_palette_bound, r.theorem_tag);
}

ConstructionResult color_complete_bipartite(std::size_t a, std::size_t b) {
  if (a < 1 || a >= b) throw ConstructionError("complete bipartite construction needs 1 <= a < b");
  const std::size_t d = std::gcd(a, b);
  const std::size_t blocks = b / d;
  auto f = [d](std::size_t i) { return 1 + (i - 1) % d; };
  auto alpha = [d](std::size_t i, std::size_t j) -> std::size_t {
    const std::size_t folded = 1 + (i + j - 2) % d;
    if (i + j == d + 1) {
      if (folded != d) throw std::logic_error("K_{d,d} base coloring residue mismatch");
      return d;
    }
    return folded;
  };
  const Graph g = gen_complete_bipartite(a, b);
  EdgeColoring c(a * b);
  for (std::size_t i = 1; i <= a; ++i) {
    for (std::size_t j = 1; j <= b; ++j) {
      const std::size_t h = ((i - 1) / d + (j - 1) / d) % blocks;
      c[static_cast<EdgeId>((i - 1) * b + (j - 1))] = static_cast<Color>(alpha(f(i), f(j)) + d * h);
    }
  }
  return finish(g, std::move(c), 1 + blocks, "complete-bipartite-gcd");
}

ConstructionResult color_3_3r(const Graph& g, bool variant) {
  const std::string who = variant ? "biregular-3r-3-3r" : "biregular-3-3r";
  const BiregularLayout layout = require_layout(g, who);
  const auto [a, b, xc, yc] = layout.profile;
  require(b % 3 == 0 && b >= 6, who + ": Y-degree must be 3r with r >= 2");
  const std::size_t r = b / 3;
  require(a == (variant ? 3 * r - 3 : 3), who + ": profile mismatch");

  const Bipartition& sides = layout.sides;
  SplitGraph h = split_part_vertices(g, sides, Side::Y, 3);
  Bipartition hb = sides_of_split(h, sides);
  if (variant) {
    h = split_part_vertices(h.graph, hb, Side::X, 3);
    hb = sides_of_split(h, hb);
  }
  const auto f_edges = perfect_matching_of(h.graph, hb, who);
  const auto rest = complement_edges(g.edge_count(), f_edges);

  EdgeColoring coloring(g.edge_count());
  paste(coloring, even_bipartite_core(g.edge_subgraph(rest)), rest);
  const auto shift = static_cast<Color>(2 * r);
  if (variant) {
    const Graph f = g.edge_subgraph(f_edges);
    paste(coloring, konig_coloring(f, sides), f_edges, shift);
  } else {
    color_per_y_ascending(g, sides, f_edges, shift + 1, coloring);
  }
  return finish(g, std::move(coloring), r * r + 1, who);
}

ConstructionResult color_4_4r(const Graph& g, bool variant) {
  const std::string who = variant ? "biregular-4r-4-4r" : "biregular-4-4r";
  const BiregularLayout layout = require_layout(g, who);
  const auto [a, b, xc, yc] = layout.profile;
  require(b % 4 == 0 && b >= 8, who + ": Y-degree must be 4r with r >= 2");
  const std::size_t r = b / 4;
  require(a == (variant ? 4 * r - 4 : 4), who + ": profile mismatch");
  return finish(g, parity_core(g), r * r + 1, who);
}

ConstructionResult color_5_5r(const Graph& g) {
  const std::string who = "biregular-5-5r";
  const BiregularLayout layout = require_layout(g, who);
  const auto [a, b, xc, yc] = layout.profile;
  require(a == 5 && b % 5 == 0 && b >= 10, who + ": profile must be (5,5r) with r >= 2");
  const std::size_t r = b / 5;

  const SplitGraph h = split_part_vertices(g, layout.sides, Side::Y, 5);
  const auto f_edges = perfect_matching_of(h.graph, sides_of_split(h, layout.sides), who);
  const auto rest = complement_edges(g.edge_count(), f_edges);
  EdgeColoring coloring(g.edge_count());
  paste(coloring, parity_core(g.edge_subgraph(rest)), rest);
  color_per_y_ascending(g, layout.sides, f_edges, static_cast<Color>(4 * r + 1), coloring);
  return finish(g, std::move(coloring), r * r * r + 1, who);
}

ConstructionResult color_r_2r(const Graph& g) {
  const std::string who = "biregular-r-2r";
  const BiregularLayout layout = require_layout(g, who);
  const auto [a, b, xc, yc] = layout.profile;
  require(a >= 2 && b == 2 * a, who + ": profile must be (r,2r) with r >= 2");
  const std::size_t r = a;
  const Bipartition& sides = layout.sides;

  if (r % 2 == 0) {
    const std::size_t k = r / 2;
    return finish(g, r2r_even_core(g, sides, k), pow2(k) + 1, who);
  }
  const std::size_t k = r / 2;
  const SplitGraph h = split_part_vertices(g, sides, Side::Y, r);
  const auto f_edges = perfect_matching_of(h.graph, sides_of_split(h, sides), who);
  const auto rest = complement_edges(g.edge_count(), f_edges);
  EdgeColoring coloring(g.edge_count());
  paste(coloring, r2r_even_core(g.edge_subgraph(rest), sides, k), rest);
  color_per_y_ascending(g, sides, f_edges, static_cast<Color>(4 * k + 1), coloring);
  return finish(g, std::move(coloring), pow2(k + 1) + 1, who);
}

ConstructionResult color_3_5(const Graph& g) {
  const std::string who = "biregular-3-5";
  const BiregularLayout layout = require_layout(g, who);
  require(layout.profile.a == 3 && layout.profile.b == 5, who + ": profile must be (3,5)");
  const auto matching = maximum_matching(g, layout.sides).edge_ids;
  if (matching.size() != layout.profile.y_count) {
    throw std::logic_error(who + ": matching does not saturate the degree-5 side");
  }
  const auto rest = complement_edges(g.edge_count(), matching);
  EdgeColoring coloring(g.edge_count());
  paste(coloring, doubling_core(g.edge_subgraph(rest)), rest);
  for (EdgeId e : matching) coloring[e] = 5;
  return finish(g, std::move(coloring), 7, who);
}

namespace {

// Interval coloring with colors 1..top of a (2, top-1)-biregular graph:
// every Y-vertex sees a window of top-1 consecutive colors, every X-vertex
// two consecutive colors. Depth-first search over edges, most constrained
// edge first.
class IntervalSearch {
 public:
  IntervalSearch(const Graph& g, const Bipartition& sides, Color top, std::uint64_t budget)
      : g_(g), sides_(sides), top_(top), budget_(budget), color_(g.edge_count()) {}

  bool run() { return dfs(0); }
  const EdgeColoring& coloring() const { return color_; }
  bool exhausted() const { return exhausted_; }

 private:
  // Bitmask of admissible colors (bit c for color c).
  std::uint64_t domain(EdgeId e) const {
    const auto [u, v] = g_.edge(e);
    const VertexId x = sides_.side(u) == Side::X ? u : v;
    const VertexId y = x == u ? v : u;
    std::uint64_t mask = 0;
    for (Color c = 1; c <= top_; ++c) mask |= std::uint64_t{1} << c;
    // X side: partner edge fixes the color to its neighbors.
    for (EdgeId f : g_.incident(x)) {
      if (f == e || color_[f] == EdgeColoring::kUncolored) continue;
      const Color c = color_[f];
      std::uint64_t allowed = 0;
      if (c - 1 >= 1) allowed |= std::uint64_t{1} << (c - 1);
      if (c + 1 <= top_) allowed |= std::uint64_t{1} << (c + 1);
      mask &= allowed;
    }
    // Y side: distinct colors inside a window of width top-1.
    Color lo = top_ + 1;
    Color hi = 0;
    for (EdgeId f : g_.incident(y)) {
      if (f == e || color_[f] == EdgeColoring::kUncolored) continue;
      mask &= ~(std::uint64_t{1} << color_[f]);
      lo = std::min(lo, color_[f]);
      hi = std::max(hi, color_[f]);
    }
    if (hi > 0) {
      for (Color c = 1; c <= top_; ++c) {
        if (std::max(hi, c) - std::min(lo, c) > top_ - 2) mask &= ~(std::uint64_t{1} << c);
      }
    }
    return mask;
  }

  bool dfs(std::size_t colored) {
    if (colored == g_.edge_count()) return true;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    EdgeId best = 0;
    std::uint64_t best_mask = 0;
    int best_count = std::numeric_limits<int>::max();
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (color_[e] != EdgeColoring::kUncolored) continue;
      const std::uint64_t mask = domain(e);
      const int count = std::popcount(mask);
      if (count < best_count) {
        best = e;
        best_mask = mask;
        best_count = count;
        if (count == 0) return false;
      }
    }
    for (Color c = 1; c <= top_; ++c) {
      if (!(best_mask >> c & 1)) continue;
      color_[best] = c;
      if (dfs(colored + 1)) return true;
      if (exhausted_) break;
    }
    color_[best] = EdgeColoring::kUncolored;
    return false;
  }

  const Graph& g_;
  const Bipartition& sides_;
  Color top_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  EdgeColoring color_;
};

}  // namespace

ConstructionResult color_2_odd(const Graph& g, std::uint64_t node_budget) {
  const std::string who = "biregular-2-odd";
  const BiregularLayout layout = require_layout(g, who);
  const auto [a, b, xc, yc] = layout.profile;
  require(a == 2 && b % 2 == 1 && b >= 3, who + ": profile must be (2,2r+1)");
  const std::size_t r = (b - 1) / 2;
  const auto top = static_cast<Color>(2 * r + 2);
  require(top < 63, who + ": degree too large for the interval search");

  EdgeColoring coloring(g.edge_count());
  // Components are independent; searching them separately keeps the budget
  // meaningful on disconnected inputs.
  for (const auto& comp : components(g)) {
    if (comp.graph.edge_count() == 0) continue;
    Bipartition local{std::vector<Side>(comp.vertex_map.size())};
    for (VertexId v = 0; v < comp.vertex_map.size(); ++v) {
      local.side_of[v] = layout.sides.side(comp.vertex_map[v]);
    }
    IntervalSearch search(comp.graph, local, top, node_budget);
    if (!search.run()) {
      throw std::runtime_error(search.exhausted()
                                   ? who + ": interval coloring search exhausted its budget"
                                   : who + ": no interval coloring exists");
    }
    for (EdgeId e = 0; e < comp.edge_map.size(); ++e) {
      const Color folded = (search.coloring()[e] - 1) % (top - 1) + 1;
      coloring[comp.edge_map[e]] = folded;
    }
  }
  return finish(g, std::move(coloring), 2 * r + 2, who);
}

ConstructionResult color_star_forest(const Graph& g) {
  const std::string who = "star-forest";
  const BiregularLayout layout = require_layout(g, who);
  require(layout.profile.a == 1, who + ": profile must be (1,b)");
  std::vector<EdgeId> all(g.edge_count());
  std::iota(all.begin(), all.end(), EdgeId{0});
  EdgeColoring coloring(g.edge_count());
  if (layout.profile.b == 1) {
    for (EdgeId e : all) coloring[e] = 1;
    return finish(g, std::move(coloring), 1, who);
  }
  color_per_y_ascending(g, layout.sides, all, 1, coloring);
  return finish(g, std::move(coloring), layout.profile.b + 1, who);
}

ConstructionResult color_biregular_konig(const Graph& g) {
  const std::string who = "biregular-konig";
  const BiregularLayout layout = require_layout(g, who);
  const auto [a, b, xc, yc] = layout.profile;
  const Bound bound = a == b ? 1 : sat_add(1, binomial(b, a));
  return finish(g, konig_coloring(g, layout.sides), bound, a == b ? "regular-bipartite-konig" : who);
}

namespace {

struct Candidate {
  Bound bound;
  std::function<ConstructionResult()> build;
};

bool is_complete_bipartite(const Graph& g, const BiregularProfile& p) {
  return g.is_simple() && p.x_count == p.b && p.y_count == p.a && g.edge_count() == p.a * p.b;
}

// Colors an arbitrary labeling of K_{a,b} (a < b) through the canonical one.
ConstructionResult complete_bipartite_relabeled(const Graph& g, const BiregularLayout& layout) {
  const auto [a, b, xc, yc] = layout.profile;
  require(a < b && is_complete_bipartite(g, layout.profile),
          "complete-bipartite: graph is not K_{a,b} with a < b");
  std::vector<std::size_t> rank(g.vertex_count());
  std::size_t nx = 0;
  std::size_t ny = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    rank[v] = layout.sides.side(v) == Side::X ? nx++ : ny++;
  }
  const ConstructionResult canonical = color_complete_bipartite(a, b);
  EdgeColoring coloring(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    const VertexId x = layout.sides.side(u) == Side::X ? u : v;
    const VertexId y = x == u ? v : u;
    // Y (degree b) plays u_i, X (degree a) plays v_j.
    coloring[e] = canonical.coloring[static_cast<EdgeId>(rank[y] * b + rank[x])];
  }
  return finish(g, std::move(coloring), canonical.claimed_palette_bound, canonical.theorem_tag);
}

}  // namespace

ConstructionResult color_complete_bipartite_graph(const Graph& g) {
  return complete_bipartite_relabeled(g, require_layout(g, "complete-bipartite"));
}

namespace {

std::vector<Candidate> biregular_candidates(const Graph& g, const BiregularLayout& layout) {
  const auto [a, b, xc, yc] = layout.profile;
  std::vector<Candidate> out;
  if (a == b) {
    out.push_back({1, [&g] { return color_biregular_konig(g); }});
    return out;
  }
  if (is_complete_bipartite(g, layout.profile)) {
    out.push_back({1 + b / std::gcd(a, b), [&g, layout] { return complete_bipartite_relabeled(g, layout); }});
  }
  if (a == 1) out.push_back({b + 1, [&g] { return color_star_forest(g); }});
  if (a % 2 == 0 && b % 2 == 0) {
    out.push_back({sat_add(1, binomial(b / 2, a / 2)), [&g] { return color_even_bipartite(g); }});
  }
  if (a == 2 && b % 2 == 1) out.push_back({b + 1, [&g] { return color_2_odd(g); }});
  if (b % 3 == 0 && b >= 6) {
    const std::size_t r = b / 3;
    if (a == 3) out.push_back({r * r + 1, [&g] { return color_3_3r(g, false); }});
    if (a == 3 * r - 3 && r >= 3) out.push_back({r * r + 1, [&g] { return color_3_3r(g, true); }});
  }
  if (b % 4 == 0 && b >= 8) {
    const std::size_t r = b / 4;
    if (a == 4) out.push_back({r * r + 1, [&g] { return color_4_4r(g, false); }});
    if (a == 4 * r - 4 && r >= 3) out.push_back({r * r + 1, [&g] { return color_4_4r(g, true); }});
  }
  if (a == 5 && b % 5 == 0 && b >= 10) {
    const std::size_t r = b / 5;
    out.push_back({r * r * r + 1, [&g] { return color_5_5r(g); }});
  }
  if (a >= 2 && b == 2 * a) out.push_back({pow2((a + 1) / 2) + 1, [&g] { return color_r_2r(g); }});
  if (a == 3 && b == 5) out.push_back({7, [&g] { return color_3_5(g); }});
  {
    Bound bound = doubling_bound(g);
    if (b == 4) bound = std::min<Bound>(bound, has_pendant(g) ? 11 : 7);
    out.push_back({bound, [&g] { return color_via_doubling(g); }});
  }
  if (b == 5) out.push_back({23, [&g] { return color_deg5(g); }});
  out.push_back({sat_add(1, binomial(b, a)), [&g] { return color_biregular_konig(g); }});
  return out;
}

ConstructionResult best_of(std::vector<Candidate> candidates) {
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& l, const Candidate& r) { return l.bound < r.bound; });
  std::string failures;
  for (const auto& c : candidates) {
    try {
      return c.build();
    } catch (const std::runtime_error& e) {
      failures += std::string(failures.empty() ? "" : "; ") + e.what();
    }
  }
  throw std::runtime_error("no construction succeeded: " + failures);
}

}  // namespace

ConstructionResult color_biregular_auto(const Graph& g) {
  const BiregularLayout layout = require_layout(g, "biregular-auto");
  return best_of(biregular_candidates(g, layout));
}

ConstructionResult color_auto(const Graph& g) {
  require(!g.has_loops(), "auto: graph has loops");
  require_no_isolated(g, "auto");
  if (g.edge_count() == 0) return finish(g, EdgeColoring{}, 0, "empty");
  if (const auto layout = biregular_layout(g)) return best_of(biregular_candidates(g, *layout));

  std::vector<Candidate> out;
  if (const auto grid = recognize_grid(g)) {
    out.push_back({grid_palette_index(grid->first, grid->second), [&g] { return color_grid_graph(g); }});
  }
  const std::size_t delta = g.max_degree();
  const Bound trivial = g.vertex_count();
  if (bipartition(g)) {
    if (g.is_even()) {
      out.push_back({even_bipartite_bound(g), [&g] { return color_even_bipartite(g); }});
    }
    Bound bound = doubling_bound(g);
    if (delta == 4) bound = std::min<Bound>(bound, has_pendant(g) ? 11 : 7);
    out.push_back({bound, [&g] { return color_via_doubling(g); }});
    if (delta == 5) out.push_back({23, [&g] { return color_deg5(g); }});
    out.push_back({std::min(trivial, pow2(delta) - 1), [&g] {
                     const Bound b = std::min<Bound>(g.vertex_count(), pow2(g.max_degree()) - 1);
                     return finish(g, konig_coloring(g, *bipartition(g)), b, "bipartite-konig");
                   }});
  } else if (g.is_simple()) {
    const Bound vizing = g.is_regular() ? delta + 1 : pow2(delta + 1) - 2;
    out.push_back({std::min(trivial, vizing), [&g, trivial, vizing] {
                     return finish(g, vizing_coloring(g), std::min(trivial, vizing), "vizing");
                   }});
  } else {
    // First fit in edge order; at most 2*Delta - 1 colors.
    out.push_back({trivial, [&g, trivial] {
                     EdgeColoring c(g.edge_count());
                     for (EdgeId e = 0; e < g.edge_count(); ++e) {
                       std::vector<bool> taken(2 * g.max_degree() + 1, false);
                       for (VertexId v : {g.edge(e).u, g.edge(e).v}) {
                         for (EdgeId f : g.incident(v)) taken[c[f]] = true;
                       }
                       Color k = 1;
                       while (taken[k]) ++k;
                       c[e] = k;
                     }
                     return finish(g, c, trivial, "greedy");
                   }});
  }
  return best_of(std::move(out));
}

}  // namespace palette
