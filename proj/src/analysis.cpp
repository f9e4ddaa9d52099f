#include "palette/analysis.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "palette/decompose.hpp"
#include "palette/palettes.hpp"

namespace palette {
namespace {

constexpr Bound kInfinite = std::numeric_limits<Bound>::max();

Bound sat_add(Bound a, Bound b) { return a > kInfinite - b ? kInfinite : a + b; }
Bound sat_mul(Bound a, Bound b) { return (b != 0 && a > kInfinite / b) ? kInfinite : a * b; }
Bound pow2(std::uint64_t e) { return e >= 64 ? kInfinite : Bound{1} << e; }

void require_no_isolated(const Graph& g, const char* who) {
  if (g.has_isolated_vertices()) {
    throw std::invalid_argument(std::string(who) + ": graph has isolated vertices");
  }
}

void raise(TaggedBound& best, Bound value, const char* tag) {
  if (value > best.value) best = {value, tag};
}

bool has_pendant(const Graph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 1) return true;
  }
  return false;
}

}  // namespace

TaggedBound palette_lower_bound(const Graph& g, std::optional<std::size_t> chi_prime) {
  require_no_isolated(g, "palette_lower_bound");
  TaggedBound best{g.degree_set().size(), "distinct-degrees"};
  if (const auto p = biregular_profile(g); p && p->a < p->b) {
    raise(best, 1 + (p->b + p->a - 1) / p->a, "biregular-ratio");
    if (p->a == 3 && p->b == 5) raise(best, 5, "biregular-3-5");
    if (p->a == 2 && p->b % 2 == 1) raise(best, (p->b - 1) / 2 + 2, "biregular-2-odd");
  }
  if (g.is_regular() && chi_prime && g.edge_count() > 0) {
    raise(best, *chi_prime == g.max_degree() ? 1 : 3, "regular-class");
  }
  if (const auto grid = recognize_grid(g)) {
    raise(best, grid_palette_index(grid->first, grid->second), "grid");
  }
  return best;
}

BoundReport upper_bound_catalog(const Graph& g, std::optional<std::size_t> chi_prime) {
  require_no_isolated(g, "upper_bound_catalog");
  BoundReport report;
  report.lower = palette_lower_bound(g, chi_prime);
  auto& entries = report.entries;
  entries.push_back({report.lower.value, Direction::Lower, report.lower.tag, "largest lower rule", true});

  auto upper = [&](Bound value, std::string tag, std::string note, bool constructed = true) {
    entries.push_back({value, Direction::Upper, std::move(tag), std::move(note), constructed});
  };

  const std::size_t delta = g.max_degree();
  const std::size_t min_deg = g.min_degree();
  const auto bip = bipartition(g);
  const bool bipartite = bip.has_value();
  const bool even = g.is_even();
  const auto degrees = g.degree_set();

  upper(g.vertex_count(), "vertex-count", "one palette per vertex");
  if (g.is_simple()) {
    upper(pow2(delta + 1) - 2, "vizing-subsets", "simple graph, Delta+1 colors");
    if (g.is_regular()) upper(delta + 1, "regular-vizing", "regular simple graph");
  }
  if (delta >= min_deg && delta - min_deg <= 2 && g.edge_count() > 0) {
    upper(sat_add(sat_mul(delta, delta), delta + 1), "small-degree-spread",
          "Delta - delta <= 2; stated, not constructed", false);
  }
  if (bipartite) {
    if (g.is_regular()) upper(1, "regular-bipartite", "König coloring");
    upper(pow2(delta) - 1, "bipartite-konig-subsets", "bipartite, Delta colors");
    upper(sat_mul(delta + 2, pow2((delta + 1) / 2)), "bipartite-doubling-coarse", "bipartite");
    const std::size_t half = (delta + 1) / 2;
    Bound doubling = 0;
    for (std::size_t d : degrees) {
      doubling = sat_add(doubling, d % 2 == 1 ? sat_mul(binomial(half, (d + 1) / 2), d + 1)
                                              : binomial(half, d / 2));
    }
    upper(doubling, "bipartite-doubling", "bipartite, even closure");
    if (even) {
      Bound sum = 0;
      for (std::size_t d : degrees) sum = sat_add(sum, binomial(delta / 2, d / 2));
      upper(sum, "even-bipartite-2-factor", "even bipartite");
      if (delta == 4) upper(3, "even-bipartite-max-degree-4", "even bipartite, Delta = 4");
      if (delta == 6) upper(7, "even-bipartite-max-degree-6", "even bipartite, Delta = 6");
      if (delta == 8) {
        upper(13, "even-bipartite-max-degree-8", "even bipartite, Delta = 8; stated, not constructed",
              false);
      }
    }
    if (delta == 4) {
      const bool pendant = has_pendant(g);
      upper(pendant ? 11 : 7, "bipartite-max-degree-4",
            pendant ? "bipartite, Delta = 4" : "bipartite, Delta = 4, no pendant vertex");
    }
    if (delta == 5) {
      const bool perfect = 2 * maximum_matching(g, *bip).edge_ids.size() == g.vertex_count();
      upper(perfect ? 12 : 23, "bipartite-max-degree-5",
            perfect ? "bipartite, Delta = 5, perfect matching" : "bipartite, Delta = 5");
    }
  }
  if (const auto p = biregular_profile(g); p && p->a < p->b) {
    const std::size_t a = p->a;
    const std::size_t b = p->b;
    upper(sat_add(1, binomial(b, a)), "biregular-konig-subsets", "(a,b)-biregular");
    if (g.is_simple() && p->x_count == b && p->y_count == a) {
      upper(1 + b / std::gcd(a, b), "complete-bipartite-gcd", "complete bipartite");
    }
    if (a == 1) upper(b + 1, "star-forest", "(1,b)-biregular");
    if (a == 2 && b % 2 == 0) upper(b / 2 + 1, "biregular-2-even", "(2,2r)-biregular");
    if (b % 2 == 0 && a + 2 == b) upper(b / 2 + 1, "biregular-2r-2-2r", "(2r-2,2r)-biregular");
    if (a == 2 && b % 2 == 1) upper(b + 1, "biregular-2-odd", "(2,2r+1)-biregular");
    if (b % 3 == 0 && b >= 6) {
      const std::size_t r = b / 3;
      if (a == 3) upper(r * r + 1, "biregular-3-3r", "(3,3r)-biregular");
      if (a == 3 * r - 3) upper(r * r + 1, "biregular-3r-3-3r", "(3r-3,3r)-biregular");
    }
    if (b % 4 == 0 && b >= 8) {
      const std::size_t r = b / 4;
      if (a == 4) upper(r * r + 1, "biregular-4-4r", "(4,4r)-biregular");
      if (a == 4 * r - 4) upper(r * r + 1, "biregular-4r-4-4r", "(4r-4,4r)-biregular");
    }
    if (a == 5 && b % 5 == 0 && b >= 10) {
      const std::size_t r = b / 5;
      upper(r * r * r + 1, "biregular-5-5r", "(5,5r)-biregular");
    }
    if (a >= 2 && b == 2 * a) upper(pow2((a + 1) / 2) + 1, "biregular-r-2r", "(r,2r)-biregular");
    if (a == 3 && b == 5) upper(7, "biregular-3-5", "(3,5)-biregular");
  }
  if (const auto grid = recognize_grid(g)) {
    upper(grid_palette_index(grid->first, grid->second), "grid", "grid");
  }

  if (g.edge_count() > 0) {
    try {
      ConstructionResult built = color_auto(g);
      upper(count_palettes(g, built.coloring), "construction", built.theorem_tag);
      report.witness = std::move(built.coloring);
    } catch (const std::exception&) {
      // No construction applies; the formulas stand alone.
    }
  }

  report.upper = {kInfinite, ""};
  for (const auto& e : entries) {
    if (e.direction == Direction::Upper && e.value < report.upper.value) {
      report.upper = {e.value, e.tag};
    }
  }
  return report;
}

namespace {

struct Adjacency {
  explicit Adjacency(const Graph& g) : n(g.vertex_count()), bits(n * n, 0) {
    for (const Edge& e : g.edges()) {
      bits[e.u * n + e.v] = 1;
      bits[e.v * n + e.u] = 1;
    }
  }
  bool operator()(VertexId a, VertexId b) const { return bits[a * n + b] != 0; }
  std::size_t n;
  std::vector<char> bits;
};

// Families of one connected component; empty string when none applies.
std::string classify_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  const Adjacency adj(g);
  std::vector<VertexId> leaves;
  std::vector<VertexId> inner;
  for (VertexId v = 0; v < n; ++v) (g.degree(v) == 1 ? leaves : inner).push_back(v);

  if (m + 1 == n) {
    // Tree: a star with at least two leaves.
    if (inner.size() == 1 && leaves.size() >= 2) return "star";
    return "";
  }
  if (m != n) return "";
  auto leaves_hang_on = [&](VertexId center) {
    return std::all_of(leaves.begin(), leaves.end(),
                       [&](VertexId l) { return adj(l, center); });
  };
  auto triangle = [&](VertexId a, VertexId b, VertexId c) {
    return adj(a, b) && adj(b, c) && adj(a, c);
  };
  if (inner.size() == 3 && triangle(inner[0], inner[1], inner[2])) {
    if (leaves.empty()) return "K3";
    for (VertexId c : inner) {
      if (leaves_hang_on(c)) return "K3-pendants";
    }
    return "";
  }
  if (inner.size() == 4 && leaves.size() >= 3) {
    for (std::size_t s = 0; s < 4; ++s) {
      std::vector<VertexId> rest;
      for (std::size_t i = 0; i < 4; ++i) {
        if (i != s) rest.push_back(inner[i]);
      }
      if (!triangle(rest[0], rest[1], rest[2]) || !leaves_hang_on(inner[s])) continue;
      const auto links = std::count_if(rest.begin(), rest.end(),
                                       [&](VertexId t) { return adj(inner[s], t); });
      if (links == 1) return "K3-star-bridge";
    }
  }
  return "";
}

}  // namespace

FullPaletteClass classify_full_palette(const Graph& g) {
  if (!g.is_simple()) {
    throw std::invalid_argument("classify_full_palette: graph has loops or parallel edges");
  }
  if (g.vertex_count() == 0) return {true, "empty"};
  std::size_t isolated = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) isolated += g.degree(v) == 0;
  if (g.edge_count() == 0) return {g.vertex_count() == 1, g.vertex_count() == 1 ? "K1" : "none"};
  if (isolated > 1) return {};

  std::vector<Component> parts;
  for (auto& c : components(g)) {
    if (c.graph.edge_count() > 0) parts.push_back(std::move(c));
  }
  const std::string suffix = isolated == 1 ? "+K1" : "";
  if (parts.size() == 1) {
    const std::string family = classify_connected(parts[0].graph);
    if (family.empty()) return {};
    return {true, family + suffix};
  }
  if (parts.size() == 2) {
    const std::string f0 = classify_connected(parts[0].graph);
    const std::string f1 = classify_connected(parts[1].graph);
    const Graph& star = f0 == "star" ? parts[0].graph : parts[1].graph;
    const bool pair = (f0 == "K3" && f1 == "star") || (f0 == "star" && f1 == "K3");
    if (pair && star.edge_count() >= 3) return {true, "K3+star" + suffix};
  }
  return {};
}

std::optional<std::size_t> subgraph_regular_degree(const Graph& g, const std::vector<EdgeId>& edges) {
  if (edges.empty()) return std::nullopt;
  std::vector<std::size_t> degree(g.vertex_count(), 0);
  for (EdgeId e : edges) {
    ++degree[g.edge(e).u];
    ++degree[g.edge(e).v];
  }
  std::optional<std::size_t> common;
  for (std::size_t d : degree) {
    if (d == 0) continue;
    if (common && *common != d) return std::nullopt;
    common = d;
  }
  return common;
}

PaletteTwoDecision decide_palette_two(const Graph& g, const SearchLimits& limits) {
  PaletteTwoDecision out;
  const PaletteIndexResult exact = palette_index_exact(g, limits);
  out.proved = exact.proved;
  out.palette_index = exact.value;
  if (exact.value != 2) return out;
  out.is_two = true;

  const auto degrees = g.degree_set();
  if (degrees.size() != 2) {
    throw std::logic_error("decide_palette_two: two palettes on a graph without exactly two degrees");
  }
  const std::size_t d2 = *degrees.begin();
  EdgeColoring phi = exact.witness;
  auto color_sets = [&](std::set<Color>& c1, std::set<Color>& c2) {
    c1.clear();
    c2.clear();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      auto& target = g.degree(v) == d2 ? c2 : c1;
      for (EdgeId e : g.incident(v)) target.insert(phi[e]);
    }
  };
  std::set<Color> c1;
  std::set<Color> c2;
  // Move every color seen only at low-degree vertices onto a color seen only
  // at high-degree vertices.
  for (color_sets(c1, c2);; color_sets(c1, c2)) {
    auto j = std::find_if(c2.begin(), c2.end(), [&](Color c) { return !c1.count(c); });
    if (j == c2.end()) break;
    auto k = std::find_if(c1.begin(), c1.end(), [&](Color c) { return !c2.count(c); });
    if (k == c1.end()) throw std::logic_error("decide_palette_two: no free high-degree color");
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (phi[e] == *j) phi[e] = *k;
    }
  }

  PaletteTwoCertificate cert;
  for (EdgeId e = 0; e < g.edge_count(); ++e) (c2.count(phi[e]) ? cert.h2 : cert.h1).push_back(e);
  const auto r1 = subgraph_regular_degree(g, cert.h1);
  const auto r2 = subgraph_regular_degree(g, cert.h2);
  if (!r1 || !r2 || *r1 != c1.size() - c2.size() || *r2 != c2.size()) {
    throw std::logic_error("decide_palette_two: certificate parts are not regular Class 1 graphs");
  }
  std::vector<char> in_h2(g.vertex_count(), 0);
  for (EdgeId e : cert.h2) in_h2[g.edge(e).u] = in_h2[g.edge(e).v] = 1;
  for (EdgeId e : cert.h1) {
    if (!in_h2[g.edge(e).u] || !in_h2[g.edge(e).v]) {
      throw std::logic_error("decide_palette_two: V(H1) is not inside V(H2)");
    }
  }
  if (!is_proper(g, phi) || count_palettes(g, phi) != 2) {
    throw std::logic_error("decide_palette_two: recoloring broke the witness");
  }
  cert.coloring = std::move(phi);
  cert.h1_degree = *r1;
  cert.h2_degree = *r2;
  out.certificate = std::move(cert);
  return out;
}

}  // namespace palette
