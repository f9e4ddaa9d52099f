#include "palette/io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "palette/palettes.hpp"

namespace palette {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

// Non-empty, non-comment lines.
std::vector<Line> content_lines(std::string_view text, bool skip_key_values) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    auto tokens = split(raw);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (skip_key_values && tokens[0].find('=') != std::string_view::npos) continue;
    lines.push_back({number, std::move(tokens)});
  }
  return lines;
}

std::size_t number_at(const Line& line, std::size_t index, const char* what) {
  if (index >= line.tokens.size()) throw ParseError(line.number, std::string("missing ") + what);
  const std::string_view tok = line.tokens[index];
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line.number, std::string("bad ") + what + " '" + std::string(tok) + "'");
  }
  return value;
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n) {
    throw ParseError(line.number, "expected " + std::to_string(n - 1) + " fields after '" +
                                      std::string(line.tokens[0]) + "'");
  }
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = content_lines(text, false);
  if (lines.empty()) throw ParseError(0, "missing 'p' header");
  const Line& header = lines.front();
  if (header.tokens[0] != "p") throw ParseError(header.number, "expected 'p <vertices> <edges>' header");
  expect_arity(header, 3);
  const std::size_t n = number_at(header, 1, "vertex count");
  const std::size_t m = number_at(header, 2, "edge count");

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "e") {
      throw ParseError(line.number, "unexpected record '" + std::string(line.tokens[0]) + "'");
    }
    expect_arity(line, 3);
    if (edges.size() == m) throw ParseError(line.number, "more edges than the header declares");
    const std::size_t u = number_at(line, 1, "endpoint");
    const std::size_t v = number_at(line, 2, "endpoint");
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError(line.number, "endpoint out of range 1.." + std::to_string(n));
    }
    if (u == v) throw ParseError(line.number, "loops are not supported");
    edges.push_back({static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1)});
  }
  if (edges.size() != m) {
    throw ParseError(lines.back().number, "header declares " + std::to_string(m) + " edges, found " +
                                              std::to_string(edges.size()));
  }
  return Graph(n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

ColoringFile parse_coloring(std::string_view text) {
  const auto lines = content_lines(text, true);
  if (lines.empty()) throw ParseError(0, "missing 's' header");
  const Line& header = lines.front();
  if (header.tokens[0] != "s") throw ParseError(header.number, "expected 's <colors> <palettes>' header");
  expect_arity(header, 3);
  ColoringFile file;
  file.colors_used = number_at(header, 1, "color count");
  file.distinct_palettes = number_at(header, 2, "palette count");

  std::vector<std::optional<Color>> seen;
  std::size_t last_line = header.number;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    last_line = line.number;
    if (line.tokens[0] != "c") {
      throw ParseError(line.number, "unexpected record '" + std::string(line.tokens[0]) + "'");
    }
    expect_arity(line, 3);
    const std::size_t index = number_at(line, 1, "edge index");
    const std::size_t color = number_at(line, 2, "color");
    if (index < 1) throw ParseError(line.number, "edge index must be >= 1");
    if (color < 1) throw ParseError(line.number, "color must be positive");
    if (index > seen.size()) seen.resize(index);
    if (seen[index - 1]) throw ParseError(line.number, "edge " + std::to_string(index) + " colored twice");
    seen[index - 1] = static_cast<Color>(color);
  }
  std::vector<Color> colors;
  colors.reserve(seen.size());
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) throw ParseError(last_line, "edge " + std::to_string(i + 1) + " has no color");
    colors.push_back(*seen[i]);
  }
  file.coloring = EdgeColoring(std::move(colors));
  return file;
}

std::string serialize_coloring(const Graph& g, const EdgeColoring& c) {
  const std::size_t palettes = count_palettes(g, c);
  std::ostringstream out;
  out << "s " << c.colors_used() << ' ' << palettes << '\n';
  for (EdgeId e = 0; e < c.size(); ++e) out << "c " << e + 1 << ' ' << c[e] << '\n';
  return out.str();
}

}  // namespace palette
