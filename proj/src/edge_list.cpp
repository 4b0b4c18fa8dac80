#include <algorithm>
#include <charconv>
#include <sstream>

#include "zforce/errors.hpp"
#include "zforce/graph.hpp"

namespace zforce {

namespace {

struct Line {
  int number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = trim(text.substr(pos, end - pos));
    if (!line.empty() && line.front() != '#') out.push_back({number, line});
    pos = end + 1;
  }
  return out;
}

/// Exactly two non-negative integers separated by whitespace.
std::pair<long long, long long> read_pair(const Line& line, const char* what) {
  long long values[2];
  std::string_view rest = line.text;
  for (auto& value : values) {
    rest = trim(rest);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc{} || ptr == rest.data() || value < 0)
      throw ParseError(std::string("malformed ") + what + ": '" +
                           std::string(line.text) + "'",
                       line.number);
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    if (!rest.empty() && rest.front() != ' ' && rest.front() != '\t')
      throw ParseError(std::string("malformed ") + what + ": '" +
                           std::string(line.text) + "'",
                       line.number);
  }
  if (!trim(rest).empty())
    throw ParseError(std::string("trailing text in ") + what + ": '" +
                         std::string(line.text) + "'",
                     line.number);
  return {values[0], values[1]};
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("missing header line \"n m\"", 1);

  auto [order, edge_count] = read_pair(lines[0], "header");
  if (order < 1) throw ParseError("graph order must be at least 1", lines[0].number);
  if (order > kMaxOrder)
    throw CapacityError("graph order " + std::to_string(order) +
                            " exceeds capacity " + std::to_string(kMaxOrder),
                        static_cast<int>(std::min<long long>(order, 1 << 30)));
  const int n = static_cast<int>(order);
  if (edge_count > static_cast<long long>(n) * (n - 1) / 2)
    throw ParseError("edge count exceeds n(n-1)/2", lines[0].number);
  if (static_cast<std::size_t>(edge_count) + 1 > lines.size())
    throw ParseError("expected " + std::to_string(edge_count) + " edge lines, found " +
                         std::to_string(lines.size() - 1),
                     lines.back().number);

  std::vector<Edge> edges;
  std::vector<VertexSet> seen(static_cast<std::size_t>(n));
  for (long long i = 1; i <= edge_count; ++i) {
    const Line& line = lines[static_cast<std::size_t>(i)];
    if (line.text.front() == 'L')
      throw ParseError("label line before all edges were read", line.number);
    auto [u, v] = read_pair(line, "edge");
    if (u >= n || v >= n)
      throw ParseError("vertex index " + std::to_string(std::max(u, v)) +
                           " >= n = " + std::to_string(n),
                       line.number);
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u), line.number);
    if (seen[u].contains(static_cast<int>(v)))
      throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v),
                       line.number);
    seen[u].insert(static_cast<int>(v));
    seen[v].insert(static_cast<int>(u));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }

  std::vector<std::string> labels;
  for (std::size_t i = static_cast<std::size_t>(edge_count) + 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.text.size() < 2 || line.text[0] != 'L' ||
        (line.text[1] != ' ' && line.text[1] != '\t'))
      throw ParseError("unexpected line after edges: '" + std::string(line.text) + "'",
                       line.number);
    std::string_view rest = trim(line.text.substr(1));
    int index = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), index);
    if (ec != std::errc{} || index < 0 || index >= n)
      throw ParseError("bad label index in '" + std::string(line.text) + "'", line.number);
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    if (labels.empty()) labels.resize(static_cast<std::size_t>(n));
    labels[static_cast<std::size_t>(index)] = std::string(trim(rest));
  }
  return Graph(n, edges, std::move(labels));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  if (g.has_labels())
    for (int v = 0; v < g.order(); ++v)
      if (!g.label(v).empty()) out << "L " << v << ' ' << g.label(v) << '\n';
  std::string text = out.str();
  text.pop_back();
  return text;
}

}  // namespace zforce
