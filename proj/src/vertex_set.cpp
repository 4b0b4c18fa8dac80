#include "zforce/vertex_set.hpp"

#include <charconv>

#include "zforce/errors.hpp"

namespace zforce {

bool lex_less(const VertexSet& a, const VertexSet& b) {
  int x = a.first();
  int y = b.first();
  while (x >= 0 && y >= 0) {
    if (x != y) return x < y;
    x = a.next(x);
    y = b.next(y);
  }
  return x < 0 && y >= 0;
}

std::string format_set(const VertexSet& s) {
  std::string out;
  s.for_each([&](int v) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  });
  return out;
}

namespace {

int parse_index(std::string_view token, std::string_view whole) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("bad vertex index '" + std::string(token) + "' in set '" +
                     std::string(whole) + "'");
  if (value < 0 || value >= kMaxOrder)
    throw ParseError("vertex index " + std::to_string(value) + " out of range");
  return value;
}

}  // namespace

VertexSet parse_set(std::string_view text) {
  VertexSet s;
  if (text.empty() || text == "{}") return s;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    std::size_t dash = item.find('-');
    if (dash == std::string_view::npos) {
      s.insert(parse_index(item, text));
    } else {
      int lo = parse_index(item.substr(0, dash), text);
      int hi = parse_index(item.substr(dash + 1), text);
      if (lo > hi)
        throw ParseError("descending range '" + std::string(item) + "'");
      for (int v = lo; v <= hi; ++v) s.insert(v);
    }
    pos = comma + 1;
  }
  return s;
}

}  // namespace zforce
