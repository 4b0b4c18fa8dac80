#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace zforce {

/// Largest graph order the library represents. Two 64-bit words per set.
inline constexpr int kMaxOrder = 128;

/**
 * Fixed-width subset of {0, ..., kMaxOrder-1}.
 *
 * Used for adjacency rows, blue sets, witnesses and construction outputs.
 * The set does not know the order of the graph it refers to; callers that
 * need the "only bits < order" invariant check it against a Graph.
 */
class VertexSet {
 public:
  static constexpr int kWords = kMaxOrder / 64;

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  /// {0, ..., order-1}.
  static VertexSet universe(int order) {
    VertexSet s;
    for (int w = 0; w < kWords; ++w) {
      const int lo = w * 64;
      if (order >= lo + 64)
        s.words_[w] = ~std::uint64_t{0};
      else if (order > lo)
        s.words_[w] = (std::uint64_t{1} << (order - lo)) - 1;
    }
    return s;
  }

  static VertexSet from_indices(const std::vector<int>& vertices) {
    VertexSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }

  bool contains(int v) const {
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }
  void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Lowest member, or -1 when empty.
  int first() const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
    return -1;
  }

  /// Lowest member strictly greater than v, or -1.
  int next(int v) const {
    ++v;
    if (v >= kMaxOrder) return -1;
    int w = v >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (word) return w * 64 + std::countr_zero(word);
      if (++w == kWords) return -1;
      word = words_[w];
    }
  }

  /// Highest member, or -1.
  int last() const {
    for (int w = kWords - 1; w >= 0; --w)
      if (words_[w]) return w * 64 + 63 - std::countl_zero(words_[w]);
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        f(w * 64 + std::countr_zero(word));
        word &= word - 1;
      }
    }
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  bool is_subset_of(const VertexSet& other) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  std::uint64_t word(int w) const { return words_[w]; }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

/// Lexicographic order on the sorted index sequences.
bool lex_less(const VertexSet& a, const VertexSet& b);

/// "0,2,4"; the empty set formats as the empty string.
std::string format_set(const VertexSet& s);

/// Parses "0,2,5-7". Accepts "" and "{}" for the empty set.
/// Throws ParseError on malformed input.
VertexSet parse_set(std::string_view text);

}  // namespace zforce
