#include "zforce/oracle.hpp"

#include <array>
#include <atomic>
#include <charconv>
#include <limits>
#include <thread>
#include <vector>

#include "zforce/errors.hpp"
#include "zforce/forcing.hpp"

namespace zforce {

std::string_view to_string(Target t) { return t == Target::kZ ? "Z" : "F"; }

std::string_view to_string(Route r) {
  return r == Route::kExhaustive ? "exhaustive" : "structural";
}

std::string_view to_string(BoundBasis b) {
  switch (b) {
    case BoundBasis::kIsolatedVertex: return "isolated-vertex";
    case BoundBasis::kModuleOfOrderTwo: return "module-of-order-2";
    case BoundBasis::kNoModule: return "no-module";
    case BoundBasis::kDisconnected: return "disconnected";
  }
  return "?";
}

std::string_view to_string(SharpnessStatus s) {
  switch (s) {
    case SharpnessStatus::kExact: return "exact";
    case SharpnessStatus::kNotFailed: return "not-failed";
    case SharpnessStatus::kLowerBoundOnly: return "lower-bound-only";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Combinations

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * static_cast<std::uint64_t>(n - k + i) / i;
  return result;
}

namespace {

using Indices = std::array<int, kMaxOrder>;

// Fills idx[0..k) with the rank-th combination in lexicographic order.
void unrank_into(int n, int k, std::uint64_t rank, Indices& idx) {
  int next = 0;
  for (int pos = 0; pos < k; ++pos) {
    for (int v = next;; ++v) {
      const std::uint64_t below = binomial(n - v - 1, k - pos - 1);
      if (rank < below) {
        idx[pos] = v;
        next = v + 1;
        break;
      }
      rank -= below;
    }
  }
}

bool advance(int n, int k, Indices& idx) {
  int i = k - 1;
  while (i >= 0 && idx[i] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

VertexSet to_set(int k, const Indices& idx) {
  VertexSet s;
  for (int i = 0; i < k; ++i) s.insert(idx[i]);
  return s;
}

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

// Lowest rank in [begin, end) whose combination satisfies `accept`, or kNone.
// Gives up early once `best` shows an earlier range already succeeded.
template <typename Accept>
std::uint64_t scan_range(int n, int k, std::uint64_t begin, std::uint64_t end,
                         const Accept& accept, const std::atomic<std::uint64_t>& best) {
  Indices idx{};
  unrank_into(n, k, begin, idx);
  for (std::uint64_t rank = begin; rank < end; ++rank) {
    if ((rank & 1023) == 0 && best.load(std::memory_order_relaxed) < begin) return kNone;
    if (accept(to_set(k, idx))) return rank;
    if (!advance(n, k, idx)) break;
  }
  return kNone;
}

/// Lexicographically least k-subset accepted by `accept`. The rank space is
/// cut into one contiguous slice per worker and the smallest hit wins, so
/// the answer is the same for every worker count.
template <typename Accept>
std::optional<VertexSet> first_subset(int n, int k, const Accept& accept, int workers) {
  const std::uint64_t total = binomial(n, k);
  if (total == 0) return std::nullopt;
  std::atomic<std::uint64_t> best{kNone};
  const std::uint64_t slices =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(workers, 1)), total);

  auto run_slice = [&](std::uint64_t s) {
    const std::uint64_t begin = total * s / slices;
    const std::uint64_t end = total * (s + 1) / slices;
    const std::uint64_t hit = scan_range(n, k, begin, end, accept, best);
    if (hit == kNone) return;
    std::uint64_t current = best.load();
    while (hit < current && !best.compare_exchange_weak(current, hit)) {
    }
  };

  if (slices == 1) {
    run_slice(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(slices);
    for (std::uint64_t s = 0; s < slices; ++s) threads.emplace_back(run_slice, s);
  }
  if (best.load() == kNone) return std::nullopt;
  Indices idx{};
  unrank_into(n, k, best.load(), idx);
  return to_set(k, idx);
}

void check_cap(const Graph& g, const SearchOptions& options) {
  if (options.cap > kMaxExhaustiveCap)
    throw ParameterError("exhaustive cap " + std::to_string(options.cap) +
                         " exceeds the supported maximum " +
                         std::to_string(kMaxExhaustiveCap));
  if (g.order() > options.cap)
    throw CapacityError("exhaustive search on " + std::to_string(g.order()) +
                            " vertices exceeds cap " + std::to_string(options.cap) +
                            " (rerun with --cap " + std::to_string(g.order()) + ")",
                        g.order());
}

}  // namespace

VertexSet unrank_combination(int n, int k, std::uint64_t rank) {
  Indices idx{};
  unrank_into(n, k, rank, idx);
  return to_set(k, idx);
}

// ---------------------------------------------------------------------------
// Exhaustive search

Certificate zero_forcing_number(const Graph& g, const SearchOptions& options) {
  check_cap(g, options);
  const int n = g.order();
  auto forces = [&g](const VertexSet& s) { return is_zero_forcing_set(g, s); };
  for (int k = 0; k <= n; ++k) {
    if (auto witness = first_subset(n, k, forces, options.workers)) {
      Certificate c;
      c.target = Target::kZ;
      c.value = k;
      c.witness = *witness;
      c.route = Route::kExhaustive;
      c.basis = k == 0 ? "empty set forces"
                       : "no set of size " + std::to_string(k - 1) + " forces";
      return c;
    }
  }
  // V(g) always forces.
  throw std::logic_error("zero forcing search exhausted all sizes");
}

Certificate failed_zero_forcing_number(const Graph& g, const SearchOptions& options) {
  check_cap(g, options);
  const int n = g.order();
  auto fails = [&g](const VertexSet& s) { return is_failed(g, s); };
  for (int k = n - 1; k >= 0; --k) {
    if (auto witness = first_subset(n, k, fails, options.workers)) {
      Certificate c;
      c.target = Target::kF;
      c.value = k;
      c.witness = *witness;
      c.route = Route::kExhaustive;
      c.basis = k == n - 1 ? "n-1 is the largest proper size"
                           : "every set of size " + std::to_string(k + 1) + " forces";
      return c;
    }
  }
  // The empty set never forces a graph with at least one vertex.
  throw std::logic_error("failed set search exhausted all sizes");
}

// ---------------------------------------------------------------------------
// Structural bound

std::string UpperBound::describe() const {
  std::string out = std::string(to_string(basis));
  if (module)
    out += " {" + std::to_string(module->first) + "," + std::to_string(module->second) + "}";
  if (isolated) out += " vertex " + std::to_string(*isolated);
  switch (basis) {
    case BoundBasis::kIsolatedVertex:
      out += ": F = n-1";
      break;
    case BoundBasis::kModuleOfOrderTwo:
      out += ": connected, F = n-2";
      break;
    case BoundBasis::kNoModule:
      out += ": connected, no isolated vertex, no order-2 module, F <= n-3";
      break;
    case BoundBasis::kDisconnected:
      out += ": no isolated vertex, F <= n-2 (disconnected, no sharper bound)";
      break;
  }
  return out;
}

UpperBound thm27_upper_bound(const Graph& g) {
  const int n = g.order();
  UpperBound ub;
  const VertexSet isolated = isolated_vertices(g);
  if (!isolated.empty()) {
    ub.bound = n - 1;
    ub.basis = BoundBasis::kIsolatedVertex;
    ub.isolated = isolated.first();
    return ub;
  }
  if (!is_connected(g)) {
    ub.bound = n - 2;
    ub.basis = BoundBasis::kDisconnected;
    return ub;
  }
  const auto modules = modules_of_order_two(g);
  if (!modules.empty()) {
    ub.bound = n - 2;
    ub.basis = BoundBasis::kModuleOfOrderTwo;
    ub.module = modules.front();
    return ub;
  }
  ub.bound = n - 3;
  ub.basis = BoundBasis::kNoModule;
  return ub;
}

SharpnessResult verify_sharpness(const Graph& g, const VertexSet& construction) {
  SharpnessResult result;
  result.bound = thm27_upper_bound(g);
  result.construction_size = construction.size();
  if (!construction.is_subset_of(g.vertices()) || !is_failed(g, construction)) {
    result.status = SharpnessStatus::kNotFailed;
    return result;
  }
  if (result.construction_size < result.bound.bound) {
    result.status = SharpnessStatus::kLowerBoundOnly;
    return result;
  }
  // A failed set larger than the bound would contradict the bound itself.
  if (result.construction_size > result.bound.bound)
    throw std::logic_error("failed set exceeds structural upper bound");
  result.status = SharpnessStatus::kExact;
  Certificate c;
  c.target = Target::kF;
  c.value = result.construction_size;
  c.witness = construction;
  c.route = Route::kStructural;
  c.basis = "failed construction meets bound: " + result.bound.describe();
  result.certificate = c;
  return result;
}

bool check_certificate(const Graph& g, const Certificate& c, const SearchOptions& options) {
  if (!c.witness.is_subset_of(g.vertices()) || c.witness.size() != c.value) return false;
  const int n = g.order();
  if (c.target == Target::kZ) {
    if (c.route != Route::kExhaustive) return false;
    if (!is_zero_forcing_set(g, c.witness)) return false;
    if (c.value == 0) return true;
    check_cap(g, options);
    auto forces = [&g](const VertexSet& s) { return is_zero_forcing_set(g, s); };
    return !first_subset(n, c.value - 1, forces, options.workers).has_value();
  }
  if (!is_failed(g, c.witness)) return false;
  if (c.route == Route::kStructural) return thm27_upper_bound(g).bound == c.value;
  if (c.value >= n - 1) return true;
  check_cap(g, options);
  auto fails = [&g](const VertexSet& s) { return is_failed(g, s); };
  return !first_subset(n, c.value + 1, fails, options.workers).has_value();
}

// ---------------------------------------------------------------------------
// Text block

std::string format_certificate(const Certificate& c) {
  std::string out;
  out += "target: " + std::string(to_string(c.target)) + "\n";
  out += "value: " + std::to_string(c.value) + "\n";
  out += "witness: " + format_set(c.witness) + "\n";
  out += "route: " + std::string(to_string(c.route)) + "\n";
  out += "basis: " + c.basis + "\n";
  return out;
}

Certificate parse_certificate(std::string_view text) {
  Certificate c;
  bool have[4] = {false, false, false, false};
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("certificate line without ':'", line_no);
    const std::string_view key = line.substr(0, colon);
    std::string_view value = line.substr(colon + 1);
    if (!value.empty() && value.front() == ' ') value.remove_prefix(1);
    if (key == "target") {
      if (value == "Z") c.target = Target::kZ;
      else if (value == "F") c.target = Target::kF;
      else throw ParseError("unknown target '" + std::string(value) + "'", line_no);
      have[0] = true;
    } else if (key == "value") {
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), c.value);
      if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ParseError("bad value '" + std::string(value) + "'", line_no);
      have[1] = true;
    } else if (key == "witness") {
      c.witness = parse_set(value);
      have[2] = true;
    } else if (key == "route") {
      if (value == "exhaustive") c.route = Route::kExhaustive;
      else if (value == "structural") c.route = Route::kStructural;
      else throw ParseError("unknown route '" + std::string(value) + "'", line_no);
      have[3] = true;
    } else if (key == "basis") {
      c.basis = std::string(value);
    } else {
      throw ParseError("unknown certificate field '" + std::string(key) + "'", line_no);
    }
  }
  for (bool h : have)
    if (!h) throw ParseError("certificate missing a required field");
  return c;
}

}  // namespace zforce
