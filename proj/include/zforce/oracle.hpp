#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "zforce/graph.hpp"

namespace zforce {

enum class Target { kZ, kF };
enum class Route { kExhaustive, kStructural };

std::string_view to_string(Target t);
std::string_view to_string(Route r);

/**
 * A claimed value of Z(G) or F(G) together with the set that attains it and
 * how the claim was established.
 *
 * For route=exhaustive the value was confirmed by checking every set of the
 * neighbouring size. For route=structural the upper side comes from
 * thm27_upper_bound and `basis` says which leg was used.
 */
struct Certificate {
  Target target = Target::kF;
  int value = 0;
  VertexSet witness;
  Route route = Route::kExhaustive;
  std::string basis;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Flat "key: value" block, fields in a fixed order.
std::string format_certificate(const Certificate& c);
Certificate parse_certificate(std::string_view text);

struct SearchOptions {
  /// Largest order the exhaustive search accepts.
  int cap = 22;
  /// Threads per subset size; results do not depend on this.
  int workers = 1;
};

inline constexpr int kDefaultExhaustiveCap = 22;
/// Hard ceiling for SearchOptions::cap (2^32 subsets).
inline constexpr int kMaxExhaustiveCap = 32;

/// Smallest zero forcing set, lexicographically least among that size.
/// Throws CapacityError (required() = order) above options.cap.
Certificate zero_forcing_number(const Graph& g, const SearchOptions& options = {});

/// Largest failed set, searching sizes n-1, n-2, ...; lexicographically
/// least among that size. Throws CapacityError above options.cap.
Certificate failed_zero_forcing_number(const Graph& g,
                                       const SearchOptions& options = {});

enum class BoundBasis {
  kIsolatedVertex,   // F <= n-1, attained
  kModuleOfOrderTwo, // connected, F = n-2
  kNoModule,         // connected, no isolated vertex, no order-2 module: F <= n-3
  kDisconnected,     // no isolated vertex but disconnected: only F <= n-2
};

std::string_view to_string(BoundBasis b);

struct UpperBound {
  int bound = 0;
  BoundBasis basis = BoundBasis::kNoModule;
  /// The module that justified kModuleOfOrderTwo (lowest pair).
  std::optional<Edge> module;
  /// The isolated vertex that justified kIsolatedVertex (lowest).
  std::optional<int> isolated;

  std::string describe() const;
};

/// Upper bound on F(g) from the isolated-vertex / order-2-module
/// characterisation of the two largest possible values.
UpperBound thm27_upper_bound(const Graph& g);

enum class SharpnessStatus {
  kExact,           // construction failed and meets the structural bound
  kNotFailed,       // construction forces; nothing established
  kLowerBoundOnly,  // construction failed but smaller than the bound
};

std::string_view to_string(SharpnessStatus s);

struct SharpnessResult {
  SharpnessStatus status = SharpnessStatus::kNotFailed;
  int construction_size = 0;
  UpperBound bound;
  /// Present only for kExact: a structural certificate for F(g).
  std::optional<Certificate> certificate;
};

/// Pins F(g) without search when `construction` is failed and as large as
/// the structural upper bound.
SharpnessResult verify_sharpness(const Graph& g, const VertexSet& construction);

/// Re-checks a certificate against the forcing predicates. For exhaustive
/// certificates this includes the neighbouring-size sweep (so it is as
/// expensive as the search); for structural ones the bound is recomputed.
bool check_certificate(const Graph& g, const Certificate& c,
                       const SearchOptions& options = {});

// Combination ranking, lexicographic order. Exposed for tests.
std::uint64_t binomial(int n, int k);
/// The rank-th k-subset of {0..n-1} in lexicographic order.
VertexSet unrank_combination(int n, int k, std::uint64_t rank);

}  // namespace zforce
