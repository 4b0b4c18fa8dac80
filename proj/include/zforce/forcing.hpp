#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zforce/graph.hpp"

namespace zforce {

struct Force {
  int forcer;
  int forced;
  friend bool operator==(const Force&, const Force&) = default;
};

/// Forces in the order they were applied.
using ForceChain = std::vector<Force>;

struct DerivedColoring {
  VertexSet final_blue;
  ForceChain chain;
};

/// Lowest-indexed blue vertex with exactly one white neighbour, paired with
/// that neighbour. Empty when no force is available.
std::optional<Force> apply_rule_once(const Graph& g, const VertexSet& blue);

/// Fixed point of the standard color-change rule, always forcing with the
/// lowest-indexed eligible vertex. The final set does not depend on that
/// choice; the chain does.
DerivedColoring derived_coloring(const Graph& g, const VertexSet& initial);

/// derived_coloring without recording the chain. Hot path of the oracle.
VertexSet closure(const Graph& g, const VertexSet& initial);

bool is_zero_forcing_set(const Graph& g, const VertexSet& s);
bool is_failed(const Graph& g, const VertexSet& s);
/// Proper subset of V(g) from which no force is possible.
bool is_stalled(const Graph& g, const VertexSet& s);
/// Failed, and every single-vertex extension is zero forcing.
bool is_maximal_failed(const Graph& g, const VertexSet& s);

/// First vertex v outside s for which s ∪ {v} is still failed, if any.
/// This is the counterexample behind a negative is_maximal_failed verdict.
std::optional<int> non_forcing_extension(const Graph& g, const VertexSet& s);

/// Replays `chain` from `initial`. Returns the final set, or nothing if some
/// step is not a legal force (forcer white, or forced not the unique white
/// neighbour at that point).
std::optional<VertexSet> replay(const Graph& g, const VertexSet& initial,
                                const ForceChain& chain);

/// "u -> v" per line.
std::string format_chain(const ForceChain& chain);

}  // namespace zforce
