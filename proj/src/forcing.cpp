#include "zforce/forcing.hpp"

namespace zforce {

std::optional<Force> apply_rule_once(const Graph& g, const VertexSet& blue) {
  const VertexSet live = blue & g.vertices();
  for (int u = live.first(); u >= 0; u = live.next(u)) {
    const VertexSet white = g.neighbors(u) - blue;
    if (white.size() == 1) return Force{u, white.first()};
  }
  return std::nullopt;
}

namespace {

// Candidate forcers live in `dirty`. A vertex leaves it when found unable to
// force and re-enters only when one of its neighbours turns blue, so the
// lowest dirty vertex that can force is also the lowest blue vertex that
// can force. Forces therefore match repeated apply_rule_once.
template <typename OnForce>
VertexSet run_to_fixpoint(const Graph& g, const VertexSet& initial, OnForce&& on_force) {
  VertexSet blue = initial & g.vertices();
  VertexSet dirty = blue;
  int u = dirty.first();
  while (u >= 0) {
    const VertexSet white = g.neighbors(u) - blue;
    dirty.erase(u);
    if (white.size() == 1) {
      const int v = white.first();
      blue.insert(v);
      on_force(Force{u, v});
      dirty |= g.neighbors(v) & blue;
      dirty.insert(v);
      u = dirty.first();
    } else {
      u = dirty.next(u);
    }
  }
  return blue;
}

}  // namespace

DerivedColoring derived_coloring(const Graph& g, const VertexSet& initial) {
  DerivedColoring result;
  result.final_blue =
      run_to_fixpoint(g, initial, [&](Force f) { result.chain.push_back(f); });
  return result;
}

VertexSet closure(const Graph& g, const VertexSet& initial) {
  return run_to_fixpoint(g, initial, [](Force) {});
}

bool is_zero_forcing_set(const Graph& g, const VertexSet& s) {
  return closure(g, s) == g.vertices();
}

bool is_failed(const Graph& g, const VertexSet& s) { return !is_zero_forcing_set(g, s); }

bool is_stalled(const Graph& g, const VertexSet& s) {
  const VertexSet all = g.vertices();
  if (!s.is_subset_of(all) || s == all) return false;
  return !apply_rule_once(g, s).has_value();
}

std::optional<int> non_forcing_extension(const Graph& g, const VertexSet& s) {
  const VertexSet outside = g.vertices() - s;
  for (int v = outside.first(); v >= 0; v = outside.next(v)) {
    VertexSet bigger = s;
    bigger.insert(v);
    if (is_failed(g, bigger)) return v;
  }
  return std::nullopt;
}

bool is_maximal_failed(const Graph& g, const VertexSet& s) {
  return is_failed(g, s) && !non_forcing_extension(g, s).has_value();
}

std::optional<VertexSet> replay(const Graph& g, const VertexSet& initial,
                                const ForceChain& chain) {
  VertexSet blue = initial;
  for (const Force& f : chain) {
    if (f.forcer < 0 || f.forcer >= g.order() || !blue.contains(f.forcer))
      return std::nullopt;
    const VertexSet white = g.neighbors(f.forcer) - blue;
    if (white.size() != 1 || white.first() != f.forced) return std::nullopt;
    blue.insert(f.forced);
  }
  return blue;
}

std::string format_chain(const ForceChain& chain) {
  std::string out;
  for (const Force& f : chain) {
    out += std::to_string(f.forcer) + " -> " + std::to_string(f.forced) + "\n";
  }
  return out;
}

}  // namespace zforce
