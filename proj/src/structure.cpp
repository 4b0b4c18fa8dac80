#include "zforce/graph.hpp"

namespace zforce {

std::vector<Edge> modules_of_order_two(const Graph& g) {
  std::vector<Edge> out;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      VertexSet nu = g.neighbors(u);
      VertexSet nv = g.neighbors(v);
      nu.erase(v);
      nv.erase(u);
      if (nu == nv) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet isolated_vertices(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v)
    if (g.neighbors(v).empty()) out.insert(v);
  return out;
}

int connected_component_count(const Graph& g) {
  VertexSet unseen = g.vertices();
  int components = 0;
  while (!unseen.empty()) {
    ++components;
    VertexSet frontier;
    frontier.insert(unseen.first());
    while (!frontier.empty()) {
      unseen -= frontier;
      VertexSet next;
      frontier.for_each([&](int v) { next |= g.neighbors(v); });
      frontier = next & unseen;
    }
  }
  return components;
}

bool is_connected(const Graph& g) { return connected_component_count(g) == 1; }

bool is_complete(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != g.order() - 1) return false;
  return true;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  keep.for_each([&](int v) { index[v] = next++; });
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  std::vector<std::string> labels;
  if (g.has_labels()) keep.for_each([&](int v) { labels.push_back(g.label(v)); });
  return Graph(next, edges, std::move(labels));
}

}  // namespace zforce
