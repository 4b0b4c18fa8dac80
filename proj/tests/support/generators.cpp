#include "generators.hpp"

namespace testgen {

using zforce::FamilySpec;
using zforce::Graph;

namespace {

std::vector<FamilySpec> families(int max_order) {
  std::vector<FamilySpec> out;
  for (int n = 1; n <= max_order; ++n) out.push_back(FamilySpec::path(n));
  for (int n = 3; n <= max_order; ++n) out.push_back(FamilySpec::cycle(n));
  for (int n = 1; n <= max_order; ++n) out.push_back(FamilySpec::complete(n));
  for (int a = 1; a < max_order; ++a)
    for (int b = 1; b <= a && a + b <= max_order; ++b)
      out.push_back(FamilySpec::complete_bipartite(a, b));
  for (int n = 4; n <= max_order; ++n) out.push_back(FamilySpec::wheel(n));
  if (max_order >= 10) out.push_back(FamilySpec::petersen());
  for (int arity = 2; arity <= 4; ++arity)
    for (int depth = 1; FamilySpec::mary_tree(arity, depth).order() <= max_order; ++depth)
      out.push_back(FamilySpec::mary_tree(arity, depth));
  for (int n = 1; n <= std::min(max_order, 4); ++n) out.push_back(FamilySpec::empty(n));
  return out;
}

}  // namespace

std::vector<NamedGraph> family_suite(int max_order) {
  std::vector<NamedGraph> out;
  for (const auto& f : families(max_order)) out.push_back({f.to_string(), build_family(f)});
  return out;
}

std::vector<NamedGraph> product_suite(int max_order) {
  const std::vector<FamilySpec> factors{
      FamilySpec::path(1),  FamilySpec::path(2),     FamilySpec::path(3),
      FamilySpec::path(4),  FamilySpec::cycle(3),    FamilySpec::cycle(4),
      FamilySpec::complete(4), FamilySpec::complete_bipartite(2, 1), FamilySpec::empty(2),
      FamilySpec::empty(3)};
  std::vector<NamedGraph> out;
  for (auto op : {zforce::ProductOp::kCartesian, zforce::ProductOp::kStrong,
                  zforce::ProductOp::kLexicographic, zforce::ProductOp::kCorona})
    for (const auto& g : factors)
      for (const auto& h : factors) {
        const int order = op == zforce::ProductOp::kCorona ? g.order() * (h.order() + 1)
                                                           : g.order() * h.order();
        if (order > max_order) continue;
        out.push_back({g.to_string() + " " + std::string(to_string(op)) + " " + h.to_string(),
                       apply_product(op, build_family(g), build_family(h))});
      }
  return out;
}

std::vector<NamedGraph> full_suite(int max_order, int random_count, std::uint64_t seed) {
  auto out = family_suite(max_order);
  for (auto& p : product_suite(max_order)) out.push_back(std::move(p));
  Rng rng(seed);
  std::uniform_int_distribution<int> order(1, max_order);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int i = 0; i < random_count; ++i)
    out.push_back({"random#" + std::to_string(i), random_graph(rng, order(rng), density(rng))});
  return out;
}

Graph random_graph(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<zforce::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

zforce::VertexSet random_subset(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  zforce::VertexSet s;
  for (int v = 0; v < n; ++v)
    if (coin(rng)) s.insert(v);
  return s;
}

naive::EdgeList edge_list(const Graph& g) { return g.edges(); }

naive::Graph to_naive(const Graph& g) { return naive::make(g.order(), g.edges()); }

naive::Mask to_mask(const zforce::VertexSet& s) {
  naive::Mask m = 0;
  s.for_each([&](int v) { m |= naive::Mask{1} << v; });
  return m;
}

zforce::VertexSet from_mask(naive::Mask m) {
  zforce::VertexSet s;
  for (int v = 0; v < 32; ++v)
    if ((m >> v) & 1u) s.insert(v);
  return s;
}

}  // namespace testgen
