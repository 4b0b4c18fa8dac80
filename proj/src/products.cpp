#include <algorithm>

#include "zforce/errors.hpp"
#include "zforce/graph.hpp"

namespace zforce {

namespace {

void check_capacity(long long order, std::string_view what) {
  if (order > kMaxOrder)
    throw CapacityError(std::string(what) + " order " + std::to_string(order) +
                            " exceeds capacity " + std::to_string(kMaxOrder),
                        static_cast<int>(std::min<long long>(order, 1 << 30)));
}

std::vector<std::string> pair_labels(int n, int m) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n * m));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < m; ++v)
      labels.push_back("v_{" + std::to_string(u) + "," + std::to_string(v) + "}");
  return labels;
}

enum class PairRule { kCartesian, kStrong, kLexicographic };

Graph pair_product(const Graph& g, const Graph& h, PairRule rule,
                   std::string_view name) {
  const int n = g.order();
  const int m = h.order();
  check_capacity(static_cast<long long>(n) * m, name);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < m; ++v) {
      const int a = product_index(u, v, m);
      for (int u2 = u; u2 < n; ++u2) {
        for (int v2 = 0; v2 < m; ++v2) {
          const int b = product_index(u2, v2, m);
          if (b <= a) continue;
          const bool same_u = u == u2;
          const bool same_v = v == v2;
          const bool g_edge = g.adjacent(u, u2);
          const bool h_edge = h.adjacent(v, v2);
          bool adjacent = false;
          switch (rule) {
            case PairRule::kCartesian:
              adjacent = (same_u && h_edge) || (same_v && g_edge);
              break;
            case PairRule::kStrong:
              adjacent = (same_u && h_edge) || (same_v && g_edge) ||
                         (g_edge && h_edge);
              break;
            case PairRule::kLexicographic:
              adjacent = g_edge || (same_u && h_edge);
              break;
          }
          if (adjacent) edges.emplace_back(a, b);
        }
      }
    }
  }
  return Graph(n * m, edges, pair_labels(n, m));
}

}  // namespace

std::string_view to_string(ProductOp op) {
  switch (op) {
    case ProductOp::kCartesian: return "box";
    case ProductOp::kStrong: return "strong";
    case ProductOp::kLexicographic: return "lex";
    case ProductOp::kCorona: return "corona";
  }
  return "?";
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  return pair_product(g, h, PairRule::kCartesian, "cartesian product");
}

Graph strong_product(const Graph& g, const Graph& h) {
  return pair_product(g, h, PairRule::kStrong, "strong product");
}

Graph lexicographic_product(const Graph& g, const Graph& h) {
  return pair_product(g, h, PairRule::kLexicographic, "lexicographic product");
}

Graph corona(const Graph& g, const Graph& h) {
  const int m = g.order();
  const int n = h.order();
  check_capacity(static_cast<long long>(m) * (n + 1), "corona");
  std::vector<Edge> edges = g.edges();
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) labels.push_back("g_{" + std::to_string(i) + "}");
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < n; ++k) {
      labels.push_back("h_{" + std::to_string(i) + "," + std::to_string(k) + "}");
      edges.emplace_back(i, corona_copy_index(i, k, m, n));
    }
    for (auto [a, b] : h.edges())
      edges.emplace_back(corona_copy_index(i, a, m, n),
                         corona_copy_index(i, b, m, n));
  }
  return Graph(m * (n + 1), edges, std::move(labels));
}

Graph apply_product(ProductOp op, const Graph& g, const Graph& h) {
  switch (op) {
    case ProductOp::kCartesian: return cartesian_product(g, h);
    case ProductOp::kStrong: return strong_product(g, h);
    case ProductOp::kLexicographic: return lexicographic_product(g, h);
    case ProductOp::kCorona: return corona(g, h);
  }
  throw ParameterError("unknown product");
}

long long expression_order(const GraphExpr& expr) {
  if (const auto* family = std::get_if<FamilySpec>(&expr)) {
    family->validate();
    return family->order();
  }
  const auto& product = *std::get<std::shared_ptr<const ProductSpec>>(expr);
  const long long left = expression_order(product.left);
  const long long right = expression_order(product.right);
  if (product.op == ProductOp::kCorona) return left * (right + 1);
  return left * right;
}

Graph build_expression(const GraphExpr& expr) {
  if (const auto* family = std::get_if<FamilySpec>(&expr))
    return build_family(*family);
  const auto& product = *std::get<std::shared_ptr<const ProductSpec>>(expr);
  const long long order = expression_order(expr);
  check_capacity(order, to_string(expr));
  return apply_product(product.op, build_expression(product.left),
                       build_expression(product.right));
}

std::string to_string(const GraphExpr& expr) {
  if (const auto* family = std::get_if<FamilySpec>(&expr))
    return family->to_string();
  const auto& product = *std::get<std::shared_ptr<const ProductSpec>>(expr);
  return "(" + to_string(product.left) + " " + std::string(to_string(product.op)) +
         " " + to_string(product.right) + ")";
}

}  // namespace zforce
