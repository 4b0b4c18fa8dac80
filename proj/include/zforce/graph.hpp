#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <memory>
#include <vector>

#include "zforce/vertex_set.hpp"

namespace zforce {

using Edge = std::pair<int, int>;

/**
 * Immutable simple undirected graph on vertices 0..order-1.
 *
 * Adjacency is one VertexSet row per vertex. The constructor validates the
 * edge list, so a Graph value is always symmetric and loop free.
 */
class Graph {
 public:
  /// Throws ParameterError on loops, out-of-range or duplicate edges and
  /// CapacityError when order > kMaxOrder.
  Graph(int order, const std::vector<Edge>& edges,
        std::vector<std::string> labels = {});

  int order() const { return order_; }
  int edge_count() const { return edge_count_; }

  const VertexSet& neighbors(int v) const { return rows_[v]; }
  bool adjacent(int u, int v) const { return rows_[u].contains(v); }
  int degree(int v) const { return rows_[v].size(); }
  VertexSet vertices() const { return VertexSet::universe(order_); }

  /// All edges (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  /// Empty string when the graph carries no labels.
  const std::string& label(int v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  Graph with_labels(std::vector<std::string> labels) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.rows_ == b.rows_ && a.labels_ == b.labels_;
  }

 private:
  int order_;
  int edge_count_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// Families

enum class FamilyKind {
  kPath,
  kCycle,
  kComplete,
  kCompleteBipartite,
  kWheel,
  kPetersen,
  kMaryTree,
  kEmpty,
};

/// Declarative family descriptor. `a` and `b` hold the parameters in the
/// order listed for each kind (path n, complete_bipartite m n,
/// mary_tree arity depth, ...). Unused parameters are zero.
struct FamilySpec {
  FamilyKind kind;
  int a = 0;
  int b = 0;

  static FamilySpec path(int n) { return {FamilyKind::kPath, n}; }
  static FamilySpec cycle(int n) { return {FamilyKind::kCycle, n}; }
  static FamilySpec complete(int n) { return {FamilyKind::kComplete, n}; }
  static FamilySpec complete_bipartite(int m, int n) {
    return {FamilyKind::kCompleteBipartite, m, n};
  }
  /// n counts every vertex: hub plus a rim cycle on n-1 vertices.
  static FamilySpec wheel(int n) { return {FamilyKind::kWheel, n}; }
  static FamilySpec petersen() { return {FamilyKind::kPetersen}; }
  static FamilySpec mary_tree(int arity, int depth) {
    return {FamilyKind::kMaryTree, arity, depth};
  }
  static FamilySpec empty(int n) { return {FamilyKind::kEmpty, n}; }

  /// Throws ParameterError naming the violated constraint.
  void validate() const;
  /// Order of the generated graph (validate() first).
  int order() const;
  std::string to_string() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/**
 * Canonical graph for a family. Vertex orderings:
 *  - path, cycle: traversal order
 *  - wheel: rim 0..n-2 in cycle order, hub n-1
 *  - petersen: outer 5-cycle 0..4, inner pentagram 5..9 (i ~ i+5)
 *  - complete bipartite: part A (m vertices) then part B (n vertices)
 *  - m-ary tree: complete tree, breadth-first
 */
Graph build_family(const FamilySpec& spec);

// ---------------------------------------------------------------------------
// Products

enum class ProductOp { kCartesian, kStrong, kLexicographic, kCorona };

std::string_view to_string(ProductOp op);

/// Product vertex (u, v) has index u*|h| + v, labelled "v_{u,v}".
Graph cartesian_product(const Graph& g, const Graph& h);
Graph strong_product(const Graph& g, const Graph& h);
Graph lexicographic_product(const Graph& g, const Graph& h);

/// Vertices 0..|g|-1 are g; copy i of h occupies |g| + i*|h| ... and every
/// vertex of that copy is joined to vertex i of g.
Graph corona(const Graph& g, const Graph& h);

Graph apply_product(ProductOp op, const Graph& g, const Graph& h);

/// Index of (u, v) in a Cartesian/strong/lexicographic product.
inline int product_index(int u, int v, int h_order) { return u * h_order + v; }
/// Index of vertex k in the i-th copy of h inside g∘h.
inline int corona_copy_index(int i, int k, int g_order, int h_order) {
  return g_order + i * h_order + k;
}

/// A family or a binary product of two nested expressions.
struct ProductSpec;
using GraphExpr = std::variant<FamilySpec, std::shared_ptr<const ProductSpec>>;

struct ProductSpec {
  ProductOp op;
  GraphExpr left;
  GraphExpr right;
};

/// Order of the expression without building it. Throws ParameterError for
/// invalid families.
long long expression_order(const GraphExpr& expr);
/// Builds the expression; CapacityError if the order exceeds kMaxOrder.
Graph build_expression(const GraphExpr& expr);
std::string to_string(const GraphExpr& expr);

// ---------------------------------------------------------------------------
// Structural detectors

/// Pairs {u,v}, u < v, with N(u)\{v} = N(v)\{u}, in lexicographic order.
std::vector<Edge> modules_of_order_two(const Graph& g);
VertexSet isolated_vertices(const Graph& g);
int connected_component_count(const Graph& g);
bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
/// Subgraph induced by `keep`, renumbered in increasing index order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

// ---------------------------------------------------------------------------
// Edge-list text format

/// "n m" header, m lines "u v", optional "L i text" label lines, '#'
/// comments. Throws ParseError (with line number) or CapacityError.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

}  // namespace zforce
