#include "zforce/errors.hpp"
#include "zforce/graph.hpp"

namespace zforce {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

long long tree_order(int arity, int depth) {
  long long total = 1;
  long long level = 1;
  for (int d = 0; d < depth; ++d) {
    level *= arity;
    total += level;
    if (total > 1'000'000) break;  // far beyond capacity; stop growing
  }
  return total;
}

}  // namespace

void FamilySpec::validate() const {
  switch (kind) {
    case FamilyKind::kPath:
      require(a >= 1, "path requires n >= 1");
      break;
    case FamilyKind::kCycle:
      require(a >= 3, "cycle requires n >= 3");
      break;
    case FamilyKind::kComplete:
      require(a >= 1, "complete requires n >= 1");
      break;
    case FamilyKind::kCompleteBipartite:
      require(a >= 1 && b >= 1, "complete_bipartite requires m, n >= 1");
      break;
    case FamilyKind::kWheel:
      require(a >= 4, "wheel requires n >= 4");
      break;
    case FamilyKind::kPetersen:
      break;
    case FamilyKind::kMaryTree:
      require(a >= 2, "mary_tree requires arity >= 2");
      require(b >= 1, "mary_tree requires depth >= 1");
      break;
    case FamilyKind::kEmpty:
      require(a >= 1, "empty requires n >= 1");
      break;
  }
}

int FamilySpec::order() const {
  switch (kind) {
    case FamilyKind::kCompleteBipartite:
      return a + b;
    case FamilyKind::kPetersen:
      return 10;
    case FamilyKind::kMaryTree: {
      long long n = tree_order(a, b);
      return n > kMaxOrder ? kMaxOrder + 1 : static_cast<int>(n);
    }
    default:
      return a;
  }
}

std::string FamilySpec::to_string() const {
  auto s = [](int x) { return std::to_string(x); };
  switch (kind) {
    case FamilyKind::kPath: return "path:" + s(a);
    case FamilyKind::kCycle: return "cycle:" + s(a);
    case FamilyKind::kComplete: return "complete:" + s(a);
    case FamilyKind::kCompleteBipartite:
      return "complete_bipartite:" + s(a) + ":" + s(b);
    case FamilyKind::kWheel: return "wheel:" + s(a);
    case FamilyKind::kPetersen: return "petersen";
    case FamilyKind::kMaryTree: return "mary_tree:" + s(a) + ":" + s(b);
    case FamilyKind::kEmpty: return "empty:" + s(a);
  }
  return "?";
}

Graph build_family(const FamilySpec& spec) {
  spec.validate();
  const int n = spec.order();
  if (n > kMaxOrder)
    throw CapacityError(spec.to_string() + " exceeds capacity " +
                            std::to_string(kMaxOrder),
                        n);
  std::vector<Edge> edges;
  switch (spec.kind) {
    case FamilyKind::kPath:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case FamilyKind::kCycle:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(0, n - 1);
      break;
    case FamilyKind::kComplete:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case FamilyKind::kCompleteBipartite:
      for (int u = 0; u < spec.a; ++u)
        for (int v = 0; v < spec.b; ++v) edges.emplace_back(u, spec.a + v);
      break;
    case FamilyKind::kWheel: {
      const int rim = n - 1;
      for (int i = 0; i < rim; ++i) {
        edges.emplace_back(i, (i + 1) % rim);
        edges.emplace_back(i, rim);
      }
      break;
    }
    case FamilyKind::kPetersen:
      for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
      }
      break;
    case FamilyKind::kMaryTree:
      // Breadth-first: children of v are arity*v + 1 .. arity*v + arity.
      for (int v = 1; v < n; ++v) edges.emplace_back((v - 1) / spec.a, v);
      break;
    case FamilyKind::kEmpty:
      break;
  }
  return Graph(n, edges);
}

}  // namespace zforce
