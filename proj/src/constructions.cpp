#include "zforce/constructions.hpp"

#include "zforce/errors.hpp"
#include "zforce/forcing.hpp"
#include "zforce/oracle.hpp"

namespace zforce {

std::string_view to_string(Claim c) {
  switch (c) {
    case Claim::kFailed: return "failed";
    case Claim::kStalled: return "stalled";
    case Claim::kMaximal: return "maximal";
    case Claim::kExactF: return "exact_F";
  }
  return "?";
}

bool size_matches(const ConstructionResult& result) {
  return result.set.size() == result.predicted_size;
}

std::vector<ClaimVerdict> verify_claims(const ConstructionResult& result) {
  const Graph& g = result.graph;
  std::vector<ClaimVerdict> out;
  for (Claim claim : result.claims) {
    ClaimVerdict v{claim, false, {}};
    switch (claim) {
      case Claim::kFailed: {
        const VertexSet final_blue = closure(g, result.set);
        v.passed = final_blue != g.vertices();
        v.detail = v.passed ? "white after closure: " + format_set(g.vertices() - final_blue)
                            : "derived coloring is all blue";
        break;
      }
      case Claim::kStalled: {
        v.passed = is_stalled(g, result.set);
        if (!v.passed) {
          if (auto f = apply_rule_once(g, result.set))
            v.detail = "force available: " + std::to_string(f->forcer) + " -> " +
                       std::to_string(f->forced);
          else
            v.detail = "set is all of V";
        }
        break;
      }
      case Claim::kMaximal: {
        if (!is_failed(g, result.set)) {
          v.detail = "set is not failed";
        } else if (auto extra = non_forcing_extension(g, result.set)) {
          v.detail = "adding " + std::to_string(*extra) + " still fails";
        } else {
          v.passed = true;
        }
        break;
      }
      case Claim::kExactF: {
        const SharpnessResult s = verify_sharpness(g, result.set);
        v.passed = s.status == SharpnessStatus::kExact;
        v.detail = std::string(to_string(s.status)) + ", bound " +
                   std::to_string(s.bound.bound) + " (" + s.bound.describe() + ")";
        break;
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

/// Complement of `white` within the graph.
VertexSet all_but(const Graph& g, const VertexSet& white) { return g.vertices() - white; }

void check_witness(const Certificate& c, const Graph& g, const char* which) {
  if (c.target != Target::kF)
    throw MismatchError(std::string(which) + " certificate is not for F");
  if (!c.witness.is_subset_of(g.vertices()))
    throw MismatchError(std::string(which) + " witness has vertices outside the graph");
  if (c.witness.size() != c.value)
    throw MismatchError(std::string(which) + " witness size differs from its value");
  if (!is_failed(g, c.witness))
    throw MismatchError(std::string(which) + " witness is not a failed set of the graph");
}

}  // namespace

// ---------------------------------------------------------------------------
// Grid P_n box P_m

int grid_failed_size(int n, int m) {
  require(n >= m && m >= 2, "grid requires n >= m >= 2");
  const int r = n == m ? 0 : (n - m) % (m - 1);
  return r == 0 ? n * m - n : n * m - n - m + 2;
}

ConstructionResult grid_construction(int n, int m) {
  require(n >= m && m >= 2, "grid requires n >= m >= 2");
  // Column i in 1..n (vertex of P_n), row j in 1..m (vertex of P_m).
  struct Point {
    int i, j;
  };
  auto in_grid = [&](Point p) { return p.i >= 1 && p.i <= n && p.j >= 1 && p.j <= m; };
  auto index = [&](Point p) { return product_index(p.i - 1, p.j - 1, m); };
  auto on_boundary = [&](Point p) { return p.j == 1 || p.j == m || p.i == n; };

  VertexSet white;
  for (int t = 1; t <= m; ++t) white.insert(index({t, t}));

  // Diagonal lines are identified by their direction (1, dj), dj = +-1.
  Point v{m, m};
  int traced = +1;

  // Zig-zag legs: leave v along the other diagonal, stop on row 1, row m or
  // column n. Continue while that diagonal carries no white vertex yet.
  while (true) {
    const int dj = -traced;
    bool line_has_white = false;
    bool line_has_points = false;
    for (int s : {+1, -1}) {
      for (Point p{v.i + s, v.j + s * dj}; in_grid(p); p = {p.i + s, p.j + s * dj}) {
        line_has_points = true;
        if (white.contains(index(p))) line_has_white = true;
      }
    }
    if (!line_has_points || line_has_white) break;
    const int s = in_grid({v.i + 1, v.j + dj}) ? +1 : -1;
    Point p = v;
    do {
      p = {p.i + s, p.j + s * dj};
      white.insert(index(p));
    } while (!on_boundary(p) && p.i > 1);
    v = p;
    traced = dj;
  }

  // Closing rays from the final v: the untraced diagonal first, then the
  // traced one, each ray stopping before a white vertex or the border.
  for (int dj : {-traced, traced}) {
    for (int s : {+1, -1}) {
      for (Point p{v.i + s, v.j + s * dj}; in_grid(p) && !white.contains(index(p));
           p = {p.i + s, p.j + s * dj})
        white.insert(index(p));
    }
  }

  const Graph g = cartesian_product(build_family(FamilySpec::path(n)),
                                    build_family(FamilySpec::path(m)));
  ConstructionResult result{g, all_but(g, white), grid_failed_size(n, m), {}, "grid"};
  result.claims = {Claim::kFailed};
  if (m > 2) result.claims.push_back(Claim::kMaximal);
  return result;
}

// ---------------------------------------------------------------------------
// Cycles

namespace {

VertexSet same_parity_set(int rows, int cols) {
  VertexSet s;
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j)
      if ((i - j) % 2 == 0) s.insert(product_index(i - 1, j - 1, cols));
  return s;
}

}  // namespace

ConstructionResult torus_construction(int m, int n) {
  require(m >= 3 && n >= 3, "torus requires m, n >= 3");
  const Graph g = cartesian_product(build_family(FamilySpec::cycle(m)),
                                    build_family(FamilySpec::cycle(n)));
  return {g, same_parity_set(m, n), ceil_div(m * n, 2), {Claim::kStalled, Claim::kFailed},
          "torus"};
}

ConstructionResult strong_torus_construction(int m, int n) {
  require(m >= 3 && n >= 3, "strong torus requires m, n >= 3");
  const Graph g = strong_product(build_family(FamilySpec::cycle(m)),
                                 build_family(FamilySpec::cycle(n)));
  return {g, same_parity_set(m, n), ceil_div(m * n, 2), {Claim::kStalled, Claim::kFailed},
          "strong-torus"};
}

ConstructionResult prism_construction(int n) {
  require(n >= 3, "prism requires n >= 3");
  const Graph g = cartesian_product(build_family(FamilySpec::path(2)),
                                    build_family(FamilySpec::cycle(n)));
  auto index = [&](int i, int j) { return product_index(i - 1, j - 1, n); };
  const int l = n % 4;
  VertexSet s;
  for (int j = 1; j <= n; ++j) {
    if (j % 4 == 0) continue;
    if (l == 1 && j == n) continue;
    if ((l == 2 || l == 3) && (j == n || j == n - 1)) continue;
    s.insert(index(1, j));
  }
  for (int j = 2; j <= n; j += 2) s.insert(index(2, j));
  if (l == 1) s.insert(index(2, n));
  return {g, s, ceil_div(n, 2) + 3 * (n / 4), {Claim::kStalled, Claim::kFailed}, "prism"};
}

ConstructionResult strong_grid_construction(int n, int m) {
  require(n >= m && m >= 2, "strong grid requires n >= m >= 2");
  const Graph g = strong_product(build_family(FamilySpec::path(n)),
                                 build_family(FamilySpec::path(m)));
  // Row i in 1..n (vertex of P_n), position j in 1..m along the first copy.
  auto index = [&](int i, int j) { return product_index(i - 1, j - 1, m); };
  VertexSet s;
  for (int i = 2; i <= n; ++i)
    for (int j = 1; j <= m; ++j) s.insert(index(i, j));
  // m = 2, 3: the whole first copy of P_m stays white.
  if (m >= 4)
    for (int k = 1; k <= ceil_div(m - 4, 3); ++k) s.insert(index(1, 3 * k));
  return {g, s, n * m - m + ceil_div(m - 4, 3), {Claim::kFailed, Claim::kMaximal},
          "strong-grid"};
}

// ---------------------------------------------------------------------------
// Lexicographic product

namespace {

std::optional<VertexSet> largest_stalled_with_two_white(const Graph& h) {
  const int n = h.order();
  if (n > SearchOptions{}.cap) return std::nullopt;
  for (int k = n - 2; k >= 0; --k)
    for (std::uint64_t r = 0; r < binomial(n, k); ++r) {
      const VertexSet stalled = closure(h, unrank_combination(n, k, r));
      if (stalled.size() <= n - 2) return stalled;
    }
  return std::nullopt;
}

}  // namespace

ConstructionResult lexicographic_construction(const Graph& g, const Graph& h,
                                              const Certificate& max_failed) {
  const int m = g.order();
  const int n = h.order();
  const Graph product = lexicographic_product(g, h);
  const VertexSet isolated = isolated_vertices(h);
  VertexSet white;
  if (isolated.empty()) {
    check_witness(max_failed, h, "F(h)");
    for (int k = 0; k < n; ++k)
      if (!max_failed.witness.contains(k)) white.insert(product_index(m - 1, k, n));
    return {product, all_but(product, white), n * m - n + max_failed.value,
            {Claim::kFailed, Claim::kMaximal}, "lex/no-isolated"};
  }
  check_witness(max_failed, g, "F(g)");
  const int target = n * m - m + max_failed.value;
  const VertexSet g_isolated = isolated_vertices(g);
  if (!g_isolated.empty()) {
    // (u, w) with both coordinates isolated is isolated in the product.
    white.insert(product_index(g_isolated.last(), isolated.last(), n));
    return {product, all_but(product, white), target, {Claim::kFailed, Claim::kMaximal},
            "lex/isolated"};
  }
  if (n == 1) {
    return {product, max_failed.witness, target, {Claim::kFailed, Claim::kMaximal},
            "lex/isolated"};
  }
  // A stalled white set of the last copy: a module {x, y} of h stays a
  // module of the product, and a whole copy of h is seen in full by every
  // outside neighbour. Failed sets stay failed under removal, so the blue
  // side is then trimmed to the target size.
  const auto modules = modules_of_order_two(h);
  const bool pair = !modules.empty();
  if (pair) {
    white.insert(product_index(m - 1, modules.front().first, n));
    white.insert(product_index(m - 1, modules.front().second, n));
  } else {
    for (int k = 0; k < n; ++k) white.insert(product_index(m - 1, k, n));
  }
  VertexSet blue = all_but(product, white);
  while (blue.size() > target) blue.erase(blue.last());
  std::vector<Claim> claims{Claim::kFailed};
  if (pair && blue.size() == n * m - 2) claims.push_back(Claim::kMaximal);

  // Any stalled white set of h with at least two vertices, placed in the
  // last copy, is seen at least twice from every adjacent copy.
  if (const auto inner = largest_stalled_with_two_white(h); inner) {
    VertexSet lifted = all_but(product, VertexSet{});
    for (int k = 0; k < n; ++k)
      if (!inner->contains(k)) lifted.erase(product_index(m - 1, k, n));
    while (lifted.size() > target) lifted.erase(lifted.last());
    if (lifted.size() > blue.size())
      return {product, lifted, target, {Claim::kFailed}, "lex/isolated"};
  }
  return {product, blue, target, claims, "lex/isolated"};
}

ConstructionResult lexicographic_construction(const Graph& g, const Graph& h,
                                              const SearchOptions& options) {
  const bool inner = isolated_vertices(h).empty();
  return lexicographic_construction(
      g, h, failed_zero_forcing_number(inner ? h : g, options));
}

// ---------------------------------------------------------------------------
// Corona

namespace {

const Certificate& need(const std::optional<Certificate>& c, const char* what) {
  if (!c) throw MismatchError(std::string("corona construction needs a certificate for ") + what);
  return *c;
}

}  // namespace

ConstructionResult corona_construction(const Graph& g, const Graph& h,
                                       const CoronaWitnesses& witnesses) {
  const int m = g.order();
  const int n = h.order();
  const Graph product = corona(g, h);
  auto copy = [&](int i, int k) { return corona_copy_index(i, k, m, n); };
  const VertexSet isolated = isolated_vertices(h);

  if (n == 1) {
    const Certificate& fg = need(witnesses.outer, "F(g)");
    check_witness(fg, g, "F(g)");
    VertexSet s = fg.witness;
    fg.witness.for_each([&](int i) { s.insert(copy(i, 0)); });
    return {product, s, 2 * fg.value, {Claim::kFailed, Claim::kMaximal}, "corona/case-1"};
  }

  if (isolated.empty()) {
    const Certificate& fh = need(witnesses.inner, "F(h)");
    check_witness(fh, h, "F(h)");
    VertexSet white;
    for (int k = 0; k < n; ++k)
      if (!fh.witness.contains(k)) white.insert(copy(m - 1, k));
    return {product, all_but(product, white), n * m + m - n + fh.value,
            {Claim::kFailed, Claim::kMaximal}, "corona/case-2"};
  }

  if (isolated == h.vertices()) {
    // Two leaves of one copy form a module of order 2.
    VertexSet white{copy(0, 0), copy(0, 1)};
    return {product, all_but(product, white), n * m + m - 2,
            {Claim::kFailed, Claim::kExactF}, "corona/case-3"};
  }

  // Mixed: the case-2 pattern on the non-isolated part of the last copy.
  const VertexSet core = h.vertices() - isolated;
  const Graph reduced = induced_subgraph(h, core);
  const Certificate& fh = need(witnesses.inner, "F(h minus isolated vertices)");
  check_witness(fh, reduced, "F(h')");
  VertexSet white;
  int position = 0;
  core.for_each([&](int k) {
    if (!fh.witness.contains(position)) white.insert(copy(m - 1, k));
    ++position;
  });
  return {product, all_but(product, white), n * m + m - n + isolated.size() + fh.value,
          {Claim::kFailed, Claim::kMaximal}, "corona/case-4"};
}

ConstructionResult corona_construction(const Graph& g, const Graph& h,
                                       const SearchOptions& options) {
  CoronaWitnesses witnesses;
  const VertexSet isolated = isolated_vertices(h);
  if (h.order() == 1) {
    witnesses.outer = failed_zero_forcing_number(g, options);
  } else if (isolated.empty()) {
    witnesses.inner = failed_zero_forcing_number(h, options);
  } else if (isolated != h.vertices()) {
    witnesses.inner =
        failed_zero_forcing_number(induced_subgraph(h, h.vertices() - isolated), options);
  }
  return corona_construction(g, h, witnesses);
}

}  // namespace zforce
