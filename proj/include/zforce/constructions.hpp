#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zforce/graph.hpp"
#include "zforce/oracle.hpp"

namespace zforce {

enum class Claim { kFailed, kStalled, kMaximal, kExactF };

std::string_view to_string(Claim c);

/**
 * A constructed vertex set on a specific product graph, with the size the
 * closed form predicts and the properties the construction promises.
 * Nothing here is trusted: verify_claims re-checks every claim.
 */
struct ConstructionResult {
  Graph graph;
  VertexSet set;
  int predicted_size = 0;
  std::vector<Claim> claims;
  /// Short tag naming the construction, e.g. "grid", "corona/case-2".
  std::string source;

  friend bool operator==(const ConstructionResult&, const ConstructionResult&) = default;
};

struct ClaimVerdict {
  Claim claim;
  bool passed;
  /// Counterexample or supporting detail, human readable.
  std::string detail;
};

/// Evaluates every claim against the forcing predicates; kExactF goes
/// through verify_sharpness. The size is checked by size_matches.
std::vector<ClaimVerdict> verify_claims(const ConstructionResult& result);
bool size_matches(const ConstructionResult& result);

// ---------------------------------------------------------------------------
// Closed forms

/// Table value of F for the supported families. Throws ParameterError
/// ("no closed form") for empty graphs, K_1, and invalid specs.
int known_failed_forcing_number(const FamilySpec& spec);

/// Exact F of a two-factor product where a closed form is known:
/// K_n box K_m (n>=4, m>=2, either order), P_n box P_n, K_n strong K_m,
/// K_n lex K_m, K_n corona K_m (all n, m >= 2).
std::optional<int> product_closed_form(ProductOp op, const FamilySpec& left,
                                       const FamilySpec& right);

/// max(n_h * F_g, n_g * F_h): lower bound on F of the Cartesian product.
int cartesian_lower_bound(int f_g, int n_g, int f_h, int n_h);

/// ceil(a / b) for b > 0, correct for negative a.
int ceil_div(int a, int b);

// ---------------------------------------------------------------------------
// Constructions. Coordinates (i, j) in the comments are 1-based and map to
// the 0-based row-major product index of the factor order shown.

/// P_n box P_m, n >= m >= 2: complement of a zig-zag of diagonals.
ConstructionResult grid_construction(int n, int m);
/// Predicted size of grid_construction.
int grid_failed_size(int n, int m);

/// C_m box C_n, m, n >= 3: vertices whose coordinates share parity.
ConstructionResult torus_construction(int m, int n);
/// P_2 box C_n, n >= 3.
ConstructionResult prism_construction(int n);
/// P_n strong P_m, n >= m >= 2.
ConstructionResult strong_grid_construction(int n, int m);
/// C_m strong C_n, m, n >= 3: the torus set reused.
ConstructionResult strong_torus_construction(int m, int n);

/// g lex h. `max_failed` must be a maximum failed set certificate for h
/// when h has no isolated vertex, and for g otherwise. Throws
/// MismatchError when it is not a failed set of the right graph.
///
/// With an isolated vertex in h the predicted size |g||h|-|g|+F(g) is not
/// always attainable (K_2 lex (P_4 + K_1) has F = 7 < 8). The set returned
/// is then the largest failed set this construction reaches, and
/// size_matches reports the shortfall.
ConstructionResult lexicographic_construction(const Graph& g, const Graph& h,
                                              const Certificate& max_failed);

/// Witnesses a corona construction may need. Which one is required depends
/// on h: |h| = 1 needs `outer` (F(g)); h without isolated vertices needs
/// `inner` (F(h)); h with both isolated and non-isolated vertices needs
/// `inner` computed for h minus its isolated vertices.
struct CoronaWitnesses {
  std::optional<Certificate> outer;
  std::optional<Certificate> inner;
};

/// g corona h. The case is chosen from isolated_vertices(h).
/// Throws MismatchError when a required witness is missing or invalid.
ConstructionResult corona_construction(const Graph& g, const Graph& h,
                                       const CoronaWitnesses& witnesses);

/// Runs the exhaustive oracle for whatever witness the construction needs.
ConstructionResult lexicographic_construction(const Graph& g, const Graph& h,
                                              const SearchOptions& options);
ConstructionResult corona_construction(const Graph& g, const Graph& h,
                                       const SearchOptions& options);

}  // namespace zforce
