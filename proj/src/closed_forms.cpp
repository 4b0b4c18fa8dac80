#include <algorithm>

#include "zforce/constructions.hpp"
#include "zforce/errors.hpp"

namespace zforce {

int ceil_div(int a, int b) {
  const int q = a / b;
  return (a % b != 0 && a > 0) ? q + 1 : q;
}

int known_failed_forcing_number(const FamilySpec& spec) {
  spec.validate();
  const int n = spec.order();
  switch (spec.kind) {
    case FamilyKind::kPath:
      return ceil_div(n - 2, 2);
    case FamilyKind::kCycle:
      return n / 2;
    case FamilyKind::kComplete:
      if (n < 2) break;
      return n - 2;
    case FamilyKind::kMaryTree:
      return n - 2;
    case FamilyKind::kWheel:
      return n == 5 ? 3 : (2 * n - 2) / 3;
    case FamilyKind::kCompleteBipartite:
      if (spec.a + spec.b < 3) break;
      return spec.a + spec.b - 2;
    case FamilyKind::kPetersen:
      return 6;
    case FamilyKind::kEmpty:
      break;
  }
  throw ParameterError("no closed form for F(" + spec.to_string() + ")");
}

std::optional<int> product_closed_form(ProductOp op, const FamilySpec& left,
                                       const FamilySpec& right) {
  const bool complete = left.kind == FamilyKind::kComplete &&
                        right.kind == FamilyKind::kComplete;
  const int n = left.a;
  const int m = right.a;
  switch (op) {
    case ProductOp::kCartesian:
      if (complete && std::max(n, m) >= 4 && std::min(n, m) >= 2) return n * m - 4;
      if (left.kind == FamilyKind::kPath && right.kind == FamilyKind::kPath && n == m &&
          n >= 2)
        return n * n - n;
      break;
    case ProductOp::kStrong:
    case ProductOp::kLexicographic:
      if (complete && n >= 2 && m >= 2) return n * m - 2;
      break;
    case ProductOp::kCorona:
      if (complete && n >= 2 && m >= 2) return n * m + n - 2;
      break;
  }
  return std::nullopt;
}

int cartesian_lower_bound(int f_g, int n_g, int f_h, int n_h) {
  return std::max(n_h * f_g, n_g * f_h);
}

}  // namespace zforce
