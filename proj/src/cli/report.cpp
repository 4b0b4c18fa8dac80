#include <algorithm>
#include <functional>

#include "zforce/cli.hpp"

namespace zforce::cli {

namespace {

std::string name_of(const FamilySpec& f) {
  const std::string n = std::to_string(f.a);
  switch (f.kind) {
    case FamilyKind::kPath: return "P_" + n;
    case FamilyKind::kCycle: return "C_" + n;
    case FamilyKind::kComplete: return "K_" + n;
    case FamilyKind::kCompleteBipartite: return "K_{" + n + "," + std::to_string(f.b) + "}";
    case FamilyKind::kWheel: return "W_" + n;
    case FamilyKind::kPetersen: return "Petersen";
    case FamilyKind::kMaryTree:
      return "T(" + n + "-ary,depth " + std::to_string(f.b) + ")";
    case FamilyKind::kEmpty: return "E_" + n;
  }
  return "?";
}

std::string symbol(ProductOp op) {
  switch (op) {
    case ProductOp::kCartesian: return "□";
    case ProductOp::kStrong: return "⊠";
    case ProductOp::kLexicographic: return "·";
    case ProductOp::kCorona: return "∘";
  }
  return "?";
}

std::string product_name(ProductOp op, const FamilySpec& g, const FamilySpec& h) {
  return name_of(g) + symbol(op) + name_of(h);
}

Graph product_of(ProductOp op, const FamilySpec& g, const FamilySpec& h) {
  return apply_product(op, build_family(g), build_family(h));
}

ReportRow exhaustive_row(const std::string& graph_name, const Graph& g, int paper,
                         const SearchOptions& options) {
  const Certificate c = failed_zero_forcing_number(g, options);
  return {"F(" + graph_name + ")=" + std::to_string(paper), std::to_string(paper),
          std::to_string(c.value), "exhaustive", c.value == paper};
}

ReportRow sharpness_row(const std::string& graph_name, const ConstructionResult& r,
                        int paper) {
  const SharpnessResult s = verify_sharpness(r.graph, r.set);
  const bool exact = s.status == SharpnessStatus::kExact;
  return {"F(" + graph_name + ")=" + std::to_string(paper), std::to_string(paper),
          exact ? std::to_string(s.certificate->value)
                : std::string(to_string(s.status)),
          "structural", exact && s.certificate->value == paper};
}

ReportRow construction_row(const std::string& claim,
                           const std::vector<std::function<ConstructionResult()>>& builds) {
  int good = 0;
  for (const auto& build : builds) {
    const ConstructionResult r = build();
    const auto verdicts = verify_claims(r);
    const bool ok = size_matches(r) && std::all_of(verdicts.begin(), verdicts.end(),
                                                   [](const ClaimVerdict& v) { return v.passed; });
    good += ok ? 1 : 0;
  }
  const std::string total = std::to_string(builds.size());
  return {claim, total + "/" + total, std::to_string(good) + "/" + total, "predicates",
          good == static_cast<int>(builds.size())};
}

int display_width(const std::string& s) {
  int width = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++width;
  return width;
}

std::string pad(const std::string& s, int width) {
  return s + std::string(static_cast<std::size_t>(std::max(0, width - display_width(s))), ' ');
}

}  // namespace

std::vector<ReportRow> reproduction_rows(const SearchOptions& options) {
  std::vector<ReportRow> rows;
  auto family_row = [&](const FamilySpec& f) {
    rows.push_back(exhaustive_row(name_of(f), build_family(f), known_failed_forcing_number(f),
                                  options));
  };

  // Family table.
  for (int n = 2; n <= 12; ++n) family_row(FamilySpec::path(n));
  for (int n = 3; n <= 12; ++n) family_row(FamilySpec::cycle(n));
  for (int n = 2; n <= 12; ++n) family_row(FamilySpec::complete(n));
  for (int m = 1; m <= 11; ++m)
    for (int n = 1; n <= m && m + n <= 12; ++n)
      if (m + n >= 3) family_row(FamilySpec::complete_bipartite(m, n));
  for (int arity : {2, 3})
    for (int depth = 1; FamilySpec::mary_tree(arity, depth).order() <= 13; ++depth)
      family_row(FamilySpec::mary_tree(arity, depth));
  for (int n = 4; n <= 10; ++n) family_row(FamilySpec::wheel(n));
  family_row(FamilySpec::petersen());

  const auto P = FamilySpec::path;
  const auto C = FamilySpec::cycle;
  const auto K = FamilySpec::complete;
  using enum ProductOp;

  // Square grids and complete-graph products.
  for (int n = 2; n <= 4; ++n)
    rows.push_back(exhaustive_row(product_name(kCartesian, P(n), P(n)),
                                  product_of(kCartesian, P(n), P(n)), n * n - n, options));
  for (int m : {2, 3})
    rows.push_back(exhaustive_row(product_name(kCartesian, K(4), K(m)),
                                  product_of(kCartesian, K(4), K(m)),
                                  *product_closed_form(kCartesian, K(4), K(m)), options));

  // Prisms.
  for (int n : {4, 5}) {
    const int paper = prism_construction(n).predicted_size;
    rows.push_back(exhaustive_row(product_name(kCartesian, P(2), C(n)),
                                  product_of(kCartesian, P(2), C(n)), paper, options));
  }
  {
    const UpperBound ub = thm27_upper_bound(product_of(kCartesian, P(2), C(4)));
    rows.push_back({"bound(" + product_name(kCartesian, P(2), C(4)) + ")=5", "5",
                    std::to_string(ub.bound) + " (" + std::string(to_string(ub.basis)) + ")",
                    "structural", ub.bound == 5 && ub.basis == BoundBasis::kNoModule});
  }

  // Complete factors.
  {
    bool all_complete = true;
    for (int n = 2; n <= 6; ++n)
      for (int m = 2; m <= 6; ++m)
        all_complete = all_complete && is_complete(product_of(kStrong, K(n), K(m)));
    rows.push_back({"K_n⊠K_m complete for 2<=n,m<=6", "yes", all_complete ? "yes" : "no",
                    "structural", all_complete});
  }
  for (ProductOp op : {kStrong, kLexicographic, kCorona})
    rows.push_back(exhaustive_row(product_name(op, K(2), op == kCorona ? K(2) : K(3)),
                                  product_of(op, K(2), op == kCorona ? K(2) : K(3)),
                                  *product_closed_form(op, K(2), op == kCorona ? K(2) : K(3)),
                                  options));

  // Sharpness without search.
  rows.push_back(sharpness_row(product_name(kLexicographic, P(10), P(4)),
                               lexicographic_construction(build_family(P(10)),
                                                          build_family(P(4)), options),
                               37));
  rows.push_back(sharpness_row(product_name(kLexicographic, C(3), C(4)),
                               lexicographic_construction(build_family(C(3)),
                                                          build_family(C(4)), options),
                               10));
  rows.push_back(sharpness_row(product_name(kCorona, P(3), P(4)),
                               corona_construction(build_family(P(3)), build_family(P(4)),
                                                   options),
                               12));
  rows.push_back(sharpness_row(product_name(kCorona, C(4), C(3)),
                               corona_construction(build_family(C(4)), build_family(C(3)),
                                                   options),
                               14));

  // Constructions, verified by predicates.
  std::vector<std::function<ConstructionResult()>> grids, tori, strong_tori, prisms,
      strong_grids;
  for (int m = 2; m <= 8; ++m)
    for (int n = m; n <= 8; ++n) grids.push_back([=] { return grid_construction(n, m); });
  for (int m = 3; m <= 7; ++m)
    for (int n = 3; n <= 7; ++n) {
      tori.push_back([=] { return torus_construction(m, n); });
      strong_tori.push_back([=] { return strong_torus_construction(m, n); });
    }
  for (int n = 3; n <= 12; ++n) prisms.push_back([=] { return prism_construction(n); });
  for (int m = 2; m <= 7; ++m)
    for (int n = m; n <= 7; ++n)
      strong_grids.push_back([=] { return strong_grid_construction(n, m); });
  rows.push_back(construction_row("grid P_n□P_m, 2<=m<=n<=8", grids));
  rows.push_back(construction_row("torus C_m□C_n, 3<=m,n<=7", tori));
  rows.push_back(construction_row("strong torus C_m⊠C_n, 3<=m,n<=7", strong_tori));
  rows.push_back(construction_row("prism P_2□C_n, 3<=n<=12", prisms));
  rows.push_back(construction_row("strong grid P_n⊠P_m, 2<=m<=n<=7", strong_grids));
  return rows;
}

std::string format_report(const std::vector<ReportRow>& rows) {
  std::vector<std::string> header{"claim", "paper", "computed", "route", "verdict"};
  std::vector<int> widths;
  for (const auto& h : header) widths.push_back(display_width(h));
  for (const auto& r : rows) {
    widths[0] = std::max(widths[0], display_width(r.claim));
    widths[1] = std::max(widths[1], display_width(r.paper));
    widths[2] = std::max(widths[2], display_width(r.computed));
    widths[3] = std::max(widths[3], display_width(r.route));
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) out += pad(cells[i], widths[i] + 2);
    return out + cells.back() + "\n";
  };
  std::string out = line(header);
  int failures = 0;
  for (const auto& r : rows) {
    out += line({r.claim, r.paper, r.computed, r.route, r.pass ? "PASS" : "FAIL"});
    failures += r.pass ? 0 : 1;
  }
  out += std::to_string(rows.size() - static_cast<std::size_t>(failures)) + "/" +
         std::to_string(rows.size()) + " claims reproduced\n";
  return out;
}

}  // namespace zforce::cli
