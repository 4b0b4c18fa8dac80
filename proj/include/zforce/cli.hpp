#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "zforce/constructions.hpp"
#include "zforce/forcing.hpp"
#include "zforce/graph.hpp"
#include "zforce/oracle.hpp"

namespace zforce::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kClaimFailed = 1,
  kUsage = 2,
  kCapacity = 3,
  kInputError = 4,
};

/**
 * Graph expression grammar:
 *
 *   FAMILY := name [':' int [(':' | ',') int]]
 *   EXPR   := FAMILY | '(' EXPR OP EXPR ')'
 *   TOP    := EXPR [OP EXPR]
 *   OP     := box | strong | lex | corona
 *
 * Names: path, cycle, complete, complete_bipartite (bipartite), wheel,
 * petersen, mary_tree (tree), empty. There is no precedence; nesting needs
 * parentheses. Throws ParseError whose column() is 1-based.
 */
GraphExpr parse_expression(std::string_view text);

// Structured (JSON) records. Each *_from_json inverts the matching *_to_json.
nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);
nlohmann::json construction_to_json(const ConstructionResult& r);
ConstructionResult construction_from_json(const nlohmann::json& j);

struct ReportRow {
  std::string claim;
  std::string paper;
  std::string computed;
  std::string route;
  bool pass = false;
};

/// Every reproduced value, in a fixed order.
std::vector<ReportRow> reproduction_rows(const SearchOptions& options);
std::string format_report(const std::vector<ReportRow>& rows);

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; `in` backs the "-" graph path.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace zforce::cli
