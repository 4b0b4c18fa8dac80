#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zforce/cli.hpp"
#include "zforce/errors.hpp"

namespace zforce::cli {

using nlohmann::json;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { kText, kStructured };

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  Format format = Format::kText;
  SearchOptions search;
};

Graph read_graph(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream file(path);
    if (!file) throw IoError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  return parse_graph(text);
}

Graph operand_graph(const std::string& operand, std::istream& in) {
  if (operand == "-" || std::filesystem::is_regular_file(operand)) return read_graph(operand, in);
  return build_expression(parse_expression(operand));
}

VertexSet read_set(const std::string& text, const Graph& g) {
  VertexSet s = parse_set(text);
  if (!s.is_subset_of(g.vertices()))
    throw UsageError("set '" + text + "' has vertices outside 0.." +
                     std::to_string(g.order() - 1));
  return s;
}

json chain_to_json(const ForceChain& chain) {
  json out = json::array();
  for (const Force& f : chain) out.push_back({f.forcer, f.forced});
  return out;
}

// gen ----------------------------------------------------------------------

int cmd_gen(Context& ctx, const std::vector<std::string>& words, bool seed_labels) {
  std::string text;
  for (const auto& w : words) text += (text.empty() ? "" : " ") + w;
  Graph g = build_expression(parse_expression(text));
  if (seed_labels && !g.has_labels()) {
    std::vector<std::string> labels;
    for (int v = 0; v < g.order(); ++v) labels.push_back("v_" + std::to_string(v));
    g = g.with_labels(std::move(labels));
  }
  if (ctx.format == Format::kStructured) {
    ctx.out << json{{"kind", "graph"}, {"expression", text}, {"edge_list", serialize_graph(g)}}
                   .dump()
            << "\n";
  } else {
    ctx.out << serialize_graph(g) << "\n";
  }
  return kOk;
}

// simulate -----------------------------------------------------------------

int cmd_simulate(Context& ctx, const std::string& path, const std::string& blue_text) {
  const Graph g = read_graph(path, ctx.in);
  const VertexSet blue = read_set(blue_text, g);
  const DerivedColoring d = derived_coloring(g, blue);
  const bool forces = d.final_blue == g.vertices();
  if (ctx.format == Format::kStructured) {
    ctx.out << json{{"kind", "simulation"},
                    {"initial", blue.indices()},
                    {"chain", chain_to_json(d.chain)},
                    {"final", d.final_blue.indices()},
                    {"white", (g.vertices() - d.final_blue).indices()},
                    {"zero_forcing", forces}}
                   .dump()
            << "\n";
    return kOk;
  }
  ctx.out << "initial: " << format_set(blue) << "\n";
  ctx.out << format_chain(d.chain);
  ctx.out << "forces: " << d.chain.size() << "\n";
  ctx.out << "final: " << format_set(d.final_blue) << "\n";
  if (forces) {
    ctx.out << "verdict: ZERO FORCING\n";
  } else {
    ctx.out << "white: " << format_set(g.vertices() - d.final_blue) << "\n";
    ctx.out << "verdict: FAILED\n";
  }
  return kOk;
}

// exact --------------------------------------------------------------------

int cmd_exact(Context& ctx, const std::string& path, const std::string& stat) {
  const Graph g = read_graph(path, ctx.in);
  const Certificate c = stat == "Z" ? zero_forcing_number(g, ctx.search)
                                    : failed_zero_forcing_number(g, ctx.search);
  if (ctx.format == Format::kStructured)
    ctx.out << certificate_to_json(c).dump() << "\n";
  else
    ctx.out << format_certificate(c);
  return kOk;
}

// construct ----------------------------------------------------------------

int to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("not an integer: '" + s + "'");
  }
}

ConstructionResult build_construction(Context& ctx, const std::string& tag,
                                      const std::vector<std::string>& params) {
  auto want = [&](std::size_t count) {
    if (params.size() != count)
      throw UsageError("construct " + tag + " takes " + std::to_string(count) +
                       " parameter(s)");
  };
  if (tag == "grid") return want(2), grid_construction(to_int(params[0]), to_int(params[1]));
  if (tag == "torus") return want(2), torus_construction(to_int(params[0]), to_int(params[1]));
  if (tag == "prism") return want(1), prism_construction(to_int(params[0]));
  if (tag == "strong-grid")
    return want(2), strong_grid_construction(to_int(params[0]), to_int(params[1]));
  if (tag == "strong-torus")
    return want(2), strong_torus_construction(to_int(params[0]), to_int(params[1]));
  if (tag == "lex" || tag == "corona") {
    want(2);
    const Graph g = operand_graph(params[0], ctx.in);
    const Graph h = operand_graph(params[1], ctx.in);
    return tag == "lex" ? lexicographic_construction(g, h, ctx.search)
                        : corona_construction(g, h, ctx.search);
  }
  throw UsageError("unknown construction '" + tag +
                   "' (grid, torus, prism, strong-grid, strong-torus, lex, corona)");
}

int cmd_construct(Context& ctx, const std::string& tag, const std::vector<std::string>& params) {
  const ConstructionResult r = build_construction(ctx, tag, params);
  const auto verdicts = verify_claims(r);
  const bool size_ok = size_matches(r);
  bool all = size_ok;
  for (const auto& v : verdicts) all = all && v.passed;

  if (ctx.format == Format::kStructured) {
    json j = construction_to_json(r);
    json checks = json::array();
    for (const auto& v : verdicts)
      checks.push_back({{"claim", std::string(to_string(v.claim))},
                        {"passed", v.passed},
                        {"detail", v.detail}});
    j["verdicts"] = checks;
    j["size_check"] = size_ok;
    ctx.out << j.dump() << "\n";
  } else {
    ctx.out << "source: " << r.source << "\n";
    ctx.out << "order: " << r.graph.order() << "\n";
    ctx.out << "set: " << format_set(r.set) << "\n";
    ctx.out << "size: " << r.set.size() << "\n";
    ctx.out << "predicted: " << r.predicted_size << " " << (size_ok ? "PASS" : "FAIL") << "\n";
    for (const auto& v : verdicts) {
      ctx.out << to_string(v.claim) << ": " << (v.passed ? "PASS" : "FAIL");
      if (!v.detail.empty()) ctx.out << " (" << v.detail << ")";
      ctx.out << "\n";
    }
  }
  return all ? kOk : kClaimFailed;
}

// verify -------------------------------------------------------------------

int cmd_verify(Context& ctx, const std::string& path, const std::string& set_text,
               const std::string& check) {
  const Graph g = read_graph(path, ctx.in);
  const VertexSet s = read_set(set_text, g);
  bool pass = false;
  std::string reason;
  const DerivedColoring d = derived_coloring(g, s);
  const bool forces = d.final_blue == g.vertices();
  if (check == "zfs") {
    pass = forces;
    if (!pass) reason = "stalls with white vertices " + format_set(g.vertices() - d.final_blue);
  } else if (check == "failed") {
    pass = !forces;
    if (!pass) reason = "set forces the whole graph:\n" + format_chain(d.chain);
  } else if (check == "stalled") {
    pass = is_stalled(g, s);
    if (!pass) {
      if (auto f = apply_rule_once(g, s))
        reason = "force available: " + std::to_string(f->forcer) + " -> " +
                 std::to_string(f->forced);
      else
        reason = "set is all of V, not a proper subset";
    }
  } else {  // maximal
    if (forces) {
      reason = "set is not failed:\n" + format_chain(d.chain);
    } else if (auto extra = non_forcing_extension(g, s)) {
      VertexSet bigger = s;
      bigger.insert(*extra);
      reason = "adding vertex " + std::to_string(*extra) + " still fails (white " +
               format_set(g.vertices() - closure(g, bigger)) + ")";
    } else {
      pass = true;
    }
  }
  if (ctx.format == Format::kStructured) {
    ctx.out << json{{"kind", "verdict"},
                    {"check", check},
                    {"set", s.indices()},
                    {"passed", pass},
                    {"reason", reason}}
                   .dump()
            << "\n";
  } else {
    ctx.out << check << ": " << (pass ? "PASS" : "FAIL") << "\n";
    if (!reason.empty()) {
      ctx.out << reason;
      if (reason.back() != '\n') ctx.out << "\n";
    }
  }
  return pass ? kOk : kClaimFailed;
}

// bound --------------------------------------------------------------------

int cmd_bound(Context& ctx, const std::string& path, const std::vector<int>& cartesian) {
  if (!cartesian.empty()) {
    const int b = cartesian_lower_bound(cartesian[0], cartesian[1], cartesian[2], cartesian[3]);
    if (ctx.format == Format::kStructured)
      ctx.out << json{{"kind", "cartesian_lower_bound"}, {"bound", b}}.dump() << "\n";
    else
      ctx.out << "cartesian lower bound: " << b << "\n";
    return kOk;
  }
  if (path.empty()) throw UsageError("bound needs a graph file or --cartesian");
  const Graph g = read_graph(path, ctx.in);
  const UpperBound ub = thm27_upper_bound(g);
  if (ctx.format == Format::kStructured) {
    json j{{"kind", "upper_bound"},
           {"bound", ub.bound},
           {"basis", std::string(to_string(ub.basis))},
           {"detail", ub.describe()}};
    if (ub.module) j["module"] = {ub.module->first, ub.module->second};
    ctx.out << j.dump() << "\n";
  } else {
    ctx.out << "upper bound: " << ub.bound << "\n";
    ctx.out << "basis: " << ub.describe() << "\n";
  }
  return kOk;
}

// report -------------------------------------------------------------------

int cmd_report(Context& ctx) {
  const auto rows = reproduction_rows(ctx.search);
  const bool all = std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
  if (ctx.format == Format::kStructured) {
    for (const auto& r : rows)
      ctx.out << json{{"kind", "report_row"},
                      {"claim", r.claim},
                      {"paper", r.paper},
                      {"computed", r.computed},
                      {"route", r.route},
                      {"pass", r.pass}}
                     .dump()
              << "\n";
  } else {
    ctx.out << format_report(rows);
  }
  return all ? kOk : kClaimFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Zero forcing and failed zero forcing on small graphs and graph products",
               "zforce"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  int workers = 1;
  int cap = kDefaultExhaustiveCap;
  app.add_option("--format", format, "Output mode")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--workers", workers, "Threads for exhaustive search")
      ->check(CLI::Range(1, 256));
  app.add_option("--cap", cap, "Largest order accepted by exhaustive search")
      ->check(CLI::Range(1, kMaxExhaustiveCap));

  std::vector<std::string> gen_words;
  bool seed_labels = false;
  auto* gen = app.add_subcommand("gen", "Print the edge list of a graph expression");
  gen->add_option("expression", gen_words, "e.g. \"path:4 box path:3\"")->required();
  gen->add_flag("--seed-labels", seed_labels, "Attach v_i labels to unlabelled graphs");

  std::string graph_path;
  std::string blue;
  auto* simulate = app.add_subcommand("simulate", "Run the color-change rule to its fixed point");
  simulate->add_option("graph", graph_path, "Edge-list file or - for stdin")->required();
  simulate->add_option("--blue", blue, "Initial blue set, e.g. 0,2,5-7")->required();

  std::string stat = "F";
  auto* exact = app.add_subcommand("exact", "Exhaustive Z(G) or F(G) with certificate");
  exact->add_option("graph", graph_path)->required();
  exact->add_option("--stat", stat)->check(CLI::IsMember({"F", "Z"}));

  std::string tag;
  std::vector<std::string> params;
  auto* construct = app.add_subcommand("construct", "Build and verify a product construction");
  construct->add_option("tag", tag, "grid|torus|prism|strong-grid|strong-torus|lex|corona")
      ->required();
  construct->add_option("params", params, "Integers, or two graph expressions or files for lex/corona");

  std::string set_text;
  std::string check = "failed";
  auto* verify = app.add_subcommand("verify", "Check a set against a predicate");
  verify->add_option("graph", graph_path)->required();
  verify->add_option("set", set_text, "Vertex set, e.g. 0,2")->required();
  verify->add_option("--check", check)
      ->check(CLI::IsMember({"zfs", "failed", "stalled", "maximal"}));

  std::vector<int> cartesian;
  auto* bound = app.add_subcommand("bound", "Structural upper bound on F(G)");
  bound->add_option("graph", graph_path);
  bound->add_option("--cartesian", cartesian, "F_g n_g F_h n_h: Cartesian lower bound")
      ->expected(4);

  auto* report = app.add_subcommand("report", "Reproduce every claimed value");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Context ctx{in, out, err, Format::kText, {}};
  ctx.format = format == "structured" ? Format::kStructured : Format::kText;
  ctx.search.cap = cap;
  ctx.search.workers = workers;

  try {
    if (*gen) return cmd_gen(ctx, gen_words, seed_labels);
    if (*simulate) return cmd_simulate(ctx, graph_path, blue);
    if (*exact) return cmd_exact(ctx, graph_path, stat);
    if (*construct) return cmd_construct(ctx, tag, params);
    if (*verify) return cmd_verify(ctx, graph_path, set_text, check);
    if (*bound) return cmd_bound(ctx, graph_path, cartesian);
    if (*report) return cmd_report(ctx);
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const IoError& e) {
    err << "io: " << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    err << "parse error";
    if (e.line() > 0) err << " at line " << e.line();
    if (e.column() > 0) err << " at column " << e.column();
    err << ": " << e.what() << "\n";
    return kInputError;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const ParameterError& e) {
    err << "parameter: " << e.what() << "\n";
    return kUsage;
  } catch (const MismatchError& e) {
    err << "mismatch: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace zforce::cli
