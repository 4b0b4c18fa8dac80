#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "zforce/cli.hpp"
#include "zforce/errors.hpp"

using namespace zforce;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string graph_file(const std::string& name, const std::string& expression) {
  const auto dir = std::filesystem::temp_directory_path() / "zforce_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / name).string();
  std::ofstream(path) << run({"gen", expression}).out;
  return path;
}

int column_of(std::string_view text) {
  try {
    cli::parse_expression(text);
  } catch (const ParseError& e) {
    return e.column();
  }
  return -1;
}

}  // namespace

TEST_CASE("expression grammar") {
  CHECK(build_expression(cli::parse_expression("path:4 box path:3")).order() == 12);
  CHECK(build_expression(cli::parse_expression("petersen")).order() == 10);
  CHECK(build_expression(cli::parse_expression("(complete:4 box complete:2)")).order() == 8);
  CHECK(build_expression(cli::parse_expression("complete_bipartite:3:2")).order() == 5);
  CHECK(build_expression(cli::parse_expression("bipartite:3,2")).order() == 5);
  CHECK(build_expression(cli::parse_expression("tree:2:3")).order() == 15);
  CHECK(build_expression(cli::parse_expression("(path:2 strong path:2) corona empty:2")).order() ==
        12);
  CHECK(column_of("path:3 box") == 11);
  CHECK(column_of("path:3 box path:2 box path:2") == 19);
  CHECK(column_of("hexagon:3") == 1);
  CHECK(column_of("(path:3 box path:2") > 0);
  CHECK(column_of("path:x") == 6);
}

TEST_CASE("gen prints a labelled edge list") {
  const auto grid = run({"gen", "path:4", "box", "path:3"});
  CHECK(grid.code == 0);
  const Graph g = parse_graph(grid.out);
  CHECK(g.order() == 12);
  CHECK(g.label(11) == "v_{3,2}");
  const auto p = run({"gen", "--seed-labels", "petersen"});
  CHECK(parse_graph(p.out).label(9) == "v_9");
  CHECK(run({"gen", "path:200"}).code == cli::kCapacity);
  CHECK(run({"gen", "path:3", "box"}).code == cli::kInputError);
  CHECK(run({"gen", "cycle:2"}).code == cli::kUsage);
}

TEST_CASE("simulate") {
  const auto p5 = run({"simulate", "-", "--blue", "0"}, run({"gen", "path:5"}).out);
  CHECK(p5.code == 0);
  CHECK(p5.out.find("forces: 4") != std::string::npos);
  CHECK(p5.out.find("ZERO FORCING") != std::string::npos);
  const auto c4 = run({"simulate", "-", "--blue", "0"}, run({"gen", "cycle:4"}).out);
  CHECK(c4.out.find("forces: 0") != std::string::npos);
  CHECK(c4.out.find("verdict: FAILED") != std::string::npos);
  CHECK(c4.out.find("white: 1,2,3") != std::string::npos);
  const auto k3 = run({"simulate", "-", "--blue", "0,1"}, run({"gen", "complete:3"}).out);
  CHECK(k3.out.find("forces: 1") != std::string::npos);
  CHECK(run({"simulate", "-", "--blue", "9"}, run({"gen", "path:3"}).out).code == cli::kUsage);
  CHECK(run({"simulate", "-"}, "").code == cli::kUsage);
}

TEST_CASE("exact") {
  const std::string petersen = graph_file("petersen.txt", "petersen");
  const auto f = run({"exact", petersen, "--stat", "F"});
  CHECK(f.code == 0);
  CHECK(f.out.find("value: 6") != std::string::npos);
  const auto z = run({"exact", "-", "--stat", "Z"}, run({"gen", "cycle:5"}).out);
  CHECK(z.out.find("value: 2") != std::string::npos);
  const auto k1 = run({"exact", "-"}, "1 0\n");
  CHECK(parse_certificate(k1.out).value == 0);
  CHECK(parse_certificate(k1.out).witness.empty());

  const std::string p23 = graph_file("p23.txt", "path:23");
  const auto refused = run({"exact", p23});
  CHECK(refused.code == cli::kCapacity);
  CHECK(refused.err.find("--cap 23") != std::string::npos);
  CHECK(run({"--cap", "23", "exact", p23}).out.find("value: 11") != std::string::npos);
  CHECK(run({"--cap", "40", "exact", p23}).code == cli::kUsage);
  CHECK(run({"exact", "/nonexistent/graph.txt"}).code == cli::kInputError);
  CHECK(run({"exact", "-"}, "3 1\n0 7\n").code == cli::kInputError);
}

TEST_CASE("construct") {
  const auto grid = run({"construct", "grid", "5", "3"});
  CHECK(grid.code == 0);
  CHECK(grid.out.find("size: 10") != std::string::npos);
  CHECK(grid.out.find("failed: PASS") != std::string::npos);
  CHECK(grid.out.find("maximal: PASS") != std::string::npos);
  CHECK(run({"construct", "prism", "4"}).out.find("size: 5") != std::string::npos);
  const auto corona = run({"construct", "corona", "complete:2", "empty:2"});
  CHECK(corona.code == 0);
  CHECK(corona.out.find("size: 4") != std::string::npos);
  CHECK(corona.out.find("exact_F: PASS") != std::string::npos);
  CHECK(run({"construct", "lex", "path:10", "path:4"}).out.find("size: 37") != std::string::npos);
  const auto dir = std::filesystem::temp_directory_path() / "zforce_cli_test";
  std::filesystem::create_directories(dir);
  const std::string p4k1 = (dir / "p4k1.txt").string();
  std::ofstream(p4k1) << "5 3\n0 1\n1 2\n2 3\n";
  const auto shortfall = run({"construct", "lex", "complete:2", p4k1});
  CHECK(shortfall.code == cli::kClaimFailed);
  CHECK(shortfall.out.find("size: 7") != std::string::npos);
  CHECK(shortfall.out.find("predicted: 8 FAIL") != std::string::npos);
  CHECK(shortfall.out.find("failed: PASS") != std::string::npos);
  const auto small = run({"construct", "corona", "path:2", "complete:1"});
  CHECK(small.code == cli::kClaimFailed);
  CHECK(small.out.find("maximal: FAIL") != std::string::npos);
  CHECK(run({"construct", "grid", "2", "5"}).code == cli::kUsage);
  CHECK(run({"construct", "hexagon", "3"}).code == cli::kUsage);
  CHECK(run({"construct", "grid", "5"}).code == cli::kUsage);
}

TEST_CASE("verify") {
  const std::string c4 = graph_file("c4.txt", "cycle:4");
  CHECK(run({"verify", c4, "0,2", "--check", "maximal"}).code == 0);
  const auto p4 = run({"verify", "-", "0", "--check", "failed"}, run({"gen", "path:4"}).out);
  CHECK(p4.code == cli::kClaimFailed);
  CHECK(p4.out.find("0 -> 1") != std::string::npos);
  const std::string c6 = graph_file("c6.txt", "cycle:6");
  CHECK(run({"verify", c6, "0,2,4", "--check", "stalled"}).code == 0);
  CHECK(run({"verify", c6, "0,1", "--check", "zfs"}).code == 0);
  const auto k4 = run({"verify", "-", "0", "--check", "maximal"}, run({"gen", "complete:4"}).out);
  CHECK(k4.code == cli::kClaimFailed);
  CHECK(k4.out.find("adding vertex 1") != std::string::npos);
  CHECK(run({"verify", c4, "0,x"}).code == cli::kInputError);
  CHECK(run({"verify", c4, "0", "--check", "bogus"}).code == cli::kUsage);
}

TEST_CASE("bound") {
  const auto prism = run({"bound", "-"}, run({"gen", "path:2", "box", "cycle:4"}).out);
  CHECK(prism.out.find("upper bound: 5") != std::string::npos);
  CHECK(prism.out.find("no-module") != std::string::npos);
  CHECK(run({"bound", "--cartesian", "2", "4", "1", "3"}).out == "cartesian lower bound: 6\n");
  CHECK(run({"bound"}).code == cli::kUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"--format", "xml", "report"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("structured records round trip") {
  const std::string petersen = graph_file("petersen.txt", "petersen");
  const auto f = run({"--format", "structured", "exact", petersen});
  const Certificate c = cli::certificate_from_json(json::parse(f.out));
  CHECK(c == failed_zero_forcing_number(build_family(FamilySpec::petersen())));
  CHECK(cli::certificate_to_json(c).dump() + "\n" == f.out);

  for (std::vector<std::string> args :
       {std::vector<std::string>{"grid", "6", "4"}, {"prism", "7"}, {"torus", "3", "5"},
        {"strong-grid", "5", "4"}, {"lex", "path:3", "empty:2"}, {"corona", "cycle:4", "cycle:3"}}) {
    args.insert(args.begin(), {"--format", "structured", "construct"});
    const auto out = run(args);
    CHECK(out.code == 0);
    const json j = json::parse(out.out);
    const ConstructionResult r = cli::construction_from_json(j);
    CHECK(cli::construction_from_json(cli::construction_to_json(r)) == r);
    CHECK(r.set.size() == r.predicted_size);
    CHECK(j.at("size_check").get<bool>());
  }
  CHECK_THROWS_AS(cli::certificate_from_json(json{{"target", "Q"}}), ParseError);
}

TEST_CASE("report is deterministic across runs and workers") {
  const auto one = run({"report"});
  CHECK(one.code == 0);
  CHECK(one.out.find("F(Petersen)=6") != std::string::npos);
  CHECK(one.out.find("F(P_2□C_4)=5") != std::string::npos);
  CHECK(one.out.find("F(K_4□K_2)=4") != std::string::npos);
  CHECK(one.out.find("FAIL") == std::string::npos);
  CHECK(run({"report"}).out == one.out);
  CHECK(run({"--workers", "4", "report"}).out == one.out);
}

TEST_CASE("installed binary honours the exit code contract") {
  const char* bin = std::getenv("ZFORCE_BIN");
  if (bin == nullptr) return;
  const std::string b = bin;
  auto status = [](const std::string& command) {
    const int raw = std::system((command + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status(b + " construct grid 4 4") == 0);
  CHECK(status(b + " nothing") == 2);
  CHECK(status(b + " exact /nonexistent") == 4);
  CHECK(status(b + " gen path:30 | " + b + " exact -") == 3);
}
