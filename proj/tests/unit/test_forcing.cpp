#include <doctest.h>

#include "generators.hpp"
#include "naive.hpp"
#include "zforce/forcing.hpp"

using namespace zforce;

namespace {

Graph fam(const FamilySpec& f) { return build_family(f); }

}  // namespace

TEST_CASE("one application of the rule") {
  const auto f = apply_rule_once(fam(FamilySpec::path(3)), VertexSet{0});
  REQUIRE(f);
  CHECK(f->forcer == 0);
  CHECK(f->forced == 1);
  CHECK_FALSE(apply_rule_once(fam(FamilySpec::cycle(4)), VertexSet{0}));
  const auto k = apply_rule_once(fam(FamilySpec::complete(4)), VertexSet{0, 1, 2});
  REQUIRE(k);
  CHECK(k->forcer == 0);
  CHECK(k->forced == 3);
}

TEST_CASE("derived colorings") {
  const auto p5 = derived_coloring(fam(FamilySpec::path(5)), VertexSet{0});
  CHECK(p5.final_blue == VertexSet::universe(5));
  CHECK(p5.chain == ForceChain{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(format_chain(p5.chain) == "0 -> 1\n1 -> 2\n2 -> 3\n3 -> 4\n");

  const auto c6 = derived_coloring(fam(FamilySpec::cycle(6)), VertexSet{0, 2, 4});
  CHECK(c6.final_blue == VertexSet{0, 2, 4});
  CHECK(c6.chain.empty());

  const auto none = derived_coloring(fam(FamilySpec::petersen()), VertexSet{});
  CHECK(none.final_blue.empty());
  CHECK(none.chain.empty());

  CHECK(derived_coloring(fam(FamilySpec::complete(3)), VertexSet{0, 1}).chain.size() == 1);
  CHECK(derived_coloring(fam(FamilySpec::cycle(4)), VertexSet{0}).chain.empty());
}

TEST_CASE("predicates on small examples") {
  CHECK(is_zero_forcing_set(fam(FamilySpec::path(6)), VertexSet{5}));
  CHECK_FALSE(is_zero_forcing_set(fam(FamilySpec::cycle(4)), VertexSet{0}));

  CHECK(is_failed(fam(FamilySpec::complete(4)), VertexSet{0, 1}));
  CHECK_FALSE(is_failed(fam(FamilySpec::path(4)), VertexSet{0}));
  CHECK(is_failed(fam(FamilySpec::complete(1)), VertexSet{}));
  CHECK_FALSE(is_failed(fam(FamilySpec::cycle(5)), VertexSet::universe(5)));

  CHECK(is_stalled(fam(FamilySpec::cycle(6)), VertexSet{0, 2, 4}));
  CHECK_FALSE(is_stalled(fam(FamilySpec::path(3)), VertexSet{0}));
  CHECK_FALSE(is_stalled(fam(FamilySpec::cycle(4)), VertexSet::universe(4)));

  CHECK(is_maximal_failed(fam(FamilySpec::cycle(4)), VertexSet{0, 2}));
  CHECK_FALSE(is_maximal_failed(fam(FamilySpec::complete(4)), VertexSet{0}));
  CHECK(is_maximal_failed(fam(FamilySpec::path(3)), VertexSet{1}));
  CHECK(non_forcing_extension(fam(FamilySpec::complete(4)), VertexSet{0}) == 1);
  CHECK_FALSE(non_forcing_extension(fam(FamilySpec::cycle(4)), VertexSet{0, 2}));
}

TEST_CASE("endpoints and consecutive pairs force paths") {
  for (int n = 2; n <= 12; ++n) {
    const Graph p = fam(FamilySpec::path(n));
    CHECK(is_zero_forcing_set(p, VertexSet{0}));
    CHECK(is_zero_forcing_set(p, VertexSet{n - 1}));
    for (int i = 0; i + 1 < n; ++i) CHECK(is_zero_forcing_set(p, VertexSet{i, i + 1}));
  }
}

TEST_CASE("closure agrees with the naive rescanning engine in both forcer orders") {
  testgen::Rng rng(1234);
  const auto suite = testgen::full_suite(10, 60, 99);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& item = suite[trial % suite.size()];
    const int n = item.graph.order();
    const VertexSet s = testgen::random_subset(rng, n, 0.4);
    const naive::Graph ng = testgen::to_naive(item.graph);
    const auto lowest = naive::closure(ng, testgen::to_mask(s), false);
    const auto highest = naive::closure(ng, testgen::to_mask(s), true);
    CAPTURE(item.name);
    CHECK(lowest == highest);
    CHECK(testgen::to_mask(closure(item.graph, s)) == lowest);
  }
}

TEST_CASE("chains match repeated single applications and replay") {
  testgen::Rng rng(77);
  const auto suite = testgen::full_suite(10, 40, 5);
  for (int trial = 0; trial < 400; ++trial) {
    const auto& item = suite[trial % suite.size()];
    const VertexSet s = testgen::random_subset(rng, item.graph.order(), 0.3);
    const DerivedColoring d = derived_coloring(item.graph, s);

    ForceChain stepwise;
    VertexSet blue = s;
    while (auto f = apply_rule_once(item.graph, blue)) {
      stepwise.push_back(*f);
      blue.insert(f->forced);
    }
    CHECK(d.chain == stepwise);
    CHECK(d.final_blue == blue);

    const auto replayed = replay(item.graph, s, d.chain);
    REQUIRE(replayed);
    CHECK(*replayed == d.final_blue);
  }
}

TEST_CASE("replay rejects invalid chains") {
  const Graph c4 = fam(FamilySpec::cycle(4));
  CHECK_FALSE(replay(c4, VertexSet{0}, ForceChain{{0, 1}}));
  CHECK_FALSE(replay(c4, VertexSet{0, 1}, ForceChain{{2, 3}}));
  CHECK(replay(c4, VertexSet{0, 1}, ForceChain{{0, 3}, {1, 2}}) == VertexSet::universe(4));
}

TEST_CASE("monotonicity under supersets") {
  testgen::Rng rng(2024);
  const auto suite = testgen::full_suite(10, 60, 8);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& item = suite[trial % suite.size()];
    const int n = item.graph.order();
    const VertexSet s = testgen::random_subset(rng, n, 0.4);
    const VertexSet bigger = s | testgen::random_subset(rng, n, 0.3);
    if (is_zero_forcing_set(item.graph, s)) CHECK(is_zero_forcing_set(item.graph, bigger));
    if (is_failed(item.graph, bigger)) CHECK(is_failed(item.graph, s));
  }
}

TEST_CASE("every maximal failed set is stalled") {
  for (const auto& item : testgen::full_suite(8, 30, 17)) {
    const int n = item.graph.order();
    for (naive::Mask m = 0; m < (naive::Mask{1} << n); ++m) {
      const VertexSet s = testgen::from_mask(m);
      if (is_maximal_failed(item.graph, s)) CHECK(is_stalled(item.graph, s));
    }
  }
}
