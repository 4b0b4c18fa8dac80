#include <doctest.h>

#include "generators.hpp"
#include "naive.hpp"
#include "zforce/errors.hpp"
#include "zforce/forcing.hpp"
#include "zforce/oracle.hpp"

using namespace zforce;

namespace {

Graph fam(const FamilySpec& f) { return build_family(f); }

int naive_f(const Graph& g) { return naive::failed_number(testgen::to_naive(g)); }
int naive_z(const Graph& g) { return naive::zero_forcing_number(testgen::to_naive(g)); }

}  // namespace

TEST_CASE("zero forcing numbers") {
  CHECK(zero_forcing_number(fam(FamilySpec::path(9))).value == 1);
  CHECK(zero_forcing_number(fam(FamilySpec::path(9))).witness == VertexSet{0});

  // Frozen from the naive full enumeration.
  CHECK(naive_z(fam(FamilySpec::complete(5))) == 4);
  CHECK(naive_z(fam(FamilySpec::cycle(6))) == 2);
  CHECK(naive_z(fam(FamilySpec::cycle(5))) == 2);
  CHECK(zero_forcing_number(fam(FamilySpec::complete(5))).value == 4);
  CHECK(zero_forcing_number(fam(FamilySpec::cycle(6))).value == 2);
  const Certificate c5 = zero_forcing_number(fam(FamilySpec::cycle(5)));
  CHECK(c5.value == 2);
  CHECK(c5.witness == VertexSet{0, 1});
  CHECK(c5.target == Target::kZ);
  CHECK(c5.route == Route::kExhaustive);
}

TEST_CASE("failed zero forcing numbers") {
  CHECK(failed_zero_forcing_number(fam(FamilySpec::path(6))).value == 2);
  CHECK(failed_zero_forcing_number(fam(FamilySpec::petersen())).value == 6);
  CHECK(failed_zero_forcing_number(fam(FamilySpec::complete_bipartite(3, 2))).value == 3);
  const Certificate k1 = failed_zero_forcing_number(fam(FamilySpec::complete(1)));
  CHECK(k1.value == 0);
  CHECK(k1.witness.empty());
}

TEST_CASE("witnesses are lexicographically least at their size") {
  for (const auto& item : testgen::full_suite(7, 30, 4)) {
    CAPTURE(item.name);
    const Graph& g = item.graph;
    const int n = g.order();
    const Certificate f = failed_zero_forcing_number(g);
    const Certificate z = zero_forcing_number(g);
    for (naive::Mask m = 0; m < (naive::Mask{1} << n); ++m) {
      const VertexSet s = testgen::from_mask(m);
      if (s.size() == f.value && is_failed(g, s)) CHECK_FALSE(lex_less(s, f.witness));
      if (s.size() == z.value && is_zero_forcing_set(g, s)) CHECK_FALSE(lex_less(s, z.witness));
    }
  }
}

TEST_CASE("exhaustive search agrees with the naive oracle up to 8 vertices") {
  for (const auto& item : testgen::full_suite(8, 120, 42)) {
    CAPTURE(item.name);
    const Certificate f = failed_zero_forcing_number(item.graph);
    const Certificate z = zero_forcing_number(item.graph);
    CHECK(f.value == naive_f(item.graph));
    CHECK(z.value == naive_z(item.graph));
    CHECK(is_failed(item.graph, f.witness));
    CHECK(f.witness.size() == f.value);
    CHECK(is_zero_forcing_set(item.graph, z.witness));
    CHECK(z.witness.size() == z.value);
    CHECK(check_certificate(item.graph, f));
    CHECK(check_certificate(item.graph, z));
  }
}

TEST_CASE("worker count does not change the certificate") {
  for (const auto& item : testgen::full_suite(12, 20, 6)) {
    CAPTURE(item.name);
    const Certificate one = failed_zero_forcing_number(item.graph, {22, 1});
    for (int workers : {2, 3, 4, 7}) {
      CHECK(failed_zero_forcing_number(item.graph, {22, workers}) == one);
      CHECK(zero_forcing_number(item.graph, {22, workers}) ==
            zero_forcing_number(item.graph, {22, 1}));
    }
  }
}

TEST_CASE("capacity refusal names the cap to rerun with") {
  const Graph p23 = fam(FamilySpec::path(23));
  try {
    failed_zero_forcing_number(p23);
    FAIL("expected a capacity error");
  } catch (const CapacityError& e) {
    CHECK(e.required() == 23);
    CHECK(std::string(e.what()).find("--cap 23") != std::string::npos);
  }
  CHECK_THROWS_AS(zero_forcing_number(p23, {22, 1}), CapacityError);
  CHECK(failed_zero_forcing_number(p23, {23, 1}).value == 11);
  CHECK_THROWS_AS(zero_forcing_number(fam(FamilySpec::path(3)), {33, 1}), ParameterError);
}

TEST_CASE("sandwich and the structural characterisation") {
  for (const auto& item : testgen::full_suite(10, 150, 31)) {
    CAPTURE(item.name);
    const Graph& g = item.graph;
    const int n = g.order();
    const int f = failed_zero_forcing_number(g).value;
    const int z = zero_forcing_number(g).value;
    CHECK(z - 1 <= f);
    CHECK(f <= n - 1);
    CHECK((f == n - 1) == !isolated_vertices(g).empty());
    if (is_connected(g) && n >= 2) CHECK((f == n - 2) == !modules_of_order_two(g).empty());
    CHECK(f <= thm27_upper_bound(g).bound);
  }
}

TEST_CASE("structural upper bound") {
  const Graph prism4 = cartesian_product(fam(FamilySpec::path(2)), fam(FamilySpec::cycle(4)));
  const UpperBound p = thm27_upper_bound(prism4);
  CHECK(p.bound == 5);
  CHECK(p.basis == BoundBasis::kNoModule);

  const UpperBound c4 = thm27_upper_bound(fam(FamilySpec::cycle(4)));
  CHECK(c4.bound == 2);
  CHECK(c4.basis == BoundBasis::kModuleOfOrderTwo);
  REQUIRE(c4.module);
  CHECK(*c4.module == Edge{0, 2});

  const UpperBound e3 = thm27_upper_bound(fam(FamilySpec::empty(3)));
  CHECK(e3.bound == 2);
  CHECK(e3.basis == BoundBasis::kIsolatedVertex);

  const Graph two_paths(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  const UpperBound d = thm27_upper_bound(two_paths);
  CHECK(d.bound == 4);
  CHECK(d.basis == BoundBasis::kDisconnected);
}

TEST_CASE("sharpness verdicts") {
  const Graph c4 = fam(FamilySpec::cycle(4));
  const SharpnessResult low = verify_sharpness(c4, VertexSet{0});
  CHECK(low.status == SharpnessStatus::kLowerBoundOnly);
  CHECK_FALSE(low.certificate);

  CHECK(verify_sharpness(c4, VertexSet{0, 1}).status == SharpnessStatus::kNotFailed);

  const SharpnessResult exact = verify_sharpness(c4, VertexSet{0, 2});
  REQUIRE(exact.status == SharpnessStatus::kExact);
  CHECK(exact.certificate->value == 2);
  CHECK(exact.certificate->route == Route::kStructural);
  CHECK(check_certificate(c4, *exact.certificate));
}

TEST_CASE("certificate checking rejects wrong claims") {
  const Graph c6 = fam(FamilySpec::cycle(6));
  Certificate c = failed_zero_forcing_number(c6);
  CHECK(check_certificate(c6, c));
  Certificate low = c;
  low.value = 2;
  low.witness = VertexSet{0, 2};
  CHECK_FALSE(check_certificate(c6, low));
  Certificate bad = c;
  bad.witness = VertexSet{0, 1, 2};
  CHECK_FALSE(check_certificate(c6, bad));
}

TEST_CASE("certificate text block round trip") {
  const Certificate c = failed_zero_forcing_number(fam(FamilySpec::petersen()));
  const std::string text = format_certificate(c);
  CHECK(text.rfind("target: F\nvalue: 6\n", 0) == 0);
  CHECK(parse_certificate(text) == c);
  const Certificate k1 = failed_zero_forcing_number(fam(FamilySpec::complete(1)));
  CHECK(parse_certificate(format_certificate(k1)) == k1);
  CHECK_THROWS_AS(parse_certificate("value: 3\n"), ParseError);
}

TEST_CASE("combination ranking") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(32, 16) == 601080390);
  CHECK(unrank_combination(5, 2, 0) == VertexSet{0, 1});
  CHECK(unrank_combination(5, 2, 9) == VertexSet{3, 4});
  VertexSet previous;
  for (std::uint64_t r = 0; r < binomial(8, 3); ++r) {
    const VertexSet s = unrank_combination(8, 3, r);
    CHECK(s.size() == 3);
    if (r > 0) CHECK(lex_less(previous, s));
    previous = s;
  }
}
