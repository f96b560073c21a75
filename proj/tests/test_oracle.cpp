#include <doctest.h>

#include <random>

#include "bidigraph/closure.hpp"
#include "bidigraph/errors.hpp"
#include "bidigraph/oracle.hpp"
#include "fixtures.hpp"

using namespace bidi;
using namespace bidi::oracle;
using fixtures::inc;

TEST_CASE("brute b-paths on the fixtures") {
  auto tri = fixtures::tri();
  auto paths = brute_bpaths(tri, inc(tri, "2-"), inc(tri, "3-"));
  REQUIRE(paths.size() == 2);
  std::set<std::string> rendered;
  for (const auto& p : paths) rendered.insert(format_walk(tri, p));
  CHECK(rendered == std::set<std::string>{"2- 3-", "2- 1 3-"});

  auto path = fixtures::path();
  auto xy = brute_bpaths(path, inc(path, "x-"), inc(path, "y-"));
  REQUIRE(xy.size() == 1);
  CHECK(format_walk_edges(path, xy[0]) == "e1,e2,e3");

  auto apart = GraphBuilder().vertex("x").vertex("y").build();
  CHECK(brute_bpaths(apart, inc(apart, "x+"), inc(apart, "y-")).empty());
}

TEST_CASE("brute closure, reductions and circuits on the fixtures") {
  auto path = fixtures::path();
  CHECK(brute_closure(path).size() == 6);
  CHECK(brute_closure(path) == closure_keys(path));

  auto tri = fixtures::tri();
  CHECK(brute_reductions(tri) == std::set<EdgeSet>{{0, 1}});

  auto circ = fixtures::circ();
  auto circuits = brute_circuits(circ);
  REQUIRE(circuits.size() == 3);
  for (const auto& c : circuits) CHECK(c.type == CircuitType::i);
}

TEST_CASE("independence oracle") {
  auto tri = fixtures::tri();
  CHECK(is_independent(tri, {0, 1}));
  CHECK_FALSE(is_independent(tri, {0, 1, 2}));  // positive triangle
  auto neg = GraphBuilder().vertex("x").edge("l", "x", '+', "x", '+').build();
  CHECK(is_independent(neg, {0}));
  auto pos = GraphBuilder().vertex("x").edge("l", "x", '+', "x", '-').build();
  CHECK_FALSE(is_independent(pos, {0}));
  CHECK(brute_rank(fixtures::seven()) == 7);
}

TEST_CASE("guards") {
  GraphBuilder b;
  for (int i = 0; i < 9; ++i) b.vertex("v" + std::to_string(i));
  auto big = b.build();
  CHECK_THROWS_AS(brute_closure(big), CapExceeded);
  OracleConfig wide;
  wide.max_vertices = 9;
  CHECK_NOTHROW(brute_closure(big, wide));
  CHECK_THROWS_AS(brute_circuits(fixtures::seven(), {std::nullopt, 8, 5}), CapExceeded);
}

TEST_CASE("chain length bound") {
  auto path = fixtures::path();
  OracleConfig shortc;
  shortc.max_chain_length = 2;
  CHECK(brute_bpaths(path, inc(path, "x-"), inc(path, "y-"), shortc).empty());
}

TEST_CASE("random generator") {
  std::mt19937_64 a(3);
  std::mt19937_64 b(3);
  for (int i = 0; i < 20; ++i) CHECK(random_graph(a) == random_graph(b));

  std::mt19937_64 rng(9);
  RandomGraphOptions opts;
  opts.distinct_keys = true;
  for (int i = 0; i < 100; ++i) {
    auto g = random_graph(rng, opts);
    CHECK(g.vertex_count() >= 2);
    CHECK(g.vertex_count() <= 8);
    CHECK(g.edge_count() <= 12);
    CHECK(edge_keys(g).size() == g.edge_count());
  }
}

TEST_CASE("exhaustive family") {
  auto family = exhaustive_family();
  // Multisets of at most 4 of the n(2n+1) edge types, for n = 1, 2, 3.
  CHECK(family.size() == 35 + 1001 + 12650);
  CHECK(family.front().edge_count() == 0);
}

TEST_CASE("comparison detects a tampered engine answer") {
  auto g = fixtures::path();
  KeySet keys = closure_keys(g);
  keys.erase(keys.begin());
  CHECK(keys != brute_closure(g));

  OracleReport report;
  compare_with_engine(fixtures::circ(), report);
  CHECK(report.graphs == 1);
  CHECK(report.disagreements.empty());
}

TEST_CASE("oracle check on a random batch") {
  auto report = run_oracle_check(17, 60, false);
  CHECK(report.graphs == 60);
  CHECK(report.disagreements.empty());
}
