#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "bidigraph/closure.hpp"
#include "bidigraph/errors.hpp"
#include "bidigraph/oracle.hpp"
#include "bidigraph/state_graph.hpp"
#include "fixtures.hpp"

using namespace bidi;
using fixtures::inc;
using fixtures::walk;

namespace {

bool has_arc(const StateDigraph& sd, State from, State to) {
  for (std::size_t a : sd.out_arcs(from)) {
    if (sd.arcs()[a].to == to) return true;
  }
  return false;
}

State st(const BidirectedGraph& g, std::string_view text) {
  auto i = inc(g, text);
  return State{i.vertex, i.sign};
}

// The chain x,x1,x2,x3,x1,x4,x: a b-circuit at x carrying the negative
// triangle x1,x2,x3.
BidirectedGraph two_triangles() {
  return GraphBuilder()
      .vertex("x").vertex("x1").vertex("x2").vertex("x3").vertex("x4")
      .edge("a", "x", '-', "x1", '-')
      .edge("b", "x1", '+', "x2", '+')
      .edge("c", "x2", '-', "x3", '+')
      .edge("d", "x1", '+', "x3", '-')
      .edge("h", "x4", '-', "x1", '-')
      .edge("k", "x4", '+', "x", '+')
      .build();
}

std::vector<Incidence> incidences(const BidirectedGraph& g) {
  std::vector<Incidence> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out.push_back({v, Sign::minus()});
    out.push_back({v, Sign::plus()});
  }
  return out;
}

}  // namespace

TEST_CASE("state digraph construction") {
  auto empty = GraphBuilder().vertex("a").vertex("b").vertex("c").build();
  StateDigraph e(empty);
  CHECK(e.node_count() == 6);
  CHECK(e.arcs().empty());

  auto g = fixtures::path();
  StateDigraph sd(g);
  CHECK(sd.node_count() == 8);
  CHECK(sd.arcs().size() == 6);
  CHECK(has_arc(sd, st(g, "x-"), st(g, "a+")));
  CHECK(has_arc(sd, st(g, "a+"), st(g, "b-")));
  CHECK(has_arc(sd, st(g, "b-"), st(g, "y+")));

  auto loop = GraphBuilder().vertex("x").edge("l", "x", '+', "x", '-').build();
  StateDigraph ls(loop);
  CHECK(ls.arcs().size() == 2);
  CHECK(has_arc(ls, st(loop, "x+"), st(loop, "x+")));
  CHECK(has_arc(ls, st(loop, "x-"), st(loop, "x-")));
}

TEST_CASE("b-walk existence") {
  auto g = fixtures::path();
  StateDigraph sd(g);
  CHECK(exists_bwalk(sd, inc(g, "x-"), inc(g, "y-")));
  CHECK_FALSE(exists_bwalk(sd, inc(g, "x+"), inc(g, "y-")));

  auto iso = GraphBuilder().vertex("x").vertex("y").edge("e", "y", '+', "y", '-').build();
  StateDigraph si(iso);
  for (Incidence to : incidences(iso)) {
    CHECK_FALSE(exists_bwalk(si, inc(iso, "x+"), to));
    CHECK_FALSE(exists_bwalk(si, inc(iso, "x-"), to));
  }
  CHECK_THROWS_AS(exists_bwalk(sd, Incidence{9, Sign::plus()}, inc(g, "y-")), InputError);
}

TEST_CASE("shortest b-path") {
  auto tri = fixtures::tri();
  std::vector<bool> active{true, true, false};
  auto p = find_bpath(StateDigraph(tri, active), inc(tri, "2-"), inc(tri, "3-"));
  REQUIRE(p.has_value());
  CHECK(p->length() == 2);
  CHECK(format_walk(tri, *p) == "2- 1 3-");
  CHECK(format_walk_edges(tri, *p) == "e1,e2");

  // The shortest b-circuit through 2+ is the digon g f3; the triangle
  // f1 f2 f3 is a longer b-circuit through the same state.
  auto circ = fixtures::circ();
  StateDigraph sc(circ);
  auto c = find_bpath(sc, inc(circ, "2+"), inc(circ, "2-"));
  REQUIRE(c.has_value());
  CHECK(format_walk_edges(circ, *c) == "g,f3");
  CHECK(is_bpath(circ, *c));
  auto triangle = walk(circ, "2+", {"f1", "f2", "f3"});
  CHECK(is_bpath(circ, triangle));
  CHECK(triangle.end() == inc(circ, "2-"));
  auto all = enumerate_bpaths(sc, inc(circ, "2+"), inc(circ, "2-"), 100);
  CHECK_FALSE(all.truncated);
  CHECK(std::ranges::find(all.paths, triangle) != all.paths.end());
  CHECK(std::ranges::find(all.paths, *c) != all.paths.end());

  auto d = GraphBuilder().vertex("x").vertex("y").edge("e", "x", '+', "y", '-').build();
  auto one = find_bpath(StateDigraph(d), inc(d, "x+"), inc(d, "y-"));
  REQUIRE(one.has_value());
  CHECK(one->length() == 1);

  auto path = fixtures::path();
  CHECK_FALSE(find_bpath(StateDigraph(path), inc(path, "x+"), inc(path, "y-")).has_value());
}

TEST_CASE("b-path characterization") {
  auto g = fixtures::path();
  auto full = walk(g, "x-", {"e1", "e2", "e3"});
  CHECK(is_bpath(g, full));
  CHECK(full.start() == inc(g, "x-"));
  CHECK(full.end() == inc(g, "y-"));
  CHECK_FALSE(is_bpath(g, BWalk{}));

  // x x1 x2 x3 x2 x4 y, leaving x2 with + both times.
  auto rep = GraphBuilder()
                 .vertex("x").vertex("x1").vertex("x2").vertex("x3").vertex("x4").vertex("y")
                 .edge("e1", "x", '+', "x1", '-')
                 .edge("e2", "x1", '+', "x2", '-')
                 .edge("e3", "x2", '+', "x3", '-')
                 .edge("e4", "x3", '+', "x2", '-')
                 .edge("e5", "x2", '+', "x4", '-')
                 .edge("e6", "x4", '+', "y", '-')
                 .build();
  auto repeated = walk(rep, "x+", {"e1", "e2", "e3", "e4", "e5", "e6"});
  CHECK_FALSE(is_bpath(rep, repeated));
  CHECK_FALSE(oracle::satisfies_bpath_conditions(rep, repeated));
  CHECK_FALSE(oracle::is_minimal_bwalk(rep, repeated));

  // Steps that do not meet are rejected as malformed.
  BWalk broken({full.steps()[0], full.steps()[2]});
  CHECK_THROWS_AS(is_bpath(g, broken), InputError);
}

TEST_CASE("b-walk sign and weight") {
  auto g = fixtures::path();
  auto full = walk(g, "x-", {"e1", "e2", "e3"});
  CHECK(bwalk_sign(full) == Sign::minus());
  CHECK(bwalk_weight(full) == -2);
  CHECK(chain_signature(g, full) == Sign::minus());
  CHECK(chain_weight(g, full) == -2);

  auto d = GraphBuilder().vertex("x").vertex("y").edge("e", "x", '+', "y", '-').build();
  auto w = walk(d, "x+", {"e"});
  CHECK(bwalk_sign(w) == Sign::plus());
  CHECK(bwalk_weight(w) == 0);

  auto circ = fixtures::circ();
  auto c = walk(circ, "2+", {"f1", "f2", "f3"});
  CHECK(bwalk_sign(c) == Sign::plus());
  CHECK(chain_signature(circ, c) == Sign::plus());
}

TEST_CASE("b-circuit detection") {
  CHECK_FALSE(has_bcircuit(fixtures::path()));
  auto circ = fixtures::circ();
  CHECK(has_bcircuit(circ));
  StateDigraph sc(circ);
  CHECK(has_arc(sc, st(circ, "2+"), st(circ, "3-")));
  CHECK(has_arc(sc, st(circ, "3-"), st(circ, "1-")));
  CHECK(has_arc(sc, st(circ, "1-"), st(circ, "2+")));

  auto loop = GraphBuilder().vertex("x").edge("l", "x", '+', "x", '-').build();
  CHECK(has_bcircuit(loop));
  auto c = find_bcircuit(loop);
  REQUIRE(c.has_value());
  CHECK(c->length() == 1);

  CHECK(topological_order(StateDigraph(fixtures::path())).has_value());
  CHECK_FALSE(find_bcircuit(fixtures::path()).has_value());
}

TEST_CASE("cyclic b-path classification") {
  auto circ = fixtures::circ();
  auto c = walk(circ, "2+", {"f1", "f2", "f3"});
  CHECK(classify_cyclic_bpath(circ, c) == CyclicKind::purely_cyclic);

  auto g = two_triangles();
  auto chain = walk(g, "x-", {"a", "b", "c", "d", "h", "k"});
  REQUIRE(is_bpath(g, chain));
  CHECK(chain.end() == inc(g, "x+"));
  auto analysis = analyze_cyclic_bpath(g, chain);
  CHECK(analysis.kind == CyclicKind::type_a);
  REQUIRE(analysis.cycle_vertex.has_value());
  CHECK(*analysis.cycle_vertex == g.vertex("x1"));

  auto path = fixtures::path();
  CHECK(classify_cyclic_bpath(path, walk(path, "x-", {"e1", "e2", "e3"})) ==
        CyclicKind::not_cyclic);

  CHECK_THROWS_AS(classify_cyclic_bpath(path, walk(path, "x-", {"e1", "e3"})), InputError);
}

TEST_CASE("cyclic b-path types b and c") {
  // Negative loop at v with tails to x and y.
  auto b = GraphBuilder()
               .vertex("x").vertex("v").vertex("y")
               .edge("t1", "x", '+', "v", '-')
               .edge("l", "v", '+', "v", '+')
               .edge("t2", "v", '-', "y", '-')
               .build();
  auto pb = walk(b, "x+", {"t1", "l", "t2"});
  REQUIRE(is_bpath(b, pb));
  CHECK(classify_cyclic_bpath(b, pb) == CyclicKind::type_b);

  // Tail walked out and back: x w v (loop) v w x.
  auto c = GraphBuilder()
               .vertex("x").vertex("w").vertex("v")
               .edge("s", "x", '+', "w", '-')
               .edge("t", "w", '+', "v", '-')
               .edge("l", "v", '+', "v", '+')
               .build();
  auto pc = walk(c, "x+", {"s", "t", "l", "t", "s"});
  REQUIRE(is_bpath(c, pc));
  CHECK(classify_cyclic_bpath(c, pc) == CyclicKind::type_c);

  auto pa = walk(b, "v+", {"l", "t2"});
  REQUIRE(is_bpath(b, pa));
  CHECK(classify_cyclic_bpath(b, pa) == CyclicKind::type_a);
}

TEST_CASE("property: engine b-paths match the chain oracle on small graphs") {
  std::mt19937_64 rng(11);
  oracle::RandomGraphOptions opts;
  opts.min_vertices = 1;
  opts.max_vertices = 4;
  opts.max_edges = 5;
  for (int trial = 0; trial < 300; ++trial) {
    auto g = oracle::random_graph(rng, opts);
    StateDigraph sd(g);
    for (Incidence from : incidences(g)) {
      auto brute = oracle::brute_bpaths_from(g, from);
      for (Incidence to : incidences(g)) {
        auto engine = enumerate_bpaths(sd, from, to, 100000);
        auto it = brute.find(to);
        auto expected = it == brute.end() ? std::vector<BWalk>{} : it->second;
        CHECK(engine.paths == expected);
        CHECK(exists_bwalk(sd, from, to) == !expected.empty());
        CHECK(find_bpath(sd, from, to).has_value() == !expected.empty());
      }
    }
  }
}

TEST_CASE("property: b-path invariants on random graphs") {
  std::mt19937_64 rng(5);
  oracle::RandomGraphOptions opts;
  opts.max_vertices = 6;
  opts.max_edges = 8;
  for (int trial = 0; trial < 150; ++trial) {
    auto g = oracle::random_graph(rng, opts);
    StateDigraph sd(g);
    for (Incidence from : incidences(g)) {
      for (Incidence to : incidences(g)) {
        auto all = enumerate_bpaths(sd, from, to, 100000);
        for (const BWalk& p : all.paths) {
          CHECK(is_bpath(g, p));
          CHECK(is_bpath(g, p.reversed()));
          CHECK(p.start() == from);
          CHECK(p.end() == to);
          // No immediate backtracking.
          for (std::size_t i = 1; i < p.length(); ++i) {
            CHECK(p.steps()[i].edge != p.steps()[i - 1].edge);
          }
          // Sign and weight of the walk match its chain.
          CHECK(bwalk_sign(p) == chain_signature(g, p));
          CHECK(bwalk_weight(p) == chain_weight(g, p));
          // A b-path containing a positive cycle is that cycle.
          auto a = analyze_cyclic_bpath(g, p);
          if (a.cycle) {
            Sign s = Sign::plus();
            for (std::size_t t = a.cycle->first; t < a.cycle->second; ++t) {
              s = s * signature(g.edge(p.steps()[t].edge));
            }
            if (s.is_plus()) CHECK(a.kind == CyclicKind::purely_cyclic);
          }
        }
        // The reversal of the set is the set for the reversed query.
        auto back = enumerate_bpaths(sd, to, from, 100000);
        CHECK(back.paths.size() == all.paths.size());
      }
    }

    if (!has_bcircuit(sd)) {
      CHECK(topological_order(sd).has_value());
      CHECK_FALSE(has_bcircuit(transitive_closure(g).graph));
    } else {
      CHECK_FALSE(topological_order(sd).has_value());
      auto c = find_bcircuit(g);
      REQUIRE(c.has_value());
      CHECK(is_bpath(g, *c));
      CHECK(c->end() == Incidence{c->start().vertex, -c->start().sign});
    }
  }
}

TEST_CASE("property: minimality by subsequence agrees with the state characterization") {
  // Grow every b-walk of length <= 6 and compare the two readings of
  // minimality.
  std::mt19937_64 rng(99);
  oracle::RandomGraphOptions opts;
  opts.min_vertices = 1;
  opts.max_vertices = 4;
  opts.max_edges = 5;
  std::size_t walks = 0;
  std::size_t non_minimal = 0;
  for (int trial = 0; trial < 120; ++trial) {
    auto g = oracle::random_graph(rng, opts);
    std::vector<Step> chain;
    std::function<void(VertexId, Sign)> grow = [&](VertexId cur, Sign depart) {
      if (chain.size() == 6) return;
      for (EdgeIndex e : g.incident_edges(cur)) {
        const Edge& edge = g.edge(e);
        std::vector<Step> options;
        if (edge.u == cur && edge.tau_u == depart) options.push_back({e, edge.u, edge.tau_u, edge.v, edge.tau_v});
        if (edge.v == cur && edge.tau_v == depart) options.push_back({e, edge.v, edge.tau_v, edge.u, edge.tau_u});
        for (const Step& s : options) {
          chain.push_back(s);
          BWalk w(chain);
          ++walks;
          bool minimal = oracle::is_minimal_bwalk(g, w);
          non_minimal += minimal ? 0 : 1;
          CHECK(minimal == is_bpath(g, w));
          grow(s.to, -s.arrive);
          chain.pop_back();
        }
      }
    };
    for (Incidence from : incidences(g)) grow(from.vertex, from.sign);
  }
  CHECK(walks > 1000);
  CHECK(non_minimal > 0);
}
