#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bidigraph/graph.hpp"
#include "bidigraph/state_graph.hpp"

namespace fixtures {

using bidi::BidirectedGraph;
using bidi::GraphBuilder;

// x -e1- a -e2- b -e3- y, one (-,-) b-path end to end.
inline BidirectedGraph path() {
  return GraphBuilder()
      .vertex("x").vertex("a").vertex("b").vertex("y")
      .edge("e1", "x", '-', "a", '-')
      .edge("e2", "a", '+', "b", '+')
      .edge("e3", "b", '-', "y", '-')
      .build();
}

// Triangle whose edge e3 is implied by e1, e2.
inline BidirectedGraph tri() {
  return GraphBuilder()
      .vertex("1").vertex("2").vertex("3")
      .edge("e1", "2", '-', "1", '-')
      .edge("e2", "1", '+', "3", '-')
      .edge("e3", "2", '-', "3", '-')
      .build();
}

// b-circuit f1 f2 f3 plus g; reduction is not unique after closure.
inline BidirectedGraph circ() {
  return GraphBuilder()
      .vertex("1").vertex("2").vertex("3")
      .edge("f1", "2", '+', "3", '+')
      .edge("f2", "1", '+', "3", '-')
      .edge("f3", "2", '-', "1", '-')
      .edge("g", "2", '+', "1", '+')
      .build();
}

// Seven vertices; not quasibalanced, but its reduction is.
inline BidirectedGraph seven() {
  return GraphBuilder()
      .vertex("1").vertex("2").vertex("3").vertex("4").vertex("5").vertex("6").vertex("7")
      .edge("e", "1", '-', "2", '+')
      .edge("f2", "2", '+', "3", '+')
      .edge("f3", "3", '+', "4", '+')
      .edge("f4", "4", '+', "5", '+')
      .edge("f5", "1", '-', "5", '+')
      .edge("f6", "5", '-', "6", '+')
      .edge("f7", "6", '-', "7", '+')
      .edge("f8", "5", '+', "7", '+')
      .edge("f9", "7", '-', "2", '+')
      .build();
}

/// "x-" -> incidence.
inline bidi::Incidence inc(const BidirectedGraph& g, std::string_view text) {
  auto sign = bidi::Sign::from_char(text.back());
  return bidi::Incidence{g.vertex(text.substr(0, text.size() - 1)), *sign};
}

inline bidi::SignedEdgeKey key(const BidirectedGraph& g, std::string_view a, std::string_view b) {
  return bidi::SignedEdgeKey(inc(g, a), inc(g, b));
}

/// Walk from `start` along the named edges; each edge leaves the current
/// vertex with the sign required by the previous arrival.
inline bidi::BWalk walk(const BidirectedGraph& g, std::string_view start,
                        const std::vector<std::string>& edge_ids) {
  bidi::Incidence cur = inc(g, start);
  std::vector<bidi::Step> steps;
  for (const auto& id : edge_ids) {
    bidi::EdgeIndex i = g.edge_index(id);
    const bidi::Edge& e = g.edge(i);
    bidi::Step s = (e.u == cur.vertex && e.tau_u == cur.sign)
                       ? bidi::Step{i, e.u, e.tau_u, e.v, e.tau_v}
                       : bidi::Step{i, e.v, e.tau_v, e.u, e.tau_u};
    steps.push_back(s);
    cur = bidi::Incidence{s.to, -s.arrive};
  }
  return bidi::BWalk(std::move(steps));
}

inline std::vector<std::string> ids(const BidirectedGraph& g, const bidi::EdgeSet& edges) {
  std::vector<std::string> out;
  for (auto e : edges) out.push_back(g.edge(e).id);
  return out;
}

}  // namespace fixtures
