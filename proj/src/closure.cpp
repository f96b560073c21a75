#include "bidigraph/closure.hpp"

#include <algorithm>

#include "bidigraph/errors.hpp"

namespace bidi {

KeySet edge_keys(const BidirectedGraph& g) {
  KeySet keys;
  for (const Edge& e : g.edges()) keys.insert(e.key());
  return keys;
}

namespace {

KeySet keys_from(const StateDigraph& sd) {
  KeySet keys;
  for (std::size_t n = 0; n < sd.node_count(); ++n) {
    State s = State::from_index(n);
    auto reach = reachable_states(sd, s);
    for (std::size_t r = 0; r < reach.size(); ++r) {
      if (!reach[r]) continue;
      State t = State::from_index(r);
      keys.insert(SignedEdgeKey({s.vertex, s.dep}, {t.vertex, -t.dep}));
    }
  }
  return keys;
}

}  // namespace

KeySet closure_keys(const BidirectedGraph& g) { return keys_from(StateDigraph(g)); }

KeySet closure_keys(const BidirectedGraph& g, const std::vector<bool>& active) {
  return keys_from(StateDigraph(g, active));
}

std::string closure_edge_id(const BidirectedGraph& g, const SignedEdgeKey& k) {
  return "ft:" + format_key(g, k);
}

ClosureResult transitive_closure(const BidirectedGraph& g) {
  StateDigraph sd(g);
  const KeySet existing = edge_keys(g);
  ClosureResult out;
  std::vector<Edge> edges = g.edges();
  for (const SignedEdgeKey& k : keys_from(sd)) {
    if (existing.contains(k)) continue;
    auto path = find_bpath(sd, k.first(), k.second());
    // Each key came from reachability, so a b-path exists.
    out.witness.emplace(k, std::move(*path));
    out.added.push_back(k);

    std::string id = closure_edge_id(g, k);
    while (g.find_edge(id)) id += "~";
    edges.push_back(Edge{std::move(id), k.first().vertex, k.first().sign, k.second().vertex,
                         k.second().sign});
  }
  out.graph = g.with_edges(std::move(edges));
  return out;
}

bool is_transitive(const BidirectedGraph& g) {
  return std::ranges::includes(edge_keys(g), closure_keys(g));
}

BidirectedGraph relative_closure(const BidirectedGraph& g, const BidirectedGraph& h) {
  if (!g.has_partial_graph(h)) throw InputError("H is not a partial graph of G");
  const KeySet generated = closure_keys(h);
  std::vector<bool> keep(g.edge_count(), false);
  for (EdgeIndex i = 0; i < g.edge_count(); ++i) keep[i] = generated.contains(g.edge(i).key());
  for (EdgeIndex i : g.embed(h)) keep[i] = true;
  return g.partial(keep);
}

KeySet switch_keys(const KeySet& keys, std::span<const VertexId> x) {
  std::set<VertexId> flip(x.begin(), x.end());
  KeySet out;
  for (const SignedEdgeKey& k : keys) {
    out.insert(k.switched([&](VertexId v) { return flip.contains(v); }));
  }
  return out;
}

}  // namespace bidi
