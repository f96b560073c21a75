#include "bidigraph/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "bidigraph/closure.hpp"
#include "bidigraph/errors.hpp"

namespace bidi {

namespace {

std::optional<BPath> implying_path(const BidirectedGraph& g, std::vector<bool> active,
                                   EdgeIndex e) {
  active[e] = false;
  const Edge& edge = g.edge(e);
  return find_bpath(StateDigraph(g, active), {edge.u, edge.tau_u}, {edge.v, edge.tau_v});
}

EdgeSet mask_to_set(const std::vector<bool>& mask) {
  EdgeSet out;
  for (EdgeIndex i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(i);
  }
  return out;
}

}  // namespace

bool is_implied(const BidirectedGraph& g, const std::vector<bool>& active, EdgeIndex e) {
  std::vector<bool> without = active;
  without.at(e) = false;
  const Edge& edge = g.edge(e);
  return exists_bwalk(StateDigraph(g, without), {edge.u, edge.tau_u}, {edge.v, edge.tau_v});
}

ReductionResult transitive_reduction(const BidirectedGraph& g,
                                     const std::optional<std::vector<EdgeIndex>>& ordering) {
  std::vector<EdgeIndex> order(g.edge_count());
  std::iota(order.begin(), order.end(), EdgeIndex{0});
  if (ordering) {
    std::vector<EdgeIndex> sorted = *ordering;
    std::ranges::sort(sorted);
    if (sorted != order) throw InputError("ordering is not a permutation of the edges");
    order = *ordering;
  }

  ReductionResult out;
  std::vector<bool> active(g.edge_count(), true);
  for (EdgeIndex e : order) {
    if (auto path = implying_path(g, active, e)) {
      active[e] = false;
      out.removed.push_back(RemovedEdge{e, std::move(*path)});
    }
  }
  out.graph = g.partial(active);
  out.ordering = std::move(order);
  out.kept = mask_to_set(active);
  return out;
}

std::vector<EdgeIndex> ordering_from_ids(const BidirectedGraph& g,
                                         const std::vector<std::string>& ids) {
  std::vector<EdgeIndex> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(g.edge_index(id));
  return out;
}

bool is_transitive_reduction(const BidirectedGraph& g, const BidirectedGraph& h) {
  std::vector<bool> active(g.edge_count(), false);
  for (EdgeIndex i : g.embed(h)) active[i] = true;

  const KeySet needed = edge_keys(g);
  if (!std::ranges::includes(closure_keys(g, active), needed)) return false;
  for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
    if (!active[i]) continue;
    active[i] = false;
    bool still_generates = std::ranges::includes(closure_keys(g, active), needed);
    active[i] = true;
    if (still_generates) return false;
  }
  return true;
}

ReductionEnumeration all_reductions(const BidirectedGraph& g, std::optional<std::size_t> cap) {
  if (!cap && g.edge_count() > kExhaustiveEdgeBound) {
    throw CapExceeded("all_reductions: " + std::to_string(g.edge_count()) +
                      " edges exceeds the exhaustive bound of " +
                      std::to_string(kExhaustiveEdgeBound) + "; pass a cap");
  }

  // A removal is legal whenever the edge is implied by the rest; every
  // ordering's elimination is a sequence of legal removals and every
  // minimal generating partial graph is reached this way.
  ReductionEnumeration out;
  std::set<EdgeSet> found;
  std::unordered_set<std::vector<bool>> visited;

  auto explore = [&](auto&& self, std::vector<bool>& active) -> void {
    if (out.truncated || !visited.insert(active).second) return;
    ++out.states_explored;
    bool leaf = true;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      if (!active[e] || !is_implied(g, active, e)) continue;
      leaf = false;
      active[e] = false;
      self(self, active);
      active[e] = true;
      if (out.truncated) return;
    }
    if (leaf) {
      found.insert(mask_to_set(active));
      if (cap && found.size() > *cap) out.truncated = true;
    }
  };
  std::vector<bool> all(g.edge_count(), true);
  explore(explore, all);

  out.reductions.assign(found.begin(), found.end());
  if (cap && out.reductions.size() > *cap) out.reductions.resize(*cap);
  return out;
}

EdgeSet redundant_edges(const BidirectedGraph& g) {
  if (has_bcircuit(g)) {
    throw PreconditionError("reduction not unique; use transitive_reduction with an ordering");
  }
  if (edge_keys(g).size() != g.edge_count()) {
    throw PreconditionError(
        "reduction not unique (parallel edges share a key); use transitive_reduction with an "
        "ordering");
  }
  const std::vector<bool> all(g.edge_count(), true);
  EdgeSet out;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (is_implied(g, all, e)) out.push_back(e);
  }
  return out;
}

std::optional<SourceSinkProfile> no_long_bpath_profile(const BidirectedGraph& g) {
  for (const Edge& e : g.edges()) {
    if (e.is_loop() && signature(e).is_plus()) return std::nullopt;
  }
  StateDigraph sd(g);
  std::vector<bool> has_in(sd.node_count(), false);
  std::vector<bool> has_out(sd.node_count(), false);
  for (const Arc& a : sd.arcs()) {
    has_out[a.from.index()] = true;
    has_in[a.to.index()] = true;
  }
  for (std::size_t n = 0; n < sd.node_count(); ++n) {
    if (has_in[n] && has_out[n]) return std::nullopt;
  }

  SourceSinkProfile p;
  auto split = sources_and_sinks(g);
  p.sources = std::move(split.sources);
  p.sinks = std::move(split.sinks);
  p.antibalanced = is_antibalanced(g);
  std::vector<bool> is_source(g.vertex_count(), false);
  for (VertexId v : p.sources) is_source[v] = true;
  p.cross_edges_positive = true;
  p.within_edges_negative = true;
  for (const Edge& e : g.edges()) {
    bool cross = is_source[e.u] != is_source[e.v];
    if (cross && signature(e).is_minus()) p.cross_edges_positive = false;
    if (!cross && signature(e).is_plus()) p.within_edges_negative = false;
  }
  return p;
}

}  // namespace bidi
