#include "bidigraph/matroid.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <map>
#include <set>

#include "bidigraph/errors.hpp"

namespace bidi {

const char* to_string(CircuitType t) {
  switch (t) {
    case CircuitType::i: return "i";
    case CircuitType::ii: return "ii";
    case CircuitType::iii: return "iii";
  }
  return "?";
}

namespace {

Sign product_sign(const BidirectedGraph& g, const EdgeSet& edges) {
  Sign s = Sign::plus();
  for (EdgeIndex e : edges) s = s * signature(g.edge(e));
  return s;
}

std::vector<VertexId> touched_vertices(const BidirectedGraph& g, const EdgeSet& edges) {
  std::set<VertexId> vs;
  for (EdgeIndex e : edges) {
    vs.insert(g.edge(e).u);
    vs.insert(g.edge(e).v);
  }
  return {vs.begin(), vs.end()};
}

EdgeSet sorted_union(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::ranges::set_union(a, b, std::back_inserter(out));
  return out;
}

std::size_t shared_count(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  std::vector<VertexId> common;
  std::ranges::set_intersection(a, b, std::back_inserter(common));
  return common.size();
}

// Elementary cycles among the edges with mask[e] set. Each non-loop cycle is
// rooted at its least vertex and grown through larger vertices only.
CycleEnumeration cycles_in(const BidirectedGraph& g, const std::vector<bool>& mask,
                           std::size_t cap) {
  std::set<EdgeSet> seen;
  CycleEnumeration out;
  auto record = [&](EdgeSet edges) {
    std::ranges::sort(edges);
    if (seen.contains(edges)) return;
    if (seen.size() == cap) {
      out.truncated = true;
      return;
    }
    seen.insert(edges);
  };

  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (mask[e] && g.edge(e).is_loop()) record({e});
  }

  const std::size_t n = g.vertex_count();
  std::vector<bool> on_path(n, false);
  std::vector<bool> used(g.edge_count(), false);
  EdgeSet path;
  for (VertexId s = 0; s < n && !out.truncated; ++s) {
    auto dfs = [&](auto&& self, VertexId cur) -> void {
      for (EdgeIndex e : g.incident_edges(cur)) {
        if (out.truncated) return;
        const Edge& edge = g.edge(e);
        if (!mask[e] || used[e] || edge.is_loop()) continue;
        VertexId w = edge.u == cur ? edge.v : edge.u;
        if (w == s) {
          EdgeSet c = path;
          c.push_back(e);
          record(std::move(c));
        } else if (w > s && !on_path[w]) {
          on_path[w] = true;
          used[e] = true;
          path.push_back(e);
          self(self, w);
          path.pop_back();
          used[e] = false;
          on_path[w] = false;
        }
      }
    };
    on_path[s] = true;
    dfs(dfs, s);
    on_path[s] = false;
  }

  for (const EdgeSet& c : seen) {
    out.cycles.push_back(Cycle{c, touched_vertices(g, c), product_sign(g, c)});
  }
  return out;
}

std::vector<bool> mask_of(const BidirectedGraph& g, const EdgeSet& f) {
  std::vector<bool> mask(g.edge_count(), false);
  for (EdgeIndex e : f) mask.at(e) = true;
  return mask;
}

// Degree of each vertex within `edges`; a loop adds two.
std::map<VertexId, int> degrees(const BidirectedGraph& g, const EdgeSet& edges) {
  std::map<VertexId, int> deg;
  for (EdgeIndex e : edges) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  return deg;
}

bool is_connected_subset(const BidirectedGraph& g, const EdgeSet& edges) {
  auto vs = touched_vertices(g, edges);
  if (vs.empty()) return true;
  std::map<VertexId, VertexId> parent;
  for (VertexId v : vs) parent[v] = v;
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t groups = vs.size();
  for (EdgeIndex e : edges) {
    VertexId a = find(g.edge(e).u);
    VertexId b = find(g.edge(e).v);
    if (a != b) {
      parent[a] = b;
      --groups;
    }
  }
  return groups == 1;
}

// Is `chain` an elementary chain from a vertex of c1 to a vertex of c2 whose
// interior avoids both cycles?
bool is_connecting_chain(const BidirectedGraph& g, const EdgeSet& chain, const Cycle& c1,
                         const Cycle& c2) {
  if (chain.empty()) return false;
  auto in = [](const std::vector<VertexId>& vs, VertexId v) {
    return std::ranges::binary_search(vs, v);
  };
  int ends_in_c1 = 0;
  int ends_in_c2 = 0;
  for (auto [v, d] : degrees(g, chain)) {
    if (d == 1) {
      ends_in_c1 += in(c1.vertices, v) ? 1 : 0;
      ends_in_c2 += in(c2.vertices, v) ? 1 : 0;
    } else if (d != 2 || in(c1.vertices, v) || in(c2.vertices, v)) {
      return false;
    }
  }
  return ends_in_c1 == 1 && ends_in_c2 == 1 && is_connected_subset(g, chain);
}

bool covers_all_pairs(std::size_t edge_count, const std::vector<Circuit>& circuits) {
  if (edge_count <= 1) return true;
  std::vector<std::vector<bool>> together(edge_count, std::vector<bool>(edge_count, false));
  for (const Circuit& c : circuits) {
    for (EdgeIndex a : c.edges) {
      for (EdgeIndex b : c.edges) together[a][b] = true;
    }
  }
  for (std::size_t a = 0; a < edge_count; ++a) {
    for (std::size_t b = a + 1; b < edge_count; ++b) {
      if (!together[a][b]) return false;
    }
  }
  return true;
}

}  // namespace

CycleEnumeration enumerate_cycles(const BidirectedGraph& g, std::size_t cap) {
  return cycles_in(g, std::vector<bool>(g.edge_count(), true), cap);
}

Sign cycle_sign(const BidirectedGraph& g, const EdgeSet& c) {
  std::set<EdgeIndex> distinct(c.begin(), c.end());
  if (c.empty() || distinct.size() != c.size()) throw InputError("not an elementary cycle");
  for (EdgeIndex e : c) {
    if (e >= g.edge_count()) throw InputError("edge index out of range");
  }
  EdgeSet sorted(distinct.begin(), distinct.end());
  auto deg = degrees(g, sorted);
  bool all_two = std::ranges::all_of(deg, [](const auto& kv) { return kv.second == 2; });
  if (!all_two || deg.size() != sorted.size() || !is_connected_subset(g, sorted)) {
    throw InputError("not an elementary cycle");
  }
  return product_sign(g, sorted);
}

std::optional<CircuitType> classify_circuit(const BidirectedGraph& g, const EdgeSet& f_in) {
  std::set<EdgeIndex> distinct(f_in.begin(), f_in.end());
  for (EdgeIndex e : distinct) {
    if (e >= g.edge_count()) throw InputError("edge index out of range");
  }
  const EdgeSet f(distinct.begin(), distinct.end());
  if (f.empty() || !is_connected_subset(g, f)) return std::nullopt;

  const std::size_t n = touched_vertices(g, f).size();
  const std::size_t m = f.size();
  if (m == n) {
    auto deg = degrees(g, f);
    bool single_cycle = std::ranges::all_of(deg, [](const auto& kv) { return kv.second == 2; });
    if (single_cycle && product_sign(g, f).is_plus()) return CircuitType::i;
    return std::nullopt;
  }
  if (m != n + 1) return std::nullopt;

  auto cycles = cycles_in(g, mask_of(g, f), 3).cycles;
  if (cycles.size() != 2) return std::nullopt;
  const Cycle& c1 = cycles[0];
  const Cycle& c2 = cycles[1];
  if (c1.sign.is_plus() || c2.sign.is_plus()) return std::nullopt;

  const EdgeSet both = sorted_union(c1.edges, c2.edges);
  switch (shared_count(c1.vertices, c2.vertices)) {
    case 1:
      return both == f ? std::optional(CircuitType::ii) : std::nullopt;
    case 0: {
      EdgeSet chain;
      std::ranges::set_difference(f, both, std::back_inserter(chain));
      if (is_connecting_chain(g, chain, c1, c2)) return CircuitType::iii;
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

CircuitEnumeration enumerate_circuits(const BidirectedGraph& g, std::size_t cap) {
  CircuitEnumeration out;
  auto cycles = enumerate_cycles(g, cap);
  out.truncated = cycles.truncated;

  std::map<EdgeSet, CircuitType> found;
  auto record = [&](EdgeSet edges, CircuitType t) {
    if (found.contains(edges)) return;
    if (found.size() == cap) {
      out.truncated = true;
      return;
    }
    found.emplace(std::move(edges), t);
  };

  std::vector<const Cycle*> negative;
  for (const Cycle& c : cycles.cycles) {
    if (c.sign.is_plus()) {
      record(c.edges, CircuitType::i);
    } else {
      negative.push_back(&c);
    }
  }

  std::vector<bool> in_c1(g.vertex_count(), false);
  std::vector<bool> in_c2(g.vertex_count(), false);
  std::vector<bool> visited(g.vertex_count(), false);
  for (std::size_t a = 0; a < negative.size() && !out.truncated; ++a) {
    for (std::size_t b = a + 1; b < negative.size() && !out.truncated; ++b) {
      const Cycle& c1 = *negative[a];
      const Cycle& c2 = *negative[b];
      std::size_t shared = shared_count(c1.vertices, c2.vertices);
      if (shared == 1) {
        record(sorted_union(c1.edges, c2.edges), CircuitType::ii);
        continue;
      }
      if (shared != 0) continue;

      const EdgeSet both = sorted_union(c1.edges, c2.edges);
      for (VertexId v : c1.vertices) in_c1[v] = true;
      for (VertexId v : c2.vertices) in_c2[v] = true;
      EdgeSet chain;
      auto extend = [&](auto&& self, VertexId cur) -> void {
        for (EdgeIndex e : g.incident_edges(cur)) {
          if (out.truncated) return;
          const Edge& edge = g.edge(e);
          if (edge.is_loop()) continue;
          VertexId w = edge.u == cur ? edge.v : edge.u;
          if (in_c1[w] || visited[w]) continue;
          chain.push_back(e);
          if (in_c2[w]) {
            EdgeSet sorted_chain = chain;
            std::ranges::sort(sorted_chain);
            record(sorted_union(both, sorted_chain), CircuitType::iii);
          } else {
            visited[w] = true;
            self(self, w);
            visited[w] = false;
          }
          chain.pop_back();
        }
      };
      for (VertexId v : c1.vertices) extend(extend, v);
      for (VertexId v : c1.vertices) in_c1[v] = false;
      for (VertexId v : c2.vertices) in_c2[v] = false;
    }
  }

  for (auto& [edges, t] : found) out.circuits.push_back(Circuit{edges, t});
  return out;
}

std::size_t balanced_component_count(const BidirectedGraph& g) {
  auto flags = balanced_components(g);
  return static_cast<std::size_t>(std::ranges::count(flags, true));
}

std::size_t rank(const BidirectedGraph& g) {
  return g.vertex_count() - balanced_component_count(g);
}

std::size_t rank(const BidirectedGraph& g, const EdgeSet& f) { return rank(g.partial(f)); }

QuasibalanceResult check_quasibalance(const BidirectedGraph& g, std::size_t cap) {
  auto cycles = enumerate_cycles(g, cap);
  if (cycles.truncated) {
    throw CapExceeded("quasibalance: more than " + std::to_string(cap) + " cycles");
  }
  std::vector<const Cycle*> negative;
  for (const Cycle& c : cycles.cycles) {
    if (c.sign.is_minus()) negative.push_back(&c);
  }
  const auto labels = connected_components(g).first;

  for (std::size_t a = 0; a < negative.size(); ++a) {
    for (std::size_t b = a + 1; b < negative.size(); ++b) {
      const Cycle& c1 = *negative[a];
      const Cycle& c2 = *negative[b];
      std::size_t shared = shared_count(c1.vertices, c2.vertices);
      if (shared == 1) {
        return {false, Circuit{sorted_union(c1.edges, c2.edges), CircuitType::ii}};
      }
      if (shared != 0 || labels[c1.vertices.front()] != labels[c2.vertices.front()]) continue;

      // Shortest connecting chain, multi-source from c1.
      std::vector<bool> in_c2(g.vertex_count(), false);
      for (VertexId v : c2.vertices) in_c2[v] = true;
      std::vector<bool> seen(g.vertex_count(), false);
      std::vector<std::optional<EdgeIndex>> via(g.vertex_count());
      std::deque<VertexId> queue;
      for (VertexId v : c1.vertices) {
        seen[v] = true;
        queue.push_back(v);
      }
      std::optional<VertexId> hit;
      while (!queue.empty() && !hit) {
        VertexId cur = queue.front();
        queue.pop_front();
        for (EdgeIndex e : g.incident_edges(cur)) {
          const Edge& edge = g.edge(e);
          VertexId w = edge.u == cur ? edge.v : edge.u;
          if (seen[w]) continue;
          seen[w] = true;
          via[w] = e;
          if (in_c2[w]) {
            hit = w;
            break;
          }
          queue.push_back(w);
        }
      }
      EdgeSet chain;
      for (VertexId v = *hit; via[v]; ) {
        EdgeIndex e = *via[v];
        chain.push_back(e);
        v = g.edge(e).u == v ? g.edge(e).v : g.edge(e).u;
      }
      std::ranges::sort(chain);
      EdgeSet all = sorted_union(sorted_union(c1.edges, c2.edges), chain);
      return {false, Circuit{std::move(all), CircuitType::iii}};
    }
  }
  return {};
}

bool is_quasibalanced(const BidirectedGraph& g, std::size_t cap) {
  return check_quasibalance(g, cap).quasibalanced;
}

bool is_matroid_connected(const BidirectedGraph& g, std::size_t cap) {
  if (g.edge_count() <= 1) return true;
  auto circuits = enumerate_circuits(g, cap);
  if (circuits.truncated) {
    throw CapExceeded("matroid connectivity: more than " + std::to_string(cap) + " circuits");
  }
  return covers_all_pairs(g.edge_count(), circuits.circuits);
}

MatroidReport matroid_report(const BidirectedGraph& g, std::size_t cap) {
  MatroidReport r;
  r.balanced_components = balanced_component_count(g);
  r.rank = g.vertex_count() - r.balanced_components;
  auto circuits = enumerate_circuits(g, cap);
  r.truncated = circuits.truncated;
  r.circuits = std::move(circuits.circuits);
  r.quasibalanced = is_quasibalanced(g, cap);
  if (!r.truncated) r.connected = covers_all_pairs(g.edge_count(), r.circuits);
  return r;
}

}  // namespace bidi
