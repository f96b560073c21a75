#include "bidigraph/graph.hpp"

#include <algorithm>
#include <queue>

#include "bidigraph/errors.hpp"

namespace bidi {

BidirectedGraph::BidirectedGraph(std::vector<std::string> vertex_names, std::vector<Edge> edges)
    : names_(std::move(vertex_names)), edges_(std::move(edges)) {
  vertex_lookup_.reserve(names_.size());
  for (VertexId v = 0; v < names_.size(); ++v) {
    if (!vertex_lookup_.emplace(names_[v], v).second) {
      throw InputError("duplicate vertex name '" + names_[v] + "'");
    }
  }
  incident_.assign(names_.size(), {});
  edge_lookup_.reserve(edges_.size());
  for (EdgeIndex i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u >= names_.size() || e.v >= names_.size()) {
      throw InputError("edge '" + e.id + "' has an endpoint that is not a vertex");
    }
    if (!edge_lookup_.emplace(e.id, i).second) {
      throw InputError("duplicate edge name '" + e.id + "'");
    }
    incident_[e.u].push_back(i);
    if (!e.is_loop()) incident_[e.v].push_back(i);
  }
}

std::optional<VertexId> BidirectedGraph::find_vertex(std::string_view name) const {
  auto it = vertex_lookup_.find(std::string(name));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

VertexId BidirectedGraph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw InputError("unknown vertex '" + std::string(name) + "'");
}

std::optional<EdgeIndex> BidirectedGraph::find_edge(std::string_view id) const {
  auto it = edge_lookup_.find(std::string(id));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

EdgeIndex BidirectedGraph::edge_index(std::string_view id) const {
  if (auto i = find_edge(id)) return *i;
  throw InputError("unknown edge '" + std::string(id) + "'");
}

void BidirectedGraph::check_vertex(VertexId v) const {
  if (v >= names_.size()) {
    throw InputError("unknown vertex index " + std::to_string(v));
  }
}

BidirectedGraph BidirectedGraph::with_edges(std::vector<Edge> edges) const {
  return BidirectedGraph(names_, std::move(edges));
}

BidirectedGraph BidirectedGraph::partial(const std::vector<bool>& keep) const {
  std::vector<Edge> kept;
  for (EdgeIndex i = 0; i < edges_.size(); ++i) {
    if (i < keep.size() && keep[i]) kept.push_back(edges_[i]);
  }
  return with_edges(std::move(kept));
}

BidirectedGraph BidirectedGraph::partial(std::span<const EdgeIndex> keep) const {
  std::vector<bool> mask(edges_.size(), false);
  for (EdgeIndex i : keep) mask.at(i) = true;
  return partial(mask);
}

BidirectedGraph BidirectedGraph::without_edges(std::span<const EdgeIndex> drop) const {
  std::vector<bool> mask(edges_.size(), true);
  for (EdgeIndex i : drop) mask.at(i) = false;
  return partial(mask);
}

bool BidirectedGraph::has_partial_graph(const BidirectedGraph& sub) const {
  if (sub.names_ != names_) return false;
  for (const Edge& e : sub.edges_) {
    auto i = find_edge(e.id);
    if (!i || !(edges_[*i] == e)) return false;
  }
  return true;
}

std::vector<EdgeIndex> BidirectedGraph::embed(const BidirectedGraph& sub) const {
  if (!has_partial_graph(sub)) {
    throw InputError("graph is not a partial graph of the host graph");
  }
  std::vector<EdgeIndex> out;
  out.reserve(sub.edge_count());
  for (const Edge& e : sub.edges_) out.push_back(*find_edge(e.id));
  return out;
}

GraphBuilder& GraphBuilder::vertex(std::string name) {
  if (lookup_.contains(name)) throw InputError("duplicate vertex name '" + name + "'");
  lookup_.emplace(name, names_.size());
  names_.push_back(std::move(name));
  return *this;
}

GraphBuilder& GraphBuilder::edge(std::string id, std::string_view u, Sign tau_u,
                                 std::string_view v, Sign tau_v) {
  auto find = [&](std::string_view n) {
    auto it = lookup_.find(std::string(n));
    if (it == lookup_.end()) {
      throw InputError("edge '" + id + "' uses undeclared vertex '" + std::string(n) + "'");
    }
    return it->second;
  };
  edges_.push_back(Edge{std::move(id), find(u), tau_u, find(v), tau_v});
  return *this;
}

GraphBuilder& GraphBuilder::edge(std::string id, std::string_view u, char tau_u,
                                 std::string_view v, char tau_v) {
  auto su = Sign::from_char(tau_u);
  auto sv = Sign::from_char(tau_v);
  if (!su || !sv) throw InputError("bad sign token on edge '" + id + "'");
  return edge(std::move(id), u, *su, v, *sv);
}

BidirectedGraph GraphBuilder::build() const { return BidirectedGraph(names_, edges_); }

Sign signature(const Edge& e) { return -(e.tau_u * e.tau_v); }

int edge_weight(const Edge& e) { return e.tau_u.value() + e.tau_v.value(); }

int vertex_weight(const BidirectedGraph& g, VertexId x) {
  g.check_vertex(x);
  int w = 0;
  for (EdgeIndex i : g.incident_edges(x)) {
    const Edge& e = g.edge(i);
    if (e.u == x) w += e.tau_u.value();
    if (e.v == x) w += e.tau_v.value();
  }
  return w;
}

SourcesAndSinks sources_and_sinks(const BidirectedGraph& g) {
  SourcesAndSinks out;
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    bool any_plus = false;
    bool any_minus = false;
    for (EdgeIndex i : g.incident_edges(x)) {
      const Edge& e = g.edge(i);
      for (auto [end, s] : {std::pair{e.u, e.tau_u}, std::pair{e.v, e.tau_v}}) {
        if (end != x) continue;
        (s.is_plus() ? any_plus : any_minus) = true;
      }
    }
    if (!any_minus) out.sources.push_back(x);
    if (!any_plus) out.sinks.push_back(x);
  }
  return out;
}

BidirectedGraph switch_vertices(const BidirectedGraph& g, std::span<const VertexId> x) {
  std::vector<bool> in_x(g.vertex_count(), false);
  for (VertexId v : x) {
    g.check_vertex(v);
    in_x[v] = true;
  }
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) {
    if (in_x[e.u]) e.tau_u = -e.tau_u;
    if (in_x[e.v]) e.tau_v = -e.tau_v;
  }
  return g.with_edges(std::move(edges));
}

bool is_all_positive(const BidirectedGraph& g) {
  return std::ranges::all_of(g.edges(), [](const Edge& e) { return signature(e).is_plus(); });
}

bool is_all_negative(const BidirectedGraph& g) {
  return std::ranges::all_of(g.edges(), [](const Edge& e) { return signature(e).is_minus(); });
}

std::pair<std::vector<std::size_t>, std::size_t> connected_components(const BidirectedGraph& g) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(g.vertex_count(), unset);
  std::size_t count = 0;
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (label[root] != unset) continue;
    std::vector<VertexId> stack{root};
    label[root] = count;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (EdgeIndex i : g.incident_edges(x)) {
        const Edge& e = g.edge(i);
        VertexId y = e.u == x ? e.v : e.u;
        if (label[y] == unset) {
          label[y] = count;
          stack.push_back(y);
        }
      }
    }
    ++count;
  }
  return {std::move(label), count};
}

namespace {

// Breadth-first switching function per component. `state[v]` is +1/-1 once
// assigned. Returns per-component balance.
std::vector<bool> propagate_switching(const BidirectedGraph& g, std::vector<int>& state) {
  state.assign(g.vertex_count(), 0);
  std::vector<bool> balanced;
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (state[root] != 0) continue;
    bool ok = true;
    state[root] = 1;
    std::queue<VertexId> queue;
    queue.push(root);
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop();
      for (EdgeIndex i : g.incident_edges(x)) {
        const Edge& e = g.edge(i);
        int sigma = signature(e).value();
        if (e.is_loop()) {
          if (sigma < 0) ok = false;
          continue;
        }
        VertexId y = e.u == x ? e.v : e.u;
        int want = state[x] * sigma;
        if (state[y] == 0) {
          state[y] = want;
          queue.push(y);
        } else if (state[y] != want) {
          ok = false;
        }
      }
    }
    balanced.push_back(ok);
  }
  return balanced;
}

}  // namespace

std::optional<std::vector<VertexId>> balancing_switch_set(const BidirectedGraph& g) {
  std::vector<int> state;
  auto balanced = propagate_switching(g, state);
  if (!std::ranges::all_of(balanced, [](bool b) { return b; })) return std::nullopt;
  std::vector<VertexId> x;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (state[v] < 0) x.push_back(v);
  }
  return x;
}

bool is_balanced(const BidirectedGraph& g) { return balancing_switch_set(g).has_value(); }

std::vector<bool> balanced_components(const BidirectedGraph& g) {
  std::vector<int> state;
  return propagate_switching(g, state);
}

BidirectedGraph negate_signature(const BidirectedGraph& g) {
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) e.tau_v = -e.tau_v;
  return g.with_edges(std::move(edges));
}

bool is_antibalanced(const BidirectedGraph& g) { return is_balanced(negate_signature(g)); }

std::string format_incidence(const BidirectedGraph& g, Incidence i) {
  return g.vertex_name(i.vertex) + i.sign.symbol();
}

std::string format_key(const BidirectedGraph& g, const SignedEdgeKey& k) {
  return format_incidence(g, k.first()) + "," + format_incidence(g, k.second());
}

}  // namespace bidi
