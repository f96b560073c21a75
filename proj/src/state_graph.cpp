#include "bidigraph/state_graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "bidigraph/errors.hpp"

namespace bidi {

StateDigraph::StateDigraph(const BidirectedGraph& g)
    : StateDigraph(g, std::vector<bool>(g.edge_count(), true)) {}

StateDigraph::StateDigraph(const BidirectedGraph& g, const std::vector<bool>& active)
    : vertex_count_(g.vertex_count()), out_(2 * g.vertex_count()) {
  for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
    if (i >= active.size() || !active[i]) continue;
    const Edge& e = g.edge(i);
    arcs_.push_back(Arc{i, true, State{e.u, e.tau_u}, State{e.v, -e.tau_v}});
    arcs_.push_back(Arc{i, false, State{e.v, e.tau_v}, State{e.u, -e.tau_u}});
  }
  for (std::size_t a = 0; a < arcs_.size(); ++a) out_[arcs_[a].from.index()].push_back(a);
}

void StateDigraph::check_vertex(VertexId v) const {
  if (v >= vertex_count_) throw InputError("unknown vertex index " + std::to_string(v));
}

std::vector<VertexId> BWalk::vertices() const {
  std::vector<VertexId> out;
  if (steps_.empty()) return out;
  out.push_back(steps_.front().from);
  for (const Step& s : steps_) out.push_back(s.to);
  return out;
}

BWalk BWalk::reversed() const {
  std::vector<Step> rev;
  rev.reserve(steps_.size());
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    rev.push_back(Step{it->edge, it->to, it->arrive, it->from, it->depart});
  }
  return BWalk(std::move(rev));
}

Sign bwalk_sign(const BWalk& w) { return -(w.alpha() * w.beta()); }

int bwalk_weight(const BWalk& w) { return w.alpha().value() + w.beta().value(); }

Sign chain_signature(const BidirectedGraph& g, const BWalk& w) {
  Sign s = Sign::plus();
  for (const Step& st : w.steps()) s = s * signature(g.edge(st.edge));
  return s;
}

int chain_weight(const BidirectedGraph& g, const BWalk& w) {
  int total = 0;
  for (const Step& st : w.steps()) total += edge_weight(g.edge(st.edge));
  return total;
}

std::vector<bool> reachable_states(const StateDigraph& sd, State s) {
  sd.check_vertex(s.vertex);
  std::vector<bool> seen(sd.node_count(), false);
  std::queue<std::size_t> queue;
  auto expand = [&](State from) {
    for (std::size_t a : sd.out_arcs(from)) {
      std::size_t t = sd.arcs()[a].to.index();
      if (!seen[t]) {
        seen[t] = true;
        queue.push(t);
      }
    }
  };
  expand(s);
  while (!queue.empty()) {
    State cur = State::from_index(queue.front());
    queue.pop();
    expand(cur);
  }
  return seen;
}

bool exists_bwalk(const StateDigraph& sd, Incidence from, Incidence to) {
  sd.check_vertex(to.vertex);
  State target{to.vertex, -to.sign};
  return reachable_states(sd, State{from.vertex, from.sign})[target.index()];
}

namespace {

BWalk walk_from_arcs(const StateDigraph& sd, const std::vector<std::size_t>& arc_path) {
  std::vector<Step> steps;
  steps.reserve(arc_path.size());
  for (std::size_t a : arc_path) steps.push_back(sd.arcs()[a].step());
  return BWalk(std::move(steps));
}

}  // namespace

std::optional<BPath> find_bpath(const StateDigraph& sd, Incidence from, Incidence to) {
  sd.check_vertex(from.vertex);
  sd.check_vertex(to.vertex);
  const State start{from.vertex, from.sign};
  const std::size_t target = State{to.vertex, -to.sign}.index();
  constexpr std::size_t none = static_cast<std::size_t>(-1);

  std::vector<std::size_t> parent_arc(sd.node_count(), none);
  std::vector<bool> seen(sd.node_count(), false);
  seen[start.index()] = true;
  std::queue<std::size_t> queue;
  queue.push(start.index());
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop();
    for (std::size_t a : sd.out_arcs(State::from_index(cur))) {
      std::size_t next = sd.arcs()[a].to.index();
      if (next == target) {
        std::vector<std::size_t> path{a};
        for (std::size_t n = cur; n != start.index(); n = sd.arcs()[parent_arc[n]].from.index()) {
          path.push_back(parent_arc[n]);
        }
        std::reverse(path.begin(), path.end());
        return walk_from_arcs(sd, path);
      }
      if (!seen[next]) {
        seen[next] = true;
        parent_arc[next] = a;
        queue.push(next);
      }
    }
  }
  return std::nullopt;
}

BPathEnumeration enumerate_bpaths(const StateDigraph& sd, Incidence from, Incidence to,
                                  std::size_t cap) {
  sd.check_vertex(from.vertex);
  sd.check_vertex(to.vertex);
  const std::size_t start = State{from.vertex, from.sign}.index();
  const std::size_t target = State{to.vertex, -to.sign}.index();

  std::set<BWalk> found;
  bool truncated = false;
  std::vector<bool> on_path(sd.node_count(), false);
  std::vector<std::size_t> arc_path;

  // Depth-first over simple state paths; the target is never passed through.
  auto dfs = [&](auto&& self, std::size_t cur) -> void {
    for (std::size_t a : sd.out_arcs(State::from_index(cur))) {
      if (truncated) return;
      std::size_t next = sd.arcs()[a].to.index();
      arc_path.push_back(a);
      if (next == target) {
        found.insert(walk_from_arcs(sd, arc_path));
        if (found.size() > cap) truncated = true;
      } else if (!on_path[next]) {
        on_path[next] = true;
        self(self, next);
        on_path[next] = false;
      }
      arc_path.pop_back();
    }
  };
  on_path[start] = true;
  dfs(dfs, start);

  BPathEnumeration out;
  out.paths.assign(found.begin(), found.end());
  if (truncated) out.paths.resize(cap);
  out.truncated = truncated;
  return out;
}

void check_chain(const BidirectedGraph& g, const BWalk& w) {
  const auto& steps = w.steps();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Step& s = steps[i];
    if (s.edge >= g.edge_count()) throw InputError("walk uses an unknown edge");
    const Edge& e = g.edge(s.edge);
    bool fwd = s.from == e.u && s.depart == e.tau_u && s.to == e.v && s.arrive == e.tau_v;
    bool bwd = s.from == e.v && s.depart == e.tau_v && s.to == e.u && s.arrive == e.tau_u;
    if (!fwd && !bwd) {
      throw InputError("step " + std::to_string(i + 1) + " does not match edge '" + e.id + "'");
    }
    if (i > 0 && steps[i - 1].to != s.from) {
      throw InputError("steps " + std::to_string(i) + " and " + std::to_string(i + 1) +
                       " are not consecutive");
    }
  }
}

bool is_bpath(const BidirectedGraph& g, const BWalk& w) {
  check_chain(g, w);
  const auto& steps = w.steps();
  if (steps.empty()) return false;
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    if (steps[i + 1].depart != -steps[i].arrive) return false;
  }
  // s_0 .. s_{k-1} are the departure states, s_k = (x_k, -beta).
  std::vector<State> states;
  for (const Step& s : steps) states.push_back(State{s.from, s.depart});
  states.push_back(State{steps.back().to, -steps.back().arrive});
  const std::size_t k = steps.size();
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      if (i == 0 && j == k) continue;
      if (states[i] == states[j]) return false;
    }
  }
  return true;
}

std::optional<std::vector<State>> topological_order(const StateDigraph& sd) {
  std::vector<std::size_t> indegree(sd.node_count(), 0);
  for (const Arc& a : sd.arcs()) ++indegree[a.to.index()];
  std::queue<std::size_t> ready;
  for (std::size_t n = 0; n < sd.node_count(); ++n) {
    if (indegree[n] == 0) ready.push(n);
  }
  std::vector<State> order;
  while (!ready.empty()) {
    State s = State::from_index(ready.front());
    ready.pop();
    order.push_back(s);
    for (std::size_t a : sd.out_arcs(s)) {
      if (--indegree[sd.arcs()[a].to.index()] == 0) ready.push(sd.arcs()[a].to.index());
    }
  }
  if (order.size() != sd.node_count()) return std::nullopt;
  return order;
}

bool has_bcircuit(const StateDigraph& sd) { return !topological_order(sd).has_value(); }

bool has_bcircuit(const BidirectedGraph& g) { return has_bcircuit(StateDigraph(g)); }

std::optional<BPath> find_bcircuit(const BidirectedGraph& g) {
  StateDigraph sd(g);
  for (std::size_t n = 0; n < sd.node_count(); ++n) {
    State s = State::from_index(n);
    if (auto c = find_bpath(sd, {s.vertex, s.dep}, {s.vertex, -s.dep})) return c;
  }
  return std::nullopt;
}

namespace {

// Is steps[i, j) a closed chain that is a cycle: distinct vertices and edges.
bool is_cycle_span(const std::vector<Step>& steps, std::size_t i, std::size_t j) {
  if (steps[i].from != steps[j - 1].to) return false;
  std::set<VertexId> verts;
  std::set<EdgeIndex> edges;
  for (std::size_t t = i; t < j; ++t) {
    if (!verts.insert(steps[t].from).second) return false;
    if (!edges.insert(steps[t].edge).second) return false;
  }
  return true;
}

}  // namespace

CyclicAnalysis analyze_cyclic_bpath(const BidirectedGraph& g, const BPath& p) {
  if (!is_bpath(g, p)) throw InputError("not a b-path");
  const auto& steps = p.steps();
  const std::size_t k = steps.size();
  CyclicAnalysis out;
  if (is_cycle_span(steps, 0, k)) {
    out.kind = CyclicKind::purely_cyclic;
    out.cycle = std::pair{std::size_t{0}, k};
    out.cycle_vertex = steps.front().from;
    return out;
  }

  std::vector<std::pair<std::size_t, std::size_t>> cycles;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j <= k; ++j) {
      if (i == 0 && j == k) continue;
      if (is_cycle_span(steps, i, j)) cycles.emplace_back(i, j);
    }
  }
  if (cycles.size() != 1) return out;
  auto [i, j] = cycles.front();
  Sign cycle_sign = Sign::plus();
  for (std::size_t t = i; t < j; ++t) cycle_sign = cycle_sign * signature(g.edge(steps[t].edge));
  if (cycle_sign.is_plus()) return out;

  out.cycle = cycles.front();
  out.cycle_vertex = steps[i].from;
  if (i == 0 || j == k) {
    out.kind = CyclicKind::type_a;
    return out;
  }
  std::set<EdgeIndex> head;
  for (std::size_t t = 0; t < i; ++t) head.insert(steps[t].edge);
  bool shared = false;
  for (std::size_t t = j; t < k; ++t) shared = shared || head.contains(steps[t].edge);
  if (shared) {
    out.kind = CyclicKind::type_c;
  } else {
    out.kind = steps.front().from == steps.back().to ? CyclicKind::type_a : CyclicKind::type_b;
  }
  return out;
}

CyclicKind classify_cyclic_bpath(const BidirectedGraph& g, const BPath& p) {
  return analyze_cyclic_bpath(g, p).kind;
}

const char* to_string(CyclicKind k) {
  switch (k) {
    case CyclicKind::not_cyclic: return "not_cyclic";
    case CyclicKind::purely_cyclic: return "purely_cyclic";
    case CyclicKind::type_a: return "type_a";
    case CyclicKind::type_b: return "type_b";
    case CyclicKind::type_c: return "type_c";
  }
  return "?";
}

std::string format_walk(const BidirectedGraph& g, const BWalk& w) {
  if (w.empty()) return "";
  std::string out = format_incidence(g, w.start());
  const auto& steps = w.steps();
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) out += " " + g.vertex_name(steps[i].to);
  out += " " + format_incidence(g, w.end());
  return out;
}

std::string format_walk_edges(const BidirectedGraph& g, const BWalk& w) {
  std::string out;
  for (const Step& s : w.steps()) {
    if (!out.empty()) out += ",";
    out += g.edge(s.edge).id;
  }
  return out;
}

}  // namespace bidi
