#include "bidigraph/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bidigraph/errors.hpp"
#include "bidigraph/reduction.hpp"

namespace bidi::oracle {

namespace {

bool steps_form_chain(const BidirectedGraph& g, const std::vector<Step>& steps) {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Step& s = steps[i];
    if (s.edge >= g.edge_count()) return false;
    const Edge& e = g.edge(s.edge);
    bool forward = s.from == e.u && s.depart == e.tau_u && s.to == e.v && s.arrive == e.tau_v;
    bool backward = s.from == e.v && s.depart == e.tau_v && s.to == e.u && s.arrive == e.tau_u;
    if (!forward && !backward) return false;
    if (i > 0 && steps[i - 1].to != s.from) return false;
  }
  return true;
}

std::string describe(const BidirectedGraph& g) {
  std::ostringstream os;
  os << "v";
  for (const auto& name : g.vertex_names()) os << ' ' << name;
  for (const Edge& e : g.edges()) {
    os << "; e " << e.id << ' ' << format_incidence(g, {e.u, e.tau_u}) << ' '
       << format_incidence(g, {e.v, e.tau_v});
  }
  return os.str();
}

std::vector<Incidence> all_incidences(const BidirectedGraph& g) {
  std::vector<Incidence> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out.push_back({v, Sign::minus()});
    out.push_back({v, Sign::plus()});
  }
  return out;
}

}  // namespace

void check_guards(const BidirectedGraph& g, const OracleConfig& config) {
  if (g.vertex_count() > config.max_vertices || g.edge_count() > config.max_edges) {
    throw CapExceeded("oracle guard: graph has " + std::to_string(g.vertex_count()) +
                      " vertices and " + std::to_string(g.edge_count()) +
                      " edges; limits are " + std::to_string(config.max_vertices) + " and " +
                      std::to_string(config.max_edges));
  }
}

bool satisfies_bpath_conditions(const BidirectedGraph& g, const BWalk& chain) {
  const auto& steps = chain.steps();
  if (steps.empty() || !steps_form_chain(g, steps)) return false;
  const std::size_t k = steps.size();
  for (std::size_t i = 1; i < k; ++i) {
    if (steps[i].depart != -steps[i - 1].arrive) return false;
  }
  // x_i^{alpha_i} for i = 0..k, with alpha_k = -beta_k.
  std::vector<std::pair<VertexId, Sign>> marks;
  for (const Step& s : steps) marks.emplace_back(s.from, s.depart);
  marks.emplace_back(steps.back().to, -steps.back().arrive);
  for (std::size_t i = 0; i <= k; ++i) {
    for (std::size_t j = i + 1; j <= k; ++j) {
      if (i == 0 && j == k) continue;
      if (marks[i] == marks[j]) return false;
    }
  }
  return true;
}

bool is_minimal_bwalk(const BidirectedGraph& g, const BWalk& w) {
  const auto& steps = w.steps();
  const std::size_t k = steps.size();
  if (!steps_form_chain(g, steps)) throw InputError("is_minimal_bwalk: not a chain of g");
  if (k >= 8 * sizeof(unsigned long long) - 1) {
    throw CapExceeded("is_minimal_bwalk: chain too long");
  }
  const Incidence start = w.start();
  const Incidence end = w.end();
  const unsigned long long full = (1ULL << k) - 1;
  for (unsigned long long mask = 1; mask < full; ++mask) {
    VertexId cur = start.vertex;
    Sign need = start.sign;
    bool ok = true;
    std::optional<Step> last;
    for (std::size_t i = 0; i < k && ok; ++i) {
      if (!(mask & (1ULL << i))) continue;
      const Step& step = steps[i];
      if (step.from != cur || step.depart != need) {
        ok = false;
        break;
      }
      cur = step.to;
      need = -step.arrive;
      last = step;
    }
    if (ok && last && last->to == end.vertex && last->arrive == end.sign) return false;
  }
  return true;
}

std::map<Incidence, std::vector<BWalk>> brute_bpaths_from(const BidirectedGraph& g,
                                                          Incidence from,
                                                          const OracleConfig& config) {
  check_guards(g, config);
  g.check_vertex(from.vertex);
  const std::size_t max_len = config.max_chain_length.value_or(2 * g.vertex_count());

  std::map<Incidence, std::set<BWalk>> found;
  std::vector<Step> chain;
  // marks[j] = x_j^{alpha_j}; a chain whose newest mark repeats an earlier
  // one (other than the first) fails (b) and so does every extension.
  std::vector<std::pair<VertexId, Sign>> marks{{from.vertex, from.sign}};

  auto grow = [&](auto&& self, VertexId cur, Sign depart) -> void {
    if (chain.size() >= max_len) return;
    for (EdgeIndex e : g.incident_edges(cur)) {
      const Edge& edge = g.edge(e);
      // Both orientations, so loops with unequal signs are tried both ways.
      std::vector<Step> options;
      if (edge.u == cur && edge.tau_u == depart) {
        options.push_back(Step{e, edge.u, edge.tau_u, edge.v, edge.tau_v});
      }
      if (edge.v == cur && edge.tau_v == depart) {
        Step back{e, edge.v, edge.tau_v, edge.u, edge.tau_u};
        if (options.empty() || !(options.front() == back)) options.push_back(back);
      }
      for (const Step& step : options) {
        std::pair<VertexId, Sign> mark{step.to, -step.arrive};
        bool repeats_inner =
            std::find(marks.begin() + 1, marks.end(), mark) != marks.end();
        if (repeats_inner) continue;
        chain.push_back(step);
        BWalk walk(chain);
        if (satisfies_bpath_conditions(g, walk)) {
          found[Incidence{step.to, step.arrive}].insert(walk);
        }
        if (mark != marks.front()) {
          marks.push_back(mark);
          self(self, step.to, -step.arrive);
          marks.pop_back();
        }
        chain.pop_back();
      }
    }
  };
  grow(grow, from.vertex, from.sign);

  std::map<Incidence, std::vector<BWalk>> out;
  for (auto& [end, walks] : found) out[end].assign(walks.begin(), walks.end());
  return out;
}

std::vector<BWalk> brute_bpaths(const BidirectedGraph& g, Incidence from, Incidence to,
                                const OracleConfig& config) {
  g.check_vertex(to.vertex);
  auto all = brute_bpaths_from(g, from, config);
  auto it = all.find(to);
  return it == all.end() ? std::vector<BWalk>{} : it->second;
}

KeySet brute_closure(const BidirectedGraph& g, const OracleConfig& config) {
  KeySet keys;
  for (Incidence start : all_incidences(g)) {
    for (const auto& [end, walks] : brute_bpaths_from(g, start, config)) {
      if (!walks.empty()) keys.insert(SignedEdgeKey(start, end));
    }
  }
  return keys;
}

std::set<EdgeSet> brute_reductions(const BidirectedGraph& g, const OracleConfig& config) {
  check_guards(g, config);
  const std::size_t m = g.edge_count();
  const KeySet target = edge_keys(g);

  std::map<std::vector<bool>, bool> memo;
  auto generates = [&](const std::vector<bool>& mask) {
    auto [it, inserted] = memo.try_emplace(mask, false);
    if (inserted) {
      it->second = std::ranges::includes(brute_closure(g.partial(mask), config), target);
    }
    return it->second;
  };

  // An edge not generated by the others belongs to every generating set.
  std::vector<bool> essential(m, false);
  std::vector<EdgeIndex> optional_edges;
  for (EdgeIndex e = 0; e < m; ++e) {
    std::vector<bool> others(m, true);
    others[e] = false;
    KeySet rest = brute_closure(g.partial(others), config);
    essential[e] = !rest.contains(g.edge(e).key());
    if (!essential[e]) optional_edges.push_back(e);
  }

  std::set<EdgeSet> out;
  const std::size_t r = optional_edges.size();
  for (unsigned long long pick = 0; pick < (1ULL << r); ++pick) {
    std::vector<bool> mask = essential;
    for (std::size_t b = 0; b < r; ++b) {
      if (pick & (1ULL << b)) mask[optional_edges[b]] = true;
    }
    if (!generates(mask)) continue;
    bool minimal = true;
    for (std::size_t b = 0; b < r && minimal; ++b) {
      if (!(pick & (1ULL << b))) continue;
      std::vector<bool> smaller = mask;
      smaller[optional_edges[b]] = false;
      minimal = !generates(smaller);
    }
    if (!minimal) continue;
    EdgeSet h;
    for (EdgeIndex e = 0; e < m; ++e) {
      if (mask[e]) h.push_back(e);
    }
    out.insert(std::move(h));
  }
  return out;
}

bool is_independent(const BidirectedGraph& g, const EdgeSet& f) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  std::vector<int> parity(n, 0);  // relative to parent: 1 means opposite sign
  std::vector<bool> has_cycle(n, false);

  auto find = [&](VertexId v) {
    int p = 0;
    while (parent[v] != v) {
      p ^= parity[v];
      v = parent[v];
    }
    return std::pair{v, p};
  };

  for (EdgeIndex e : f) {
    const Edge& edge = g.edge(e);
    const int rel = signature(edge).is_minus() ? 1 : 0;
    auto [ru, pu] = find(edge.u);
    auto [rv, pv] = find(edge.v);
    if (ru != rv) {
      if (has_cycle[ru] && has_cycle[rv]) return false;
      parent[ru] = rv;
      parity[ru] = pu ^ pv ^ rel;
      has_cycle[rv] = has_cycle[rv] || has_cycle[ru];
      continue;
    }
    // Closing a cycle: consistent parity means a positive cycle.
    if ((pu ^ pv) == rel || has_cycle[ru]) return false;
    has_cycle[ru] = true;
  }
  return true;
}

std::vector<BruteCircuit> brute_circuits(const BidirectedGraph& g, const OracleConfig& config) {
  check_guards(g, config);
  const std::size_t m = g.edge_count();
  auto to_set = [&](unsigned long long mask) {
    EdgeSet s;
    for (EdgeIndex e = 0; e < m; ++e) {
      if (mask & (1ULL << e)) s.push_back(e);
    }
    return s;
  };

  std::vector<bool> independent(1ULL << m, false);
  for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
    independent[mask] = is_independent(g, to_set(mask));
  }
  std::vector<BruteCircuit> out;
  for (unsigned long long mask = 1; mask < (1ULL << m); ++mask) {
    if (independent[mask]) continue;
    bool minimal = true;
    for (EdgeIndex e = 0; e < m && minimal; ++e) {
      if (mask & (1ULL << e)) minimal = independent[mask & ~(1ULL << e)];
    }
    if (!minimal) continue;
    EdgeSet s = to_set(mask);
    auto type = classify_circuit(g, s);
    out.push_back(BruteCircuit{std::move(s), type});
  }
  std::ranges::sort(out);
  return out;
}

std::size_t brute_rank(const BidirectedGraph& g) {
  EdgeSet chosen;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    chosen.push_back(e);
    if (!is_independent(g, chosen)) chosen.pop_back();
  }
  return chosen.size();
}

BidirectedGraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& options) {
  std::uniform_int_distribution<std::size_t> vertex_count(options.min_vertices,
                                                          options.max_vertices);
  const std::size_t n = vertex_count(rng);
  std::uniform_int_distribution<std::size_t> edge_count(0, options.max_edges);
  const std::size_t m = edge_count(rng);
  std::uniform_int_distribution<VertexId> endpoint(0, n - 1);
  std::bernoulli_distribution coin(0.5);

  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));

  std::vector<Edge> edges;
  KeySet used;
  constexpr int kAttempts = 64;
  for (std::size_t i = 0; i < m; ++i) {
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
      VertexId u = endpoint(rng);
      VertexId v = endpoint(rng);
      Sign su = coin(rng) ? Sign::plus() : Sign::minus();
      Sign sv = coin(rng) ? Sign::plus() : Sign::minus();
      Edge e{"e" + std::to_string(edges.size()), u, su, v, sv};
      if (options.distinct_keys && !used.insert(e.key()).second) continue;
      edges.push_back(std::move(e));
      break;
    }
  }
  return BidirectedGraph(std::move(names), std::move(edges));
}

std::vector<BidirectedGraph> exhaustive_family(std::size_t max_vertices, std::size_t max_edges) {
  std::vector<BidirectedGraph> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<Incidence> ends;
    for (VertexId v = 0; v < n; ++v) {
      ends.push_back({v, Sign::minus()});
      ends.push_back({v, Sign::plus()});
    }
    std::vector<std::pair<Incidence, Incidence>> types;
    for (std::size_t a = 0; a < ends.size(); ++a) {
      for (std::size_t b = a; b < ends.size(); ++b) types.emplace_back(ends[a], ends[b]);
    }

    std::vector<std::size_t> pick;
    auto emit = [&] {
      std::vector<Edge> edges;
      for (std::size_t t : pick) {
        auto [a, b] = types[t];
        edges.push_back(Edge{"e" + std::to_string(edges.size()), a.vertex, a.sign, b.vertex,
                             b.sign});
      }
      out.emplace_back(names, std::move(edges));
    };
    auto extend = [&](auto&& self, std::size_t min_type) -> void {
      emit();
      if (pick.size() == max_edges) return;
      for (std::size_t t = min_type; t < types.size(); ++t) {
        pick.push_back(t);
        self(self, t);
        pick.pop_back();
      }
    };
    extend(extend, 0);
  }
  return out;
}

void compare_with_engine(const BidirectedGraph& g, OracleReport& report) {
  ++report.graphs;
  auto disagree = [&](std::string what) {
    report.disagreements.push_back(Disagreement{std::move(what), describe(g)});
  };
  constexpr std::size_t kNoCap = 1'000'000;

  const StateDigraph sd(g);
  for (Incidence from : all_incidences(g)) {
    auto brute = brute_bpaths_from(g, from);
    for (Incidence to : all_incidences(g)) {
      auto engine = enumerate_bpaths(sd, from, to, kNoCap);
      auto it = brute.find(to);
      const std::vector<BWalk> expected = it == brute.end() ? std::vector<BWalk>{} : it->second;
      if (engine.truncated || engine.paths != expected) {
        disagree("b-paths " + format_incidence(g, from) + " -> " + format_incidence(g, to));
      }
    }
  }

  if (closure_keys(g) != brute_closure(g)) disagree("closure keys");

  auto engine_reductions = all_reductions(g, kNoCap);
  std::set<EdgeSet> engine_set(engine_reductions.reductions.begin(),
                               engine_reductions.reductions.end());
  if (engine_reductions.truncated || engine_set != brute_reductions(g)) disagree("reductions");

  auto engine_circuits = enumerate_circuits(g, kNoCap);
  std::vector<BruteCircuit> engine_tagged;
  for (const Circuit& c : engine_circuits.circuits) engine_tagged.push_back({c.edges, c.type});
  if (engine_circuits.truncated || engine_tagged != brute_circuits(g)) disagree("circuits");

  if (rank(g) != brute_rank(g)) disagree("rank");
}

OracleReport run_oracle_check(std::uint64_t seed, std::size_t cases, bool include_exhaustive) {
  OracleReport report;
  if (include_exhaustive) {
    for (const BidirectedGraph& g : exhaustive_family()) compare_with_engine(g, report);
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < cases; ++i) compare_with_engine(random_graph(rng), report);
  return report;
}

}  // namespace bidi::oracle
