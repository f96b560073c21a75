#include "bidigraph/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "bidigraph/bdg_io.hpp"
#include "bidigraph/closure.hpp"
#include "bidigraph/errors.hpp"
#include "bidigraph/graph.hpp"
#include "bidigraph/matroid.hpp"
#include "bidigraph/oracle.hpp"
#include "bidigraph/reduction.hpp"
#include "bidigraph/state_graph.hpp"

namespace bidi {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<std::size_t> env_cap() {
  const char* raw = std::getenv("BIDIGRAPH_CAP");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(raw, &used);
    if (used != std::string(raw).size() || v == 0) throw std::invalid_argument(raw);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw UsageError(std::string("BIDIGRAPH_CAP must be a positive integer, got '") + raw + "'");
  }
}

Incidence parse_incidence(const BidirectedGraph& g, const std::string& text) {
  auto colon = text.rfind(':');
  if (colon == std::string::npos || colon + 2 != text.size()) {
    throw UsageError("expected vertex:sign, got '" + text + "'");
  }
  auto sign = Sign::from_char(text.back());
  if (!sign) throw UsageError("bad sign in '" + text + "'");
  return Incidence{g.vertex(text.substr(0, colon)), *sign};
}

std::string names_of(const BidirectedGraph& g, const std::vector<VertexId>& vs) {
  std::string out;
  for (VertexId v : vs) {
    if (!out.empty()) out += ' ';
    out += g.vertex_name(v);
  }
  return out;
}

std::string ids_of(const BidirectedGraph& g, const EdgeSet& edges) {
  std::string out;
  for (EdgeIndex e : edges) {
    if (!out.empty()) out += ',';
    out += g.edge(e).id;
  }
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Transitive closure, reduction and frame-matroid tools for bidirected graphs"};
  app.name("bidigraph");
  app.require_subcommand(1);

  std::string file = "-";
  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, ".bdg input (default: stdin)");
  };

  auto* info = app.add_subcommand("info", "Counts, sources and sinks, sign classes, balance");
  add_file(info);

  bool closure_dot = false;
  bool closure_witnesses = false;
  auto* closure = app.add_subcommand("closure", "Transitive closure");
  add_file(closure);
  closure->add_flag("--dot", closure_dot, "Emit DOT with added edges styled");
  closure->add_flag("--witnesses", closure_witnesses, "Append a witness b-path per added edge");

  std::vector<std::string> reduce_order;
  bool reduce_all = false;
  bool reduce_dot = false;
  auto* reduce = app.add_subcommand("reduce", "Transitive reduction");
  add_file(reduce);
  auto* order_opt = reduce->add_option("--order", reduce_order, "Edge ordering id1,id2,...")
                        ->delimiter(',')->allow_extra_args(false);
  auto* all_opt = reduce->add_flag("--all-orders", reduce_all, "Every distinct reduction");
  auto* dot_opt = reduce->add_flag("--dot", reduce_dot, "Emit DOT with removed edges styled");
  all_opt->excludes(order_opt);
  all_opt->excludes(dot_opt);

  std::string bpath_from;
  std::string bpath_to;
  std::vector<std::string> bpath_exclude;
  auto* bpath = app.add_subcommand("bpath", "A shortest b-path between two incidences");
  add_file(bpath);
  bpath->add_option("--from", bpath_from, "Start as vertex:sign")->required();
  bpath->add_option("--to", bpath_to, "End as vertex:sign")->required();
  bpath->add_option("--exclude", bpath_exclude, "Edge ids to ignore")->delimiter(',')->allow_extra_args(false);

  auto* bcircuit = app.add_subcommand("bcircuit", "Report a b-circuit (exit 1) or none (exit 0)");
  add_file(bcircuit);

  bool balance_switch = false;
  auto* balance = app.add_subcommand("balance", "Balance of the signed graph");
  add_file(balance);
  balance->add_flag("--switch-set", balance_switch, "Print a balancing switching set");

  std::vector<std::string> switch_set;
  auto* sw = app.add_subcommand("switch", "Switch the graph at a vertex set");
  add_file(sw);
  sw->add_option("--set", switch_set, "Vertices v1,v2,...")->delimiter(',')->allow_extra_args(false)->required();

  auto* rank_cmd = app.add_subcommand("rank", "Frame-matroid rank");
  add_file(rank_cmd);

  std::optional<std::size_t> circuits_cap;
  auto* circuits = app.add_subcommand("circuits", "Frame-matroid circuits");
  add_file(circuits);
  circuits->add_option("--cap", circuits_cap, "Maximum number of circuits")
      ->check(CLI::PositiveNumber);

  auto* quasi = app.add_subcommand("quasibalance", "No type ii or iii circuits?");
  add_file(quasi);

  auto* connected = app.add_subcommand("matroid-connected", "Every edge pair in a circuit?");
  add_file(connected);

  std::uint64_t oracle_seed = 1;
  std::size_t oracle_cases = 500;
  bool oracle_skip_exhaustive = false;
  auto* oracle_cmd = app.add_subcommand("oracle-check", "Engine vs brute-force oracle");
  oracle_cmd->add_option("--seed", oracle_seed, "Random seed");
  oracle_cmd->add_option("--cases", oracle_cases, "Random graphs to check");
  oracle_cmd->add_flag("--skip-exhaustive", oracle_skip_exhaustive,
                       "Skip the exhaustive small-graph family");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto load = [&] {
    if (file == "-") return read_bdg(in);
    std::ifstream f(file);
    if (!f) throw InputError("cannot open '" + file + "'");
    return read_bdg(f);
  };

  try {
    const std::optional<std::size_t> cap = env_cap();

    if (*oracle_cmd) {
      auto report = oracle::run_oracle_check(oracle_seed, oracle_cases, !oracle_skip_exhaustive);
      out << "graphs: " << report.graphs << '\n';
      out << "disagreements: " << report.disagreements.size() << '\n';
      for (const auto& d : report.disagreements) out << "# " << d.what << " :: " << d.graph << '\n';
      return report.disagreements.empty() ? kExitOk : kExitNo;
    }

    const BidirectedGraph g = load();

    if (*info) {
      auto ss = sources_and_sinks(g);
      out << "vertices: " << g.vertex_count() << '\n';
      out << "edges: " << g.edge_count() << '\n';
      out << "sources: " << names_of(g, ss.sources) << '\n';
      out << "sinks: " << names_of(g, ss.sinks) << '\n';
      out << "all_positive: " << yes_no(is_all_positive(g)) << '\n';
      out << "all_negative: " << yes_no(is_all_negative(g)) << '\n';
      out << "balanced: " << yes_no(is_balanced(g)) << '\n';
      out << "antibalanced: " << yes_no(is_antibalanced(g)) << '\n';
      return kExitOk;
    }

    if (*closure) {
      auto result = transitive_closure(g);
      if (closure_dot) {
        DotAnnotations ann;
        for (EdgeIndex i = g.edge_count(); i < result.graph.edge_count(); ++i) ann.added.insert(i);
        out << export_dot(result.graph, ann);
      } else {
        out << serialize_bdg(result.graph);
      }
      if (closure_witnesses) {
        for (EdgeIndex i = g.edge_count(); i < result.graph.edge_count(); ++i) {
          const Edge& e = result.graph.edge(i);
          const BPath& w = result.witness.at(e.key());
          out << "# witness " << e.id << ' ' << format_walk(g, w) << " edges "
              << format_walk_edges(g, w) << '\n';
        }
      }
      return kExitOk;
    }

    if (*reduce) {
      if (reduce_all) {
        auto all = all_reductions(g, cap);
        for (std::size_t i = 0; i < all.reductions.size(); ++i) {
          const EdgeSet& kept = all.reductions[i];
          out << "# reduction " << (i + 1) << " of " << all.reductions.size() << ": "
              << kept.size() << " edges\n";
          out << serialize_bdg(g.partial(std::span<const EdgeIndex>(kept)));
        }
        if (all.truncated) {
          err << "warning: stopped after " << all.reductions.size() << " reductions\n";
          return kExitCap;
        }
        return kExitOk;
      }
      std::optional<std::vector<EdgeIndex>> ordering;
      if (!reduce_order.empty()) ordering = ordering_from_ids(g, reduce_order);
      auto result = transitive_reduction(g, ordering);
      if (reduce_dot) {
        DotAnnotations ann;
        for (const auto& r : result.removed) ann.removed.insert(r.edge);
        out << export_dot(g, ann);
        return kExitOk;
      }
      out << serialize_bdg(result.graph);
      for (const auto& r : result.removed) {
        out << "# removed " << g.edge(r.edge).id << " witness " << format_walk(g, r.witness)
            << " edges " << format_walk_edges(g, r.witness) << '\n';
      }
      return kExitOk;
    }

    if (*bpath) {
      Incidence from = parse_incidence(g, bpath_from);
      Incidence to = parse_incidence(g, bpath_to);
      std::vector<bool> active(g.edge_count(), true);
      for (const auto& id : bpath_exclude) active[g.edge_index(id)] = false;
      auto path = find_bpath(StateDigraph(g, active), from, to);
      if (!path) {
        out << "none\n";
        return kExitNo;
      }
      out << format_walk(g, *path) << '\n';
      out << "edges " << format_walk_edges(g, *path) << '\n';
      return kExitOk;
    }

    if (*bcircuit) {
      auto c = find_bcircuit(g);
      if (!c) {
        out << "none\n";
        return kExitOk;
      }
      out << format_walk(g, *c) << '\n';
      out << "edges " << format_walk_edges(g, *c) << '\n';
      return kExitNo;
    }

    if (*balance) {
      auto x = balancing_switch_set(g);
      out << (x ? "balanced" : "unbalanced") << '\n';
      if (x && balance_switch) out << "switch-set: " << names_of(g, *x) << '\n';
      return x ? kExitOk : kExitNo;
    }

    if (*sw) {
      std::vector<VertexId> x;
      for (const auto& name : switch_set) x.push_back(g.vertex(name));
      out << serialize_bdg(switch_vertices(g, x));
      return kExitOk;
    }

    if (*rank_cmd) {
      out << "rank: " << rank(g) << '\n';
      out << "balanced_components: " << balanced_component_count(g) << '\n';
      return kExitOk;
    }

    const std::size_t matroid_cap = circuits_cap.value_or(cap.value_or(kDefaultCycleCap));

    if (*circuits) {
      auto result = enumerate_circuits(g, matroid_cap);
      for (const Circuit& c : result.circuits) {
        out << to_string(c.type) << ' ' << ids_of(g, c.edges) << '\n';
      }
      if (result.truncated) {
        err << "warning: stopped after " << result.circuits.size() << " circuits\n";
        return kExitCap;
      }
      return kExitOk;
    }

    if (*quasi) {
      auto result = check_quasibalance(g, matroid_cap);
      out << yes_no(result.quasibalanced) << '\n';
      if (result.witness) {
        out << "witness " << to_string(result.witness->type) << ' '
            << ids_of(g, result.witness->edges) << '\n';
      }
      return result.quasibalanced ? kExitOk : kExitNo;
    }

    if (*connected) {
      bool c = is_matroid_connected(g, matroid_cap);
      out << yes_no(c) << '\n';
      return c ? kExitOk : kExitNo;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}

}  // namespace bidi
