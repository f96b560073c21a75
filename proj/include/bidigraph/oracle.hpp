#pragma once

// Brute-force reference implementations for small graphs. Nothing here uses
// the state digraph: chains are grown edge by edge over the raw incidences
// and checked against the definitions directly.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bidigraph/closure.hpp"
#include "bidigraph/graph.hpp"
#include "bidigraph/matroid.hpp"
#include "bidigraph/state_graph.hpp"

namespace bidi::oracle {

struct OracleConfig {
  /// Defaults to 2|V|, enough for any chain that can still be a b-path.
  std::optional<std::size_t> max_chain_length;
  std::size_t max_vertices = 8;
  std::size_t max_edges = 12;
};

/// Throws CapExceeded when `g` is outside the configured guards.
void check_guards(const BidirectedGraph& g, const OracleConfig& config);

/// Conditions (a) and (b) on a chain: cancelling signs at interior vertices
/// and no repeated (vertex, departure sign) pair other than first and last.
bool satisfies_bpath_conditions(const BidirectedGraph& g, const BWalk& chain);

/// True when no proper subsequence of the steps of `w`, each edge traversed
/// as in `w`, is a b-walk with the same end incidences. `w` must be a b-walk.
bool is_minimal_bwalk(const BidirectedGraph& g, const BWalk& w);

/// All b-paths from x^alpha to y^beta, sorted.
std::vector<BWalk> brute_bpaths(const BidirectedGraph& g, Incidence from, Incidence to,
                                const OracleConfig& config = {});

/// All b-paths starting at x^alpha, keyed by their end incidence.
std::map<Incidence, std::vector<BWalk>> brute_bpaths_from(const BidirectedGraph& g,
                                                          Incidence from,
                                                          const OracleConfig& config = {});

KeySet brute_closure(const BidirectedGraph& g, const OracleConfig& config = {});

/// Minimal generating partial graphs, as sorted edge sets.
std::set<EdgeSet> brute_reductions(const BidirectedGraph& g, const OracleConfig& config = {});

/// Independence in the frame matroid: every component of (V, F) has at most
/// one cycle, and that cycle is negative.
bool is_independent(const BidirectedGraph& g, const EdgeSet& f);

struct BruteCircuit {
  EdgeSet edges;
  std::optional<CircuitType> type;  // from classify_circuit

  friend auto operator<=>(const BruteCircuit&, const BruteCircuit&) = default;
};

/// Minimal dependent edge sets, sorted.
std::vector<BruteCircuit> brute_circuits(const BidirectedGraph& g,
                                         const OracleConfig& config = {});

/// Size of a maximal independent set, grown greedily.
std::size_t brute_rank(const BidirectedGraph& g);

struct RandomGraphOptions {
  std::size_t min_vertices = 2;
  std::size_t max_vertices = 8;
  std::size_t max_edges = 12;
  /// Reject edges whose key is already present.
  bool distinct_keys = false;
};

/// Vertex count uniform in [min_vertices, max_vertices], edge count uniform
/// in [0, max_edges], endpoints and half-edge signs uniform (so loops appear
/// with probability 1/|V| per edge). Vertices are "v0".., edges "e0"...
BidirectedGraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& options = {});

/// Every multiset of at most `max_edges` edge types on 1..`max_vertices`
/// vertices, where an edge type is a key {x^a, y^b}.
std::vector<BidirectedGraph> exhaustive_family(std::size_t max_vertices = 3,
                                               std::size_t max_edges = 4);

struct Disagreement {
  std::string what;
  std::string graph;  // serialized as "v ...; e ..." for reproduction
};

struct OracleReport {
  std::size_t graphs = 0;
  std::vector<Disagreement> disagreements;
};

/// Compares engine and oracle on b-path sets, closure keys, reductions,
/// circuits and rank.
void compare_with_engine(const BidirectedGraph& g, OracleReport& report);

/// The exhaustive family followed by `cases` random guarded graphs.
OracleReport run_oracle_check(std::uint64_t seed, std::size_t cases,
                              bool include_exhaustive = true);

}  // namespace bidi::oracle
