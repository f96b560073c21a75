#pragma once

// Frame matroid of the signed graph underlying a bidirected graph. Circuits
// are positive cycles (i), two negative cycles with exactly one common vertex
// (ii), and two vertex-disjoint negative cycles joined by an elementary chain
// (iii).

#include <cstddef>
#include <optional>
#include <vector>

#include "bidigraph/graph.hpp"

namespace bidi {

enum class CircuitType { i, ii, iii };

const char* to_string(CircuitType t);

struct Circuit {
  EdgeSet edges;
  CircuitType type;

  friend auto operator<=>(const Circuit&, const Circuit&) = default;
};

struct Cycle {
  EdgeSet edges;
  std::vector<VertexId> vertices;  // sorted
  Sign sign = Sign::plus();
};

inline constexpr std::size_t kDefaultCycleCap = 10000;

struct CycleEnumeration {
  std::vector<Cycle> cycles;  // sorted by edge set
  bool truncated = false;
};

/// Elementary cycles, loops and digons included.
CycleEnumeration enumerate_cycles(const BidirectedGraph& g, std::size_t cap = kDefaultCycleCap);

/// Product of edge signatures. Throws InputError unless `c` is an elementary
/// cycle of `g`.
Sign cycle_sign(const BidirectedGraph& g, const EdgeSet& c);

std::optional<CircuitType> classify_circuit(const BidirectedGraph& g, const EdgeSet& f);

struct CircuitEnumeration {
  std::vector<Circuit> circuits;  // sorted by edge set
  bool truncated = false;
};

CircuitEnumeration enumerate_circuits(const BidirectedGraph& g,
                                      std::size_t cap = kDefaultCycleCap);

/// Components whose signed graph is balanced; isolated vertices count.
std::size_t balanced_component_count(const BidirectedGraph& g);
/// |V| - b(G).
std::size_t rank(const BidirectedGraph& g);
/// Rank of the edge subset `f`, as a partial graph on all vertices.
std::size_t rank(const BidirectedGraph& g, const EdgeSet& f);

struct QuasibalanceResult {
  bool quasibalanced = true;
  /// A type ii or iii circuit when not quasibalanced.
  std::optional<Circuit> witness;
};

/// Searches pairs of negative cycles, in sorted order, for one sharing a
/// single vertex or lying disjoint in one component. A disjoint pair is
/// completed to a type iii witness by a shortest connecting chain. Throws
/// CapExceeded when cycle enumeration exceeds `cap`.
QuasibalanceResult check_quasibalance(const BidirectedGraph& g,
                                      std::size_t cap = kDefaultCycleCap);
bool is_quasibalanced(const BidirectedGraph& g, std::size_t cap = kDefaultCycleCap);

/// Every pair of distinct edges lies in a common circuit. Throws CapExceeded
/// when circuit enumeration is truncated.
bool is_matroid_connected(const BidirectedGraph& g, std::size_t cap = kDefaultCycleCap);

struct MatroidReport {
  std::size_t rank = 0;
  std::size_t balanced_components = 0;
  std::vector<Circuit> circuits;
  bool truncated = false;
  bool quasibalanced = true;
  std::optional<bool> connected;  // absent when circuits were truncated
};

MatroidReport matroid_report(const BidirectedGraph& g, std::size_t cap = kDefaultCycleCap);

}  // namespace bidi
