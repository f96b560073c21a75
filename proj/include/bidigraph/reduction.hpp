#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bidigraph/graph.hpp"
#include "bidigraph/state_graph.hpp"

namespace bidi {

struct RemovedEdge {
  EdgeIndex edge;
  /// b-path in the graph remaining at the time of removal; edge indices
  /// refer to the input graph.
  BPath witness;
};

struct ReductionResult {
  BidirectedGraph graph;
  std::vector<RemovedEdge> removed;
  std::vector<EdgeIndex> ordering;
  EdgeSet kept;
};

/// Ordered elimination: walk the edges in `ordering` (declaration order by
/// default) and drop each edge whose key is implied by a b-path in the
/// current graph without it. Throws InputError unless `ordering` is a
/// permutation of the edge indices.
ReductionResult transitive_reduction(const BidirectedGraph& g,
                                     const std::optional<std::vector<EdgeIndex>>& ordering = {});

/// Maps edge ids to indices, for orderings given by name.
std::vector<EdgeIndex> ordering_from_ids(const BidirectedGraph& g,
                                         const std::vector<std::string>& ids);

/// Is the key of edge `e` implied by a b-path among the `active` edges other
/// than `e` itself?
bool is_implied(const BidirectedGraph& g, const std::vector<bool>& active, EdgeIndex e);

/// True when `h` generates `g` under relative closure and no single edge of
/// `h` can be dropped while keeping that property.
bool is_transitive_reduction(const BidirectedGraph& g, const BidirectedGraph& h);

inline constexpr std::size_t kExhaustiveEdgeBound = 10;

struct ReductionEnumeration {
  std::vector<EdgeSet> reductions;  // sorted
  bool truncated = false;
  std::size_t states_explored = 0;
};

/// Every distinct reduction reachable by some edge ordering, found by
/// removal search over generating partial graphs. Without a cap, graphs with
/// more than kExhaustiveEdgeBound edges are refused with CapExceeded.
ReductionEnumeration all_reductions(const BidirectedGraph& g,
                                    std::optional<std::size_t> cap = std::nullopt);

/// Edges implied by a b-path avoiding themselves. Only defined where the
/// reduction is unique: throws PreconditionError when `g` has a b-circuit or
/// two parallel edges with the same key.
EdgeSet redundant_edges(const BidirectedGraph& g);

struct SourceSinkProfile {
  std::vector<VertexId> sources;
  std::vector<VertexId> sinks;
  bool antibalanced = false;
  bool cross_edges_positive = false;
  bool within_edges_negative = false;
};

/// For graphs with no positive loop and no b-path longer than one edge: the
/// source/sink split and its sign pattern. Absent otherwise.
std::optional<SourceSinkProfile> no_long_bpath_profile(const BidirectedGraph& g);

}  // namespace bidi
