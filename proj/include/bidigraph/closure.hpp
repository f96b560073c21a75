#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "bidigraph/graph.hpp"
#include "bidigraph/state_graph.hpp"

namespace bidi {

using KeySet = std::set<SignedEdgeKey>;

struct ClosureResult {
  /// Original edges followed by one new edge per added key, in key order.
  BidirectedGraph graph;
  std::vector<SignedEdgeKey> added;
  /// Shortest b-path in the original graph implying each added key.
  std::map<SignedEdgeKey, BPath> witness;
};

KeySet edge_keys(const BidirectedGraph& g);

/// Every {x^a, y^b} such that a b-path runs from x^a to y^b. Includes the
/// keys of all existing edges.
KeySet closure_keys(const BidirectedGraph& g);
KeySet closure_keys(const BidirectedGraph& g, const std::vector<bool>& active);

/// The transitive closure: the input plus one edge per key it does not yet
/// realize. Added edges are named "ft:<key>", e.g. "ft:x-,y-".
ClosureResult transitive_closure(const BidirectedGraph& g);

bool is_transitive(const BidirectedGraph& g);

/// The partial graph of `g` made of the edges whose key lies in the closure
/// of `h`. Throws InputError if `h` is not a partial graph of `g`.
BidirectedGraph relative_closure(const BidirectedGraph& g, const BidirectedGraph& h);

/// Applies switching at `x` to each key.
KeySet switch_keys(const KeySet& keys, std::span<const VertexId> x);

/// Identifier used for an edge added by closure.
std::string closure_edge_id(const BidirectedGraph& g, const SignedEdgeKey& k);

}  // namespace bidi
