#pragma once

// The state digraph turns b-walks into ordinary directed walks. A state
// (x, s) means "standing at x, the next half-edge used must have sign s".
// An edge {u^g, v^d} yields the arcs (u,g) -> (v,-d) and (v,d) -> (u,-g):
// arriving through a half-edge of sign d forces departure with sign -d.
//
// With the end-state convention (y, -b) for a walk ending at y^b, b-paths are
// exactly the simple state paths and b-circuits exactly the simple state
// cycles.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bidigraph/graph.hpp"

namespace bidi {

struct State {
  VertexId vertex;
  Sign dep;

  std::size_t index() const { return 2 * vertex + (dep.is_plus() ? 1 : 0); }
  static State from_index(std::size_t i) {
    return State{i / 2, (i % 2) != 0 ? Sign::plus() : Sign::minus()};
  }
  friend auto operator<=>(const State&, const State&) = default;
};

/// One traversal of an edge: leave `from` through a half-edge of sign
/// `depart`, arrive at `to` through a half-edge of sign `arrive`.
struct Step {
  EdgeIndex edge;
  VertexId from;
  Sign depart;
  VertexId to;
  Sign arrive;

  friend auto operator<=>(const Step&, const Step&) = default;
};

struct Arc {
  EdgeIndex edge;
  bool forward;  // traverses the edge from its `u` end to its `v` end
  State from;
  State to;

  Step step() const { return Step{edge, from.vertex, from.dep, to.vertex, -to.dep}; }
};

class StateDigraph {
 public:
  explicit StateDigraph(const BidirectedGraph& g);
  /// Only edges whose `active` entry is true contribute arcs; arc labels keep
  /// the edge indices of `g`.
  StateDigraph(const BidirectedGraph& g, const std::vector<bool>& active);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t node_count() const { return 2 * vertex_count_; }
  /// Arcs in edge order, forward arc before backward arc.
  const std::vector<Arc>& arcs() const { return arcs_; }
  /// Indices into arcs(), in arc order.
  std::span<const std::size_t> out_arcs(State s) const { return out_[s.index()]; }

  void check_vertex(VertexId v) const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
};

/// A b-walk x^a e1 x1 ... ek y^b stored as its steps. An empty walk has no
/// ends; accessors other than steps()/length() require length() >= 1.
class BWalk {
 public:
  BWalk() = default;
  explicit BWalk(std::vector<Step> steps) : steps_(std::move(steps)) {}

  const std::vector<Step>& steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }

  Incidence start() const { return {steps_.front().from, steps_.front().depart}; }
  Incidence end() const { return {steps_.back().to, steps_.back().arrive}; }
  Sign alpha() const { return steps_.front().depart; }
  Sign beta() const { return steps_.back().arrive; }

  /// Vertex sequence x0, x1, ..., xk.
  std::vector<VertexId> vertices() const;
  /// The same chain walked from y^b back to x^a.
  BWalk reversed() const;

  friend auto operator<=>(const BWalk&, const BWalk&) = default;

 private:
  std::vector<Step> steps_;
};

/// A b-walk that is minimal, i.e. whose states never repeat except that the
/// final state may equal the first.
using BPath = BWalk;

/// -alpha * beta.
Sign bwalk_sign(const BWalk& w);
/// alpha + beta.
int bwalk_weight(const BWalk& w);
/// Product of edge signatures along the chain, counted with multiplicity.
Sign chain_signature(const BidirectedGraph& g, const BWalk& w);
/// Sum of edge weights along the chain, counted with multiplicity.
int chain_weight(const BidirectedGraph& g, const BWalk& w);

/// States reachable from `s` by at least one arc.
std::vector<bool> reachable_states(const StateDigraph& sd, State s);

/// Is there a b-walk from x^alpha to y^beta?
bool exists_bwalk(const StateDigraph& sd, Incidence from, Incidence to);

/// A shortest b-path from x^alpha to y^beta, breadth-first in arc order.
/// When from == (x, a) and to == (x, -a) the result is a b-circuit.
std::optional<BPath> find_bpath(const StateDigraph& sd, Incidence from, Incidence to);

struct BPathEnumeration {
  std::vector<BPath> paths;  // sorted, duplicates removed
  bool truncated = false;
};
/// Every b-path from x^alpha to y^beta, stopping after `cap` results.
BPathEnumeration enumerate_bpaths(const StateDigraph& sd, Incidence from, Incidence to,
                                  std::size_t cap);

/// Checks a candidate chain against the b-path characterization: length at
/// least one, cancelling signs at every interior vertex, and no repeated
/// state except possibly first == last. Throws InputError when the steps do
/// not describe a chain of `g`.
bool is_bpath(const BidirectedGraph& g, const BWalk& w);

/// Throws InputError if a step does not match its edge or consecutive steps
/// do not meet.
void check_chain(const BidirectedGraph& g, const BWalk& w);

/// A topological order of the states, absent when the digraph has a cycle.
std::optional<std::vector<State>> topological_order(const StateDigraph& sd);
bool has_bcircuit(const StateDigraph& sd);
bool has_bcircuit(const BidirectedGraph& g);
/// A shortest b-circuit through the first state that lies on one.
std::optional<BPath> find_bcircuit(const BidirectedGraph& g);

enum class CyclicKind { not_cyclic, purely_cyclic, type_a, type_b, type_c };

struct CyclicAnalysis {
  CyclicKind kind = CyclicKind::not_cyclic;
  /// Step range [first, last) of the purely cyclic part, when there is one.
  std::optional<std::pair<std::size_t, std::size_t>> cycle;
  /// The vertex the cycle is on.
  std::optional<VertexId> cycle_vertex;
};

/// Purely cyclic when the whole chain is a cycle. Otherwise cyclic when
/// exactly one contiguous piece is a (necessarily negative) cycle; the type
/// then follows the attachment of the two ends at the cycle vertex v:
///   a: one end is v, or the ends coincide and reach v along disjoint tails;
///   b: both tails are non-empty and edge-disjoint;
///   c: the tails share edges before reaching v.
/// Throws InputError when `p` is not a b-path of `g`.
CyclicAnalysis analyze_cyclic_bpath(const BidirectedGraph& g, const BPath& p);
CyclicKind classify_cyclic_bpath(const BidirectedGraph& g, const BPath& p);

const char* to_string(CyclicKind k);

/// "x- a b y-": the vertex sequence with the end signs attached.
std::string format_walk(const BidirectedGraph& g, const BWalk& w);
/// Comma separated edge ids along the walk.
std::string format_walk_edges(const BidirectedGraph& g, const BWalk& w);

}  // namespace bidi
