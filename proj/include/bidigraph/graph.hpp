#pragma once

// Bidirected graphs: vertices plus edges that carry an independent sign on
// each of their two half-edges. The induced edge signature, vertex and edge
// weights, switching and balance live here as free functions.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bidigraph/sign.hpp"

namespace bidi {

using VertexId = std::size_t;
using EdgeIndex = std::size_t;

/// Sorted list of edge indices into one graph.
using EdgeSet = std::vector<EdgeIndex>;

/// One end of an edge: a vertex together with the sign of the half-edge there.
struct Incidence {
  VertexId vertex;
  Sign sign;

  friend auto operator<=>(const Incidence&, const Incidence&) = default;
};

/// Canonical identity {x^a, y^b} of an edge type; the two incidences are
/// stored sorted by (vertex, sign) so orientation of writing is irrelevant.
class SignedEdgeKey {
 public:
  SignedEdgeKey(Incidence a, Incidence b)
      : first_(a < b ? a : b), second_(a < b ? b : a) {}

  const Incidence& first() const { return first_; }
  const Incidence& second() const { return second_; }
  bool is_loop() const { return first_.vertex == second_.vertex; }

  Sign signature() const { return -(first_.sign * second_.sign); }
  int weight() const { return first_.sign.value() + second_.sign.value(); }

  /// The key with the signs at the vertices of `flip` negated.
  template <typename Pred>
  SignedEdgeKey switched(Pred&& flip) const {
    auto sw = [&](Incidence i) {
      return flip(i.vertex) ? Incidence{i.vertex, -i.sign} : i;
    };
    return SignedEdgeKey(sw(first_), sw(second_));
  }

  friend auto operator<=>(const SignedEdgeKey&, const SignedEdgeKey&) = default;

 private:
  Incidence first_;
  Incidence second_;
};

struct Edge {
  std::string id;
  VertexId u;
  Sign tau_u;
  VertexId v;
  Sign tau_v;

  bool is_loop() const { return u == v; }
  SignedEdgeKey key() const { return SignedEdgeKey({u, tau_u}, {v, tau_v}); }
  bool operator==(const Edge&) const = default;
};

/// An immutable bidirected multigraph. Loops and parallel edges are allowed;
/// edge order is the default linear order used by transitive reduction.
class BidirectedGraph {
 public:
  BidirectedGraph() = default;

  /// Throws InputError on duplicate names or endpoints out of range.
  BidirectedGraph(std::vector<std::string> vertex_names, std::vector<Edge> edges);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& vertex_name(VertexId v) const { return names_.at(v); }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  /// Like find_vertex but throws InputError for unknown names.
  VertexId vertex(std::string_view name) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex i) const { return edges_.at(i); }
  std::optional<EdgeIndex> find_edge(std::string_view id) const;
  EdgeIndex edge_index(std::string_view id) const;

  /// Edge indices incident with each vertex; a loop is listed once.
  const std::vector<EdgeIndex>& incident_edges(VertexId v) const { return incident_.at(v); }

  /// Throws InputError if `v` is not a vertex of this graph.
  void check_vertex(VertexId v) const;

  /// Same vertex set, different edge list.
  BidirectedGraph with_edges(std::vector<Edge> edges) const;
  /// The partial graph keeping edges whose mask entry is true.
  BidirectedGraph partial(const std::vector<bool>& keep) const;
  BidirectedGraph partial(std::span<const EdgeIndex> keep) const;
  BidirectedGraph without_edges(std::span<const EdgeIndex> drop) const;

  /// True when every edge of `sub` appears here with the same id and ends,
  /// and both graphs have the same vertex list.
  bool has_partial_graph(const BidirectedGraph& sub) const;
  /// Maps each edge of a partial graph to its index here.
  std::vector<EdgeIndex> embed(const BidirectedGraph& sub) const;

  bool operator==(const BidirectedGraph& other) const {
    return names_ == other.names_ && edges_ == other.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, VertexId> vertex_lookup_;
  std::unordered_map<std::string, EdgeIndex> edge_lookup_;
  std::vector<std::vector<EdgeIndex>> incident_;
};

/// Incremental construction by name, for parsers and tests.
class GraphBuilder {
 public:
  GraphBuilder& vertex(std::string name);
  GraphBuilder& edge(std::string id, std::string_view u, Sign tau_u, std::string_view v,
                     Sign tau_v);
  /// Shorthand taking '+'/'-' characters.
  GraphBuilder& edge(std::string id, std::string_view u, char tau_u, std::string_view v,
                     char tau_v);
  BidirectedGraph build() const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> lookup_;
  std::vector<Edge> edges_;
};

// --- edge-level quantities -------------------------------------------------

/// sigma(e) = -tau(e,u) * tau(e,v).
Sign signature(const Edge& e);
/// tau(e,u) + tau(e,v), always one of -2, 0, +2.
int edge_weight(const Edge& e);

/// Sum of half-edge signs at `x`; a loop at `x` contributes both of its signs.
int vertex_weight(const BidirectedGraph& g, VertexId x);

struct SourcesAndSinks {
  std::vector<VertexId> sources;  // every incident half-edge is +
  std::vector<VertexId> sinks;    // every incident half-edge is -
};
/// Isolated vertices are reported in both lists.
SourcesAndSinks sources_and_sinks(const BidirectedGraph& g);

/// Negates every half-edge sign at the vertices of `x`.
BidirectedGraph switch_vertices(const BidirectedGraph& g, std::span<const VertexId> x);

bool is_all_positive(const BidirectedGraph& g);
bool is_all_negative(const BidirectedGraph& g);

/// Connected component label per vertex, labels numbered in order of first
/// vertex. Returns the labels and the component count.
std::pair<std::vector<std::size_t>, std::size_t> connected_components(const BidirectedGraph& g);

/// The switching set X = {v : s(v) = -1} of a switching function with
/// s(u)s(v) = sigma(e) on every edge, rooted at +1 on the first vertex of each
/// component; nullopt when the signed graph is unbalanced.
std::optional<std::vector<VertexId>> balancing_switch_set(const BidirectedGraph& g);
bool is_balanced(const BidirectedGraph& g);

/// Balance of the graph with every edge sign negated.
bool is_antibalanced(const BidirectedGraph& g);
/// Negates exactly one half-edge per edge, which negates every signature.
BidirectedGraph negate_signature(const BidirectedGraph& g);

/// Balance of each connected component, indexed by component label.
std::vector<bool> balanced_components(const BidirectedGraph& g);

/// "x+" style rendering of an incidence and "x-,y+" for a key.
std::string format_incidence(const BidirectedGraph& g, Incidence i);
std::string format_key(const BidirectedGraph& g, const SignedEdgeKey& k);

}  // namespace bidi
