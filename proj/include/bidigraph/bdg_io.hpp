#pragma once

// The .bdg text format, one record per line:
//
//   bdg 1                 optional header, first record only
//   v <name>              vertex
//   e <name> <u> <s> <v> <s>   edge with sign s in {+, -} at each end
//   # ...                 comment to end of line
//
// Endpoints must be declared before the edge that uses them. Edge order is
// the default ordering for transitive reduction.

#include <iosfwd>
#include <set>
#include <string>
#include <string_view>

#include "bidigraph/graph.hpp"

namespace bidi {

/// Throws ParseError (with the line number) on malformed input.
BidirectedGraph parse_bdg(std::string_view text);
BidirectedGraph read_bdg(std::istream& in);

/// Canonical form: header, vertices, then edges, in graph order.
std::string serialize_bdg(const BidirectedGraph& g);

struct DotAnnotations {
  std::set<EdgeIndex> removed;
  std::set<EdgeIndex> added;
  std::set<EdgeIndex> circuit_member;
};

/// Undirected DOT graph; each edge is labelled "s_u,s_v".
std::string export_dot(const BidirectedGraph& g, const DotAnnotations& annotations = {});

}  // namespace bidi
