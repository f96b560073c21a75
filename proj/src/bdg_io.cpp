#include "bidigraph/bdg_io.hpp"

#include <istream>
#include <iterator>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bidigraph/errors.hpp"

namespace bidi {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  for (std::string tok; is >> tok;) out.push_back(std::move(tok));
  return out;
}

Sign parse_sign(const std::string& tok, std::size_t line) {
  if (tok == "+") return Sign::plus();
  if (tok == "-") return Sign::minus();
  throw ParseError(line, "bad sign token '" + tok + "' (expected + or -)");
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

BidirectedGraph parse_bdg(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> vertex_ids;
  std::vector<Edge> edges;
  std::unordered_set<std::string> edge_ids;
  bool seen_record = false;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    auto tok = tokenize(line);
    if (tok.empty()) continue;
    const bool first = !seen_record;
    seen_record = true;

    if (tok[0] == "bdg") {
      if (!first) throw ParseError(line_no, "header must be the first record");
      if (tok.size() != 2 || tok[1] != "1") {
        throw ParseError(line_no, "unsupported header; expected 'bdg 1'");
      }
    } else if (tok[0] == "v") {
      if (tok.size() != 2) throw ParseError(line_no, "expected 'v <name>'");
      if (vertex_ids.contains(tok[1])) {
        throw ParseError(line_no, "duplicate vertex name '" + tok[1] + "'");
      }
      vertex_ids.emplace(tok[1], names.size());
      names.push_back(tok[1]);
    } else if (tok[0] == "e") {
      if (tok.size() != 6) throw ParseError(line_no, "expected 'e <name> <u> <s> <v> <s>'");
      Sign su = parse_sign(tok[3], line_no);
      Sign sv = parse_sign(tok[5], line_no);
      auto lookup = [&](const std::string& name) {
        auto it = vertex_ids.find(name);
        if (it == vertex_ids.end()) {
          throw ParseError(line_no, "undeclared endpoint '" + name + "'");
        }
        return it->second;
      };
      VertexId u = lookup(tok[2]);
      VertexId v = lookup(tok[4]);
      if (!edge_ids.insert(tok[1]).second) {
        throw ParseError(line_no, "duplicate edge name '" + tok[1] + "'");
      }
      edges.push_back(Edge{tok[1], u, su, v, sv});
    } else {
      throw ParseError(line_no, "unknown record '" + tok[0] + "'");
    }
  }
  return BidirectedGraph(std::move(names), std::move(edges));
}

BidirectedGraph read_bdg(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_bdg(text);
}

std::string serialize_bdg(const BidirectedGraph& g) {
  std::ostringstream os;
  os << "bdg 1\n";
  for (const auto& name : g.vertex_names()) os << "v " << name << '\n';
  for (const Edge& e : g.edges()) {
    os << "e " << e.id << ' ' << g.vertex_name(e.u) << ' ' << e.tau_u.symbol() << ' '
       << g.vertex_name(e.v) << ' ' << e.tau_v.symbol() << '\n';
  }
  return os.str();
}

std::string export_dot(const BidirectedGraph& g, const DotAnnotations& annotations) {
  std::ostringstream os;
  os << "graph G {\n";
  for (const auto& name : g.vertex_names()) os << "  " << quoted(name) << ";\n";
  for (EdgeIndex i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    os << "  " << quoted(g.vertex_name(e.u)) << " -- " << quoted(g.vertex_name(e.v))
       << " [id=" << quoted(e.id) << ", label=\"" << e.tau_u.symbol() << ','
       << e.tau_v.symbol() << '"';
    if (annotations.removed.contains(i)) {
      os << ", class=\"removed\", style=dotted, color=gray";
    } else if (annotations.added.contains(i)) {
      os << ", class=\"added\", style=dashed, color=blue";
    }
    if (annotations.circuit_member.contains(i)) {
      os << ", class=\"circuit_member\", color=red, penwidth=2";
    }
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace bidi
