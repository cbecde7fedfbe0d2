#include "mdred/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "mdred/error.hpp"

namespace mdred {

void write_graph(std::ostream& out, const LabeledGraph& g) {
  out << "g " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.w << '\n';
}

void write_labels(std::ostream& out, const LabeledGraph& g) {
  for (VertexId v = 0; static_cast<std::size_t>(v) < g.vertex_count(); ++v) {
    out << v << '\t' << g.label(v).to_string() << '\n';
  }
}

namespace {

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

LabeledGraph read_graph(std::istream& graph, std::istream* labels) {
  std::string line;
  int lineno = 0;
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen_edges;

  while (std::getline(graph, line)) {
    ++lineno;
    if (blank(line)) continue;
    std::istringstream in(line);
    std::string tag;
    in >> tag;
    if (n < 0) {
      if (tag != "g" || !(in >> n >> m) || n < 0 || m < 0) {
        throw ParseError("expected header 'g <vertexCount> <edgeCount>'", lineno);
      }
    } else if (tag == "e") {
      long long u = 0;
      long long w = 0;
      if (!(in >> u >> w)) throw ParseError("expected 'e <u> <w>'", lineno);
      if (u < 0 || w < 0 || u >= n || w >= n) throw ParseError("edge endpoint out of range", lineno);
      if (u >= w) throw ParseError("edge endpoints must satisfy u < w", lineno);
      if (!seen_edges.insert(static_cast<std::uint64_t>(u) << 32 | static_cast<std::uint64_t>(w)).second) {
        throw ParseError("duplicate edge", lineno);
      }
      edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(w)});
    } else {
      throw ParseError("unexpected record '" + tag + "'", lineno);
    }
    std::string rest;
    if (in >> rest) throw ParseError("trailing tokens", lineno);
  }
  if (n < 0) throw ParseError("missing header", lineno);
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()),
                     lineno);
  }

  std::vector<std::optional<VertexLabel>> names(static_cast<std::size_t>(n));
  if (labels != nullptr) {
    std::unordered_set<std::string> seen_labels;
    lineno = 0;
    while (std::getline(*labels, line)) {
      ++lineno;
      if (blank(line)) continue;
      const auto tab = line.find('\t');
      if (tab == std::string::npos) throw ParseError("expected '<id>\\t<label>'", lineno);
      long long id = -1;
      try {
        std::size_t used = 0;
        id = std::stoll(line.substr(0, tab), &used);
        if (used != tab) id = -1;
      } catch (const std::exception&) {
        id = -1;
      }
      if (id < 0 || id >= n) throw ParseError("label id out of range", lineno);
      if (names[id]) throw ParseError("vertex " + std::to_string(id) + " labeled twice", lineno);
      std::string text = line.substr(tab + 1);
      if (!text.empty() && text.back() == '\r') text.pop_back();
      try {
        names[id] = VertexLabel::parse(text);
      } catch (const ArgumentError& e) {
        throw ParseError(e.what(), lineno);
      }
      if (!seen_labels.insert(names[id]->to_string()).second) {
        throw ParseError("label " + text + " used twice", lineno);
      }
    }
    for (std::size_t v = 0; v < names.size(); ++v) {
      if (!names[v]) throw ParseError("vertex " + std::to_string(v) + " has no label", lineno);
    }
  } else {
    for (std::size_t v = 0; v < names.size(); ++v) {
      names[v] = VertexLabel::path_internal("anon", static_cast<int>(v) + 1);
    }
  }

  GraphBuilder b;
  for (auto& name : names) b.add_vertex(std::move(*name));
  for (const Edge& e : edges) b.add_edge(e.u, e.w);
  return std::move(b).finish();
}

}  // namespace mdred
