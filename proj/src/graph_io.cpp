#include "rakun/graph_io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace rakun {

namespace {

std::string dot_escape(const std::string& label) {
  std::string out;
  out.reserve(label.size() + 2);
  for (const char c : label) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string xml_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

// Shortest round-trip decimal text, shared with the JSON export so every
// format prints identical numbers.
std::string number_text(double value) { return nlohmann::json(value).dump(); }

}  // namespace

std::set<std::string> top_k_vertices(const CentralityScores& scores, int k) {
  std::vector<std::pair<std::string, double>> ranked(scores.begin(), scores.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::set<std::string> top;
  for (const auto& [label, score] : ranked) {
    if (static_cast<int>(top.size()) >= k) break;
    top.insert(label);
  }
  return top;
}

std::string to_dot(const CorpusGraph& graph, const CentralityScores& scores,
                   const std::set<std::string>& keyword_vertices) {
  std::ostringstream out;
  out << "digraph corpus {\n";
  for (const std::string& v : graph.vertices()) {
    out << "  \"" << dot_escape(v) << "\" [centrality=" << number_text(scores.at(v))
        << ", keyword=" << (keyword_vertices.count(v) > 0 ? "true" : "false") << "];\n";
  }
  for (const std::string& src : graph.vertices()) {
    for (const auto& [dst, weight] : graph.out_edges(src)) {
      out << "  \"" << dot_escape(src) << "\" -> \"" << dot_escape(dst)
          << "\" [weight=" << weight << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_graphml(const CorpusGraph& graph, const CentralityScores& scores,
                       const std::set<std::string>& keyword_vertices) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"centrality\" for=\"node\" attr.name=\"centrality\" "
         "attr.type=\"double\"/>\n"
      << "  <key id=\"is_keyword\" for=\"node\" attr.name=\"is_keyword\" "
         "attr.type=\"boolean\"/>\n"
      << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n"
      << "  <graph id=\"corpus\" edgedefault=\"directed\">\n";
  for (const std::string& v : graph.vertices()) {
    out << "    <node id=\"" << xml_escape(v) << "\">"
        << "<data key=\"centrality\">" << number_text(scores.at(v)) << "</data>"
        << "<data key=\"is_keyword\">"
        << (keyword_vertices.count(v) > 0 ? "true" : "false") << "</data>"
        << "</node>\n";
  }
  for (const std::string& src : graph.vertices()) {
    for (const auto& [dst, weight] : graph.out_edges(src)) {
      out << "    <edge source=\"" << xml_escape(src) << "\" target=\"" << xml_escape(dst)
          << "\"><data key=\"weight\">" << weight << "</data></edge>\n";
    }
  }
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

nlohmann::json graph_to_json(const CorpusGraph& graph, const CentralityScores& scores,
                             const std::set<std::string>& keyword_vertices) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const std::string& v : graph.vertices()) {
    vertices.push_back({{"label", v},
                        {"centrality", scores.at(v)},
                        {"is_keyword", keyword_vertices.count(v) > 0}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const std::string& src : graph.vertices()) {
    for (const auto& [dst, weight] : graph.out_edges(src)) {
      edges.push_back({{"src", src}, {"dst", dst}, {"weight", weight}});
    }
  }
  return {{"vertices", vertices}, {"edges", edges}};
}

CorpusGraph graph_from_json(const nlohmann::json& data) {
  CorpusGraph graph;
  for (const auto& vertex : data.at("vertices")) {
    graph.add_vertex(vertex.at("label").get<std::string>());
  }
  for (const auto& edge : data.at("edges")) {
    graph.add_edge(edge.at("src").get<std::string>(), edge.at("dst").get<std::string>(),
                   edge.at("weight").get<std::uint64_t>());
  }
  return graph;
}

}  // namespace rakun
