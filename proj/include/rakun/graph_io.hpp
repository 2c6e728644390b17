#pragma once

#include <set>
#include <string>

#include <json.hpp>

#include "rakun/centrality.hpp"
#include "rakun/graph.hpp"

namespace rakun {

// Vertices ranked by score descending (label ascending on ties), first
// min(k, |V|) labels.
std::set<std::string> top_k_vertices(const CentralityScores& scores, int k);

// Graphviz DOT: one node statement per vertex carrying centrality and
// keyword attributes, one edge statement per edge carrying its weight.
std::string to_dot(const CorpusGraph& graph, const CentralityScores& scores,
                   const std::set<std::string>& keyword_vertices);

// GraphML with the same attributes declared as <key> elements.
std::string to_graphml(const CorpusGraph& graph, const CentralityScores& scores,
                       const std::set<std::string>& keyword_vertices);

// {"vertices": [{label, centrality, is_keyword}], "edges": [{src, dst, weight}]}
nlohmann::json graph_to_json(const CorpusGraph& graph, const CentralityScores& scores,
                             const std::set<std::string>& keyword_vertices);

// Rebuilds the CorpusGraph from graph_to_json output (attributes beyond the
// structure are ignored). Malformed input throws nlohmann::json exceptions.
CorpusGraph graph_from_json(const nlohmann::json& data);

}  // namespace rakun
