#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rakun/centrality.hpp"
#include "rakun/graph.hpp"

namespace rakun {

struct MetaVertexRecord {
  std::set<std::string> members;  // >= 2 original vertex labels
  std::string identifier;         // stem introduced as the new vertex label
  std::string representative;     // member with the highest pre-merge centrality

  bool operator==(const MetaVertexRecord& other) const = default;
};

// Unordered pair stored with first < second.
using LabelPair = std::pair<std::string, std::string>;

// All vertex pairs with codepoint-length difference <= l and Levenshtein
// distance <= alpha. The cheap length gate runs first; the edit distance is
// only computed for pairs that survive it.
std::set<LabelPair> candidate_pairs(const CorpusGraph& graph, std::size_t l,
                                    std::size_t alpha);

struct MergeResult {
  CorpusGraph graph;
  std::vector<MetaVertexRecord> records;  // sorted by identifier
  std::uint64_t dropped_self_loop_weight = 0;
};

// Closes the candidate pairs transitively into clusters and merges each
// cluster into one meta vertex: the representative is the member with
// maximal pre-merge centrality (lexicographic tie-break), the new label is
// the representative's stem, incident edges are rewired with coinciding
// weights summed, and rewired self-loops are dropped. A stem label that
// collides with another cluster's label merges the clusters; one that
// collides with an unmerged vertex absorbs that vertex. Throws
// std::invalid_argument when a pair references an unknown label or
// pre_merge_centrality misses a vertex.
MergeResult merge_meta_vertices(const CorpusGraph& graph,
                                const std::set<LabelPair>& pairs,
                                const CentralityScores& pre_merge_centrality);

// member label -> meta-vertex identifier, for every merged member.
std::map<std::string, std::string> vertex_mapping(const std::vector<MetaVertexRecord>& records);

// identifier -> representative surface form.
std::map<std::string, std::string> representative_mapping(
    const std::vector<MetaVertexRecord>& records);

}  // namespace rakun
