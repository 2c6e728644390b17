#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rakun/centrality.hpp"
#include "rakun/config.hpp"
#include "rakun/graph.hpp"
#include "rakun/meta_vertex.hpp"
#include "rakun/tokenizer.hpp"

namespace rakun {

struct ScoredKeyword {
  std::vector<std::string> terms;  // 1 to 3 words
  double score = 0.0;              // mean load centrality of the constituents

  bool operator==(const ScoredKeyword& other) const = default;
};

std::string joined_terms(const ScoredKeyword& keyword);

// One keyword per post-merge vertex; meta-vertex labels are replaced by the
// representative member. Sorted by score descending, lexicographic tie-break
// on the reported term.
std::vector<ScoredKeyword> rank_unigrams(const CentralityScores& scores,
                                         const std::vector<MetaVertexRecord>& records);

// Consecutive ordered pairs of the filtered token sequence whose occurrence
// count strictly exceeds f. Terms are the normalized pair forms; the score
// averages the two resolved vertex centralities.
std::vector<ScoredKeyword> bigram_candidates(
    const std::vector<Token>& tokens, const CentralityScores& scores, std::uint64_t f,
    const std::map<std::string, std::string>& vertex_of);

// Extends each bigram with every in-neighbor of its left vertex and every
// out-neighbor of its right vertex on the post-merge graph. Extension
// vertices are reported through their representative; candidates whose three
// vertices are not pairwise distinct are dropped.
std::vector<ScoredKeyword> trigram_candidates(
    const std::vector<ScoredKeyword>& bigrams, const CorpusGraph& graph,
    const CentralityScores& scores, const std::map<std::string, std::string>& vertex_of,
    const std::map<std::string, std::string>& representative_of);

// Concatenates the pools admitted by config.max_ngram, deduplicates on the
// stemmed joined terms (first occurrence wins), sorts by score descending
// with a lexicographic tie-break on the joined terms, truncates to k.
std::vector<ScoredKeyword> select_keywords(const std::vector<ScoredKeyword>& unigrams,
                                           const std::vector<ScoredKeyword>& bigrams,
                                           const std::vector<ScoredKeyword>& trigrams,
                                           const ExtractionConfig& config);

// Everything extract computes before the n-gram stage. Depends only on the
// tokenization and meta-vertex parameters, so one analysis can serve many
// (max_ngram, bigram_count_threshold, num_keywords) combinations during grid
// search.
struct DocumentAnalysis {
  std::vector<Token> tokens;
  CorpusGraph graph;  // post-merge
  std::vector<MetaVertexRecord> records;
  CentralityScores scores;  // post-merge
  std::map<std::string, std::string> vertex_of;
  std::map<std::string, std::string> representative_of;
};

DocumentAnalysis analyze_document(std::string_view text, const ExtractionConfig& config);

// The n-gram stage. config must agree with the analysis on the parameters
// that shaped it.
std::vector<ScoredKeyword> keywords_from(const DocumentAnalysis& analysis,
                                         const ExtractionConfig& config);

// Full pipeline: tokenize, build the graph, rank, merge meta vertices,
// re-rank, generate n-grams, select the top k.
std::vector<ScoredKeyword> extract(std::string_view text, const ExtractionConfig& config);

}  // namespace rakun
