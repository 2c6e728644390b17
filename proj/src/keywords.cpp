#include "rakun/keywords.hpp"

#include <algorithm>
#include <set>

#include "rakun/porter_stemmer.hpp"
#include "rakun/unicode.hpp"

namespace rakun {

namespace {

const std::string& resolve_vertex(const std::string& normalized,
                                  const std::map<std::string, std::string>& vertex_of) {
  const auto it = vertex_of.find(normalized);
  return it == vertex_of.end() ? normalized : it->second;
}

const std::string& surface_of_vertex(
    const std::string& label, const std::map<std::string, std::string>& representative_of) {
  const auto it = representative_of.find(label);
  return it == representative_of.end() ? label : it->second;
}

void sort_keywords(std::vector<ScoredKeyword>& keywords) {
  std::sort(keywords.begin(), keywords.end(),
            [](const ScoredKeyword& a, const ScoredKeyword& b) {
              if (a.score != b.score) return a.score > b.score;
              return joined_terms(a) < joined_terms(b);
            });
}

std::string dedup_key(const ScoredKeyword& keyword) {
  std::string key;
  for (const std::string& term : keyword.terms) {
    if (!key.empty()) key.push_back(' ');
    key += porter_stem(ascii_lower(term));
  }
  return key;
}

}  // namespace

std::string joined_terms(const ScoredKeyword& keyword) {
  std::string joined;
  for (const std::string& term : keyword.terms) {
    if (!joined.empty()) joined.push_back(' ');
    joined += term;
  }
  return joined;
}

std::vector<ScoredKeyword> rank_unigrams(const CentralityScores& scores,
                                         const std::vector<MetaVertexRecord>& records) {
  const std::map<std::string, std::string> representative_of = representative_mapping(records);
  std::vector<ScoredKeyword> keywords;
  keywords.reserve(scores.size());
  for (const auto& [label, score] : scores) {
    keywords.push_back(ScoredKeyword{{surface_of_vertex(label, representative_of)}, score});
  }
  sort_keywords(keywords);
  return keywords;
}

std::vector<ScoredKeyword> bigram_candidates(
    const std::vector<Token>& tokens, const CentralityScores& scores, std::uint64_t f,
    const std::map<std::string, std::string>& vertex_of) {
  using Pair = std::pair<std::string, std::string>;
  std::map<Pair, std::uint64_t> counts;
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    ++counts[Pair{tokens[i].normalized, tokens[i + 1].normalized}];
  }

  std::vector<ScoredKeyword> keywords;
  for (const auto& [pair, count] : counts) {
    if (count <= f) continue;
    const double c1 = scores.at(resolve_vertex(pair.first, vertex_of));
    const double c2 = scores.at(resolve_vertex(pair.second, vertex_of));
    keywords.push_back(ScoredKeyword{{pair.first, pair.second}, (c1 + c2) / 2.0});
  }
  sort_keywords(keywords);
  return keywords;
}

std::vector<ScoredKeyword> trigram_candidates(
    const std::vector<ScoredKeyword>& bigrams, const CorpusGraph& graph,
    const CentralityScores& scores, const std::map<std::string, std::string>& vertex_of,
    const std::map<std::string, std::string>& representative_of) {
  std::vector<ScoredKeyword> keywords;
  for (const ScoredKeyword& bigram : bigrams) {
    const std::string& v1 = resolve_vertex(bigram.terms[0], vertex_of);
    const std::string& v2 = resolve_vertex(bigram.terms[1], vertex_of);
    if (v1 == v2) continue;
    const double c1 = scores.at(v1);
    const double c2 = scores.at(v2);

    for (const std::string& u : graph.in_neighbors(v1)) {
      if (u == v1 || u == v2) continue;
      keywords.push_back(ScoredKeyword{
          {surface_of_vertex(u, representative_of), bigram.terms[0], bigram.terms[1]},
          (scores.at(u) + c1 + c2) / 3.0});
    }
    for (const auto& entry : graph.out_edges(v2)) {
      const std::string& x = entry.first;
      if (x == v1 || x == v2) continue;
      keywords.push_back(ScoredKeyword{
          {bigram.terms[0], bigram.terms[1], surface_of_vertex(x, representative_of)},
          (c1 + c2 + scores.at(x)) / 3.0});
    }
  }
  sort_keywords(keywords);
  return keywords;
}

std::vector<ScoredKeyword> select_keywords(const std::vector<ScoredKeyword>& unigrams,
                                           const std::vector<ScoredKeyword>& bigrams,
                                           const std::vector<ScoredKeyword>& trigrams,
                                           const ExtractionConfig& config) {
  config.validate();
  std::vector<ScoredKeyword> pool = unigrams;
  if (config.max_ngram >= 2) pool.insert(pool.end(), bigrams.begin(), bigrams.end());
  if (config.max_ngram >= 3) pool.insert(pool.end(), trigrams.begin(), trigrams.end());

  std::vector<ScoredKeyword> unique;
  std::set<std::string> seen;
  for (ScoredKeyword& keyword : pool) {
    if (seen.insert(dedup_key(keyword)).second) {
      unique.push_back(std::move(keyword));
    }
  }
  sort_keywords(unique);
  if (unique.size() > static_cast<std::size_t>(config.num_keywords)) {
    unique.resize(static_cast<std::size_t>(config.num_keywords));
  }
  return unique;
}

DocumentAnalysis analyze_document(std::string_view text, const ExtractionConfig& config) {
  config.validate();
  DocumentAnalysis analysis;
  analysis.tokens = tokenize(text, config);
  if (analysis.tokens.empty()) return analysis;

  const CorpusGraph initial = build_graph(analysis.tokens);
  const CentralityScores pre = load_centrality(initial);
  const std::set<LabelPair> pairs = candidate_pairs(
      initial, config.word_length_diff_threshold, config.edit_distance_threshold);
  MergeResult merged = merge_meta_vertices(initial, pairs, pre);

  analysis.graph = std::move(merged.graph);
  analysis.records = std::move(merged.records);
  analysis.scores = load_centrality(analysis.graph);
  analysis.vertex_of = vertex_mapping(analysis.records);
  analysis.representative_of = representative_mapping(analysis.records);
  return analysis;
}

std::vector<ScoredKeyword> keywords_from(const DocumentAnalysis& analysis,
                                         const ExtractionConfig& config) {
  config.validate();
  if (analysis.tokens.empty()) return {};

  const std::vector<ScoredKeyword> unigrams = rank_unigrams(analysis.scores, analysis.records);
  std::vector<ScoredKeyword> bigrams;
  std::vector<ScoredKeyword> trigrams;
  if (config.max_ngram >= 2) {
    bigrams = bigram_candidates(analysis.tokens, analysis.scores,
                                config.bigram_count_threshold, analysis.vertex_of);
  }
  if (config.max_ngram >= 3) {
    trigrams = trigram_candidates(bigrams, analysis.graph, analysis.scores,
                                  analysis.vertex_of, analysis.representative_of);
  }
  return select_keywords(unigrams, bigrams, trigrams, config);
}

std::vector<ScoredKeyword> extract(std::string_view text, const ExtractionConfig& config) {
  return keywords_from(analyze_document(text, config), config);
}

}  // namespace rakun
