#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rakun/config.hpp"
#include "rakun/graph.hpp"

namespace rakun {

struct Token {
  std::string surface;     // original slice of the document
  std::string normalized;  // lowercased, optionally lemmatized/stemmed
  std::size_t position = 0;  // ordinal within the raw token stream

  bool operator==(const Token& other) const = default;
};

// Splits text into maximal runs of alphanumeric characters (non-ASCII bytes
// count as letters) with internal hyphens/apostrophes, lowercases and
// normalizes them, then removes tokens shorter than min_token_length or in
// the stopword set. Removed tokens are bridged: their neighbors become
// consecutive.
std::vector<Token> tokenize(std::string_view text, const ExtractionConfig& config);

// Directed successor-pair graph: one edge per consecutive pair of distinct
// normalized forms, weighted by the number of occurrences of that ordered
// pair. Repeated identical tokens would form self-loops and are skipped.
CorpusGraph build_graph(const std::vector<Token>& tokens);

// Multi-document variant; successor pairs never cross document boundaries.
CorpusGraph build_graph(const std::vector<std::vector<Token>>& documents);

}  // namespace rakun
