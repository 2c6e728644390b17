#include "rakun/tokenizer.hpp"

#include "rakun/unicode.hpp"

namespace rakun {

namespace {

bool is_token_char(unsigned char c) { return is_ascii_alnum(c) || c >= 0x80; }

bool is_internal_punct(unsigned char c) { return c == '-' || c == '\''; }

// Extends pos past one token; pos must sit on a token character.
std::size_t scan_token_end(std::string_view text, std::size_t pos) {
  while (pos < text.size()) {
    const auto c = static_cast<unsigned char>(text[pos]);
    if (is_token_char(c)) {
      ++pos;
      continue;
    }
    if (is_internal_punct(c) && pos + 1 < text.size() &&
        is_token_char(static_cast<unsigned char>(text[pos + 1]))) {
      pos += 2;
      continue;
    }
    break;
  }
  return pos;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text, const ExtractionConfig& config) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  std::size_t ordinal = 0;
  while (pos < text.size()) {
    if (!is_token_char(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t end = scan_token_end(text, pos);
    const std::string_view surface = text.substr(pos, end - pos);
    pos = end;
    const std::size_t position = ordinal++;

    const std::string lowered = ascii_lower(surface);
    const std::string normalized = config.normalize_token(lowered);
    if (normalized.empty()) continue;
    if (codepoint_count(normalized) < config.min_token_length) continue;
    if (config.is_stopword(lowered) || config.is_stopword(normalized)) continue;
    tokens.push_back(Token{std::string(surface), normalized, position});
  }
  return tokens;
}

CorpusGraph build_graph(const std::vector<Token>& tokens) {
  return build_graph(std::vector<std::vector<Token>>{tokens});
}

CorpusGraph build_graph(const std::vector<std::vector<Token>>& documents) {
  CorpusGraph graph;
  for (const auto& tokens : documents) {
    for (const Token& token : tokens) graph.add_vertex(token.normalized);
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
      if (tokens[i].normalized == tokens[i + 1].normalized) continue;
      graph.add_edge(tokens[i].normalized, tokens[i + 1].normalized);
    }
  }
  return graph;
}

}  // namespace rakun
