#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <set>
#include <string>

namespace rakun {

enum class Normalization { kNone, kStem, kLemmatize };

std::string to_string(Normalization mode);
Normalization normalization_from_string(const std::string& name);

// surface form -> lemma, both lowercase.
using LemmaTable = std::map<std::string, std::string>;

// Two-column TSV, `surface<TAB>lemma`, one pair per line. Blank lines and
// lines starting with '#' are skipped. Throws std::runtime_error on missing
// file or malformed rows.
LemmaTable load_lemma_table(const std::filesystem::path& path);

// One lowercase word per line; same comment/blank handling as the lemma table.
std::set<std::string> load_stopwords(const std::filesystem::path& path);

// Small general-purpose English function-word list used by the
// paper-default preset.
const std::set<std::string>& builtin_stopwords();

struct ExtractionConfig {
  int num_keywords = 10;                     // k
  std::size_t min_token_length = 0;          // mu, in codepoints
  std::size_t edit_distance_threshold = 2;   // alpha
  std::size_t word_length_diff_threshold = 3;  // l
  int max_ngram = 1;                         // p, in {1,2,3}
  std::uint64_t bigram_count_threshold = 1;  // f, kept when count > f
  Normalization normalization = Normalization::kNone;
  std::shared_ptr<const LemmaTable> lemma_table;        // consulted when lemmatizing
  std::shared_ptr<const std::set<std::string>> stopwords;  // null: no filtering

  // Throws std::invalid_argument when k < 1 or p is outside {1,2,3}.
  void validate() const;

  // Normalizes one lowercased token per the configured mode. Lemmatization
  // looks the token up in the lemma table and falls back to the stemmer when
  // the table is missing or has no entry.
  std::string normalize_token(const std::string& lowered) const;

  bool is_stopword(const std::string& normalized) const;
};

// The built-in reproduction preset: unigrams, l=3, alpha=2, lemmatized
// normalization, k=10, minimum token length 3 and the builtin stopword list.
ExtractionConfig paper_default_config();

}  // namespace rakun
