#include "rakun/config.hpp"

#include <fstream>
#include <stdexcept>

#include "rakun/porter_stemmer.hpp"
#include "rakun/unicode.hpp"

namespace rakun {

namespace {

bool blank_or_comment(const std::string& line) {
  for (const char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t') return false;
  }
  return true;
}

std::string strip_cr(std::string line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
  return line;
}

}  // namespace

std::string to_string(Normalization mode) {
  switch (mode) {
    case Normalization::kNone: return "none";
    case Normalization::kStem: return "stem";
    case Normalization::kLemmatize: return "lemmatize";
  }
  return "none";
}

Normalization normalization_from_string(const std::string& name) {
  if (name == "none") return Normalization::kNone;
  if (name == "stem") return Normalization::kStem;
  if (name == "lemmatize") return Normalization::kLemmatize;
  throw std::invalid_argument("unknown normalization mode '" + name +
                              "' (expected none, stem or lemmatize)");
}

LemmaTable load_lemma_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open lemma table: " + path.string());
  }
  LemmaTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (blank_or_comment(line)) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
      throw std::runtime_error("malformed lemma table row at " + path.string() + ":" +
                               std::to_string(lineno));
    }
    const std::string surface = ascii_lower(line.substr(0, tab));
    const std::string lemma = ascii_lower(line.substr(tab + 1));
    if (surface.find_first_of(" \t") != std::string::npos ||
        lemma.find_first_of(" \t") != std::string::npos) {
      throw std::runtime_error("lemma table row with embedded whitespace at " +
                               path.string() + ":" + std::to_string(lineno));
    }
    table[surface] = lemma;
  }
  return table;
}

std::set<std::string> load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open stopword list: " + path.string());
  }
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    line = strip_cr(line);
    if (blank_or_comment(line)) continue;
    words.insert(ascii_lower(line));
  }
  return words;
}

const std::set<std::string>& builtin_stopwords() {
  static const std::set<std::string> kWords = {
      "a", "about", "above", "after", "again", "against", "all", "also", "although",
      "am", "among", "an", "and", "any", "are", "aren't", "as", "at", "be", "because",
      "been", "before", "being", "below", "between", "both", "but", "by", "can",
      "can't", "cannot", "could", "couldn't", "did", "didn't", "do", "does",
      "doesn't", "doing", "don't", "down", "during", "each", "etc", "few", "for",
      "from", "further", "had", "hadn't", "has", "hasn't", "have", "haven't",
      "having", "he", "he'd", "he'll", "he's", "hence", "her", "here", "here's",
      "hers", "herself", "him", "himself", "his", "how", "how's", "however", "i",
      "i'd", "i'll", "i'm", "i've", "if", "in", "into", "is", "isn't", "it", "it's",
      "its", "itself", "let's", "may", "me", "might", "more", "most", "must",
      "mustn't", "my", "myself", "no", "nor", "not", "of", "off", "on", "once",
      "only", "or", "other", "ought", "our", "ours", "ourselves", "out", "over",
      "own", "same", "shall", "shan't", "she", "she'd", "she'll", "she's", "should",
      "shouldn't", "since", "so", "some", "such", "than", "that", "that's", "the",
      "their", "theirs", "them", "themselves", "then", "there", "there's", "these",
      "they", "they'd", "they'll", "they're", "they've", "therefore", "this",
      "those", "though", "through", "thus", "to", "too", "under", "until", "up",
      "upon", "very", "via", "was", "wasn't", "we", "we'd", "we'll", "we're",
      "we've", "were", "weren't", "what", "what's", "when", "when's", "where",
      "where's", "whereas", "whether", "which", "while", "who", "who's", "whom",
      "why", "why's", "will", "with", "within", "without", "won't", "would",
      "wouldn't", "yet", "you", "you'd", "you'll", "you're", "you've", "your",
      "yours", "yourself", "yourselves",
  };
  return kWords;
}

void ExtractionConfig::validate() const {
  if (num_keywords < 1) {
    throw std::invalid_argument("num_keywords must be >= 1");
  }
  if (max_ngram < 1 || max_ngram > 3) {
    throw std::invalid_argument("max_ngram must be 1, 2 or 3");
  }
  if (bigram_count_threshold < 1) {
    throw std::invalid_argument("bigram_count_threshold must be >= 1");
  }
}

std::string ExtractionConfig::normalize_token(const std::string& lowered) const {
  switch (normalization) {
    case Normalization::kNone:
      return lowered;
    case Normalization::kStem:
      return porter_stem(lowered);
    case Normalization::kLemmatize: {
      if (lemma_table) {
        const auto it = lemma_table->find(lowered);
        if (it != lemma_table->end()) return it->second;
      }
      return porter_stem(lowered);
    }
  }
  return lowered;
}

bool ExtractionConfig::is_stopword(const std::string& normalized) const {
  return stopwords && stopwords->count(normalized) > 0;
}

ExtractionConfig paper_default_config() {
  ExtractionConfig config;
  config.num_keywords = 10;
  config.min_token_length = 3;
  config.edit_distance_threshold = 2;
  config.word_length_diff_threshold = 3;
  config.max_ngram = 1;
  config.bigram_count_threshold = 1;
  config.normalization = Normalization::kLemmatize;
  config.stopwords = std::shared_ptr<const std::set<std::string>>(
      &builtin_stopwords(), [](const std::set<std::string>*) {});
  return config;
}

}  // namespace rakun
