#include "rakun/manifest.hpp"

#include <ctime>

namespace rakun {

nlohmann::json config_to_json(const ExtractionConfig& config) {
  nlohmann::json data = {
      {"num_keywords", config.num_keywords},
      {"min_token_length", config.min_token_length},
      {"edit_distance_threshold", config.edit_distance_threshold},
      {"word_length_diff_threshold", config.word_length_diff_threshold},
      {"max_ngram", config.max_ngram},
      {"bigram_count_threshold", config.bigram_count_threshold},
      {"normalization", to_string(config.normalization)},
  };
  if (config.stopwords) {
    data["stopwords"] = *config.stopwords;
  } else {
    data["stopwords"] = nullptr;
  }
  if (config.lemma_table) {
    data["lemma_table"] = *config.lemma_table;
  } else {
    data["lemma_table"] = nullptr;
  }
  return data;
}

ExtractionConfig config_from_json(const nlohmann::json& data) {
  ExtractionConfig config;
  config.num_keywords = data.at("num_keywords").get<int>();
  config.min_token_length = data.at("min_token_length").get<std::size_t>();
  config.edit_distance_threshold = data.at("edit_distance_threshold").get<std::size_t>();
  config.word_length_diff_threshold =
      data.at("word_length_diff_threshold").get<std::size_t>();
  config.max_ngram = data.at("max_ngram").get<int>();
  config.bigram_count_threshold = data.at("bigram_count_threshold").get<std::uint64_t>();
  config.normalization = normalization_from_string(data.at("normalization").get<std::string>());
  if (!data.at("stopwords").is_null()) {
    config.stopwords = std::make_shared<const std::set<std::string>>(
        data.at("stopwords").get<std::set<std::string>>());
  }
  if (!data.at("lemma_table").is_null()) {
    config.lemma_table =
        std::make_shared<const LemmaTable>(data.at("lemma_table").get<LemmaTable>());
  }
  config.validate();
  return config;
}

nlohmann::json config_summary_json(const ExtractionConfig& config) {
  return {
      {"num_keywords", config.num_keywords},
      {"min_token_length", config.min_token_length},
      {"edit_distance_threshold", config.edit_distance_threshold},
      {"word_length_diff_threshold", config.word_length_diff_threshold},
      {"max_ngram", config.max_ngram},
      {"bigram_count_threshold", config.bigram_count_threshold},
      {"normalization", to_string(config.normalization)},
      {"stopwords", config.stopwords ? config.stopwords->size() : std::size_t{0}},
      {"lemma_table", config.lemma_table ? config.lemma_table->size() : std::size_t{0}},
  };
}

nlohmann::json manifest_to_json(const RunManifest& manifest) {
  return {
      {"command", manifest.command},
      {"config", config_to_json(manifest.config)},
      {"inputs", manifest.inputs},
      {"output_path", manifest.output_path},
      {"tool_version", manifest.tool_version},
      {"timestamp", manifest.timestamp},
  };
}

RunManifest manifest_from_json(const nlohmann::json& data) {
  RunManifest manifest;
  manifest.command = data.at("command").get<std::string>();
  manifest.config = config_from_json(data.at("config"));
  manifest.inputs = data.at("inputs").get<std::vector<std::string>>();
  manifest.output_path = data.at("output_path").get<std::string>();
  manifest.tool_version = data.at("tool_version").get<std::string>();
  manifest.timestamp = data.at("timestamp").get<std::string>();
  return manifest;
}

bool config_equal(const ExtractionConfig& a, const ExtractionConfig& b) {
  const auto same_set = [](const auto& x, const auto& y) {
    if (!x && !y) return true;
    if (!x || !y) return false;
    return *x == *y;
  };
  return a.num_keywords == b.num_keywords && a.min_token_length == b.min_token_length &&
         a.edit_distance_threshold == b.edit_distance_threshold &&
         a.word_length_diff_threshold == b.word_length_diff_threshold &&
         a.max_ngram == b.max_ngram &&
         a.bigram_count_threshold == b.bigram_count_threshold &&
         a.normalization == b.normalization && same_set(a.stopwords, b.stopwords) &&
         same_set(a.lemma_table, b.lemma_table);
}

std::string current_timestamp_utc() {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

}  // namespace rakun
