#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rakun/config.hpp"

namespace rakun {

// Provenance record written next to a CLI run's output.
struct RunManifest {
  std::string command;
  ExtractionConfig config;
  std::vector<std::string> inputs;
  std::string output_path;  // empty: stdout
  std::string tool_version;
  std::string timestamp;  // ISO 8601 UTC
};

// Lossless: embeds the stopword list and lemma table so the config
// round-trips by value.
nlohmann::json config_to_json(const ExtractionConfig& config);
ExtractionConfig config_from_json(const nlohmann::json& data);

// Compact form for result records: table fields shrink to entry counts.
nlohmann::json config_summary_json(const ExtractionConfig& config);

nlohmann::json manifest_to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const nlohmann::json& data);

// Value equality, dereferencing the shared tables.
bool config_equal(const ExtractionConfig& a, const ExtractionConfig& b);

std::string current_timestamp_utc();

}  // namespace rakun
