#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rakun/config.hpp"
#include "rakun/eval.hpp"
#include "rakun/graph_io.hpp"
#include "rakun/keywords.hpp"
#include "rakun/manifest.hpp"
#include "rakun/version.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct ConfigFlags {
  std::optional<int> top_k;
  std::optional<std::size_t> min_token_length;
  std::optional<std::size_t> edit_distance;
  std::optional<std::size_t> len_diff;
  std::optional<int> max_ngram;
  std::optional<std::uint64_t> bigram_threshold;
  std::optional<std::string> normalization;
  std::optional<std::string> lemma_table;
  std::optional<std::string> stopwords;
  std::string preset = "none";
};

void add_config_flags(CLI::App* cmd, ConfigFlags& flags) {
  cmd->add_option("--top-k", flags.top_k, "Number of keywords to report (k)");
  cmd->add_option("--min-token-length", flags.min_token_length,
                  "Drop tokens shorter than this many characters");
  cmd->add_option("--edit-distance", flags.edit_distance,
                  "Meta-vertex merge: maximum Levenshtein distance");
  cmd->add_option("--len-diff", flags.len_diff,
                  "Meta-vertex merge: maximum word length difference");
  cmd->add_option("--max-ngram", flags.max_ngram, "Longest keyword n-gram (1-3)")
      ->check(CLI::Range(1, 3));
  cmd->add_option("--bigram-threshold", flags.bigram_threshold,
                  "Keep bigrams whose count strictly exceeds this");
  cmd->add_option("--normalization", flags.normalization, "Token normalization mode")
      ->check(CLI::IsMember({"none", "stem", "lemmatize"}));
  cmd->add_option("--lemma-table", flags.lemma_table,
                  "Lemma TSV (surface<TAB>lemma); env RAKUN_LEMMA_TABLE as fallback");
  cmd->add_option("--stopwords", flags.stopwords,
                  "Stopword list file, or 'builtin' / 'none'");
  cmd->add_option("--preset", flags.preset, "Named configuration bundle")
      ->check(CLI::IsMember({"none", "paper-default"}));
}

rakun::ExtractionConfig resolve_config(const ConfigFlags& flags) {
  rakun::ExtractionConfig config;
  if (flags.preset == "paper-default") config = rakun::paper_default_config();
  if (flags.top_k) config.num_keywords = *flags.top_k;
  if (flags.min_token_length) config.min_token_length = *flags.min_token_length;
  if (flags.edit_distance) config.edit_distance_threshold = *flags.edit_distance;
  if (flags.len_diff) config.word_length_diff_threshold = *flags.len_diff;
  if (flags.max_ngram) config.max_ngram = *flags.max_ngram;
  if (flags.bigram_threshold) config.bigram_count_threshold = *flags.bigram_threshold;
  if (flags.normalization) {
    config.normalization = rakun::normalization_from_string(*flags.normalization);
  }
  if (flags.stopwords) {
    if (*flags.stopwords == "none") {
      config.stopwords.reset();
    } else if (*flags.stopwords == "builtin") {
      config.stopwords = std::shared_ptr<const std::set<std::string>>(
          &rakun::builtin_stopwords(), [](const std::set<std::string>*) {});
    } else {
      config.stopwords = std::make_shared<const std::set<std::string>>(
          rakun::load_stopwords(*flags.stopwords));
    }
  }
  std::string lemma_path = flags.lemma_table.value_or("");
  if (lemma_path.empty()) {
    const char* env = std::getenv("RAKUN_LEMMA_TABLE");
    if (env != nullptr && *env != '\0') lemma_path = env;
  }
  if (!lemma_path.empty()) {
    config.lemma_table =
        std::make_shared<const rakun::LemmaTable>(rakun::load_lemma_table(lemma_path));
  }
  config.validate();
  return config;
}

// Writes to --output when given, stdout otherwise.
class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) {
        throw std::runtime_error("cannot open output file: " + path);
      }
      out_ = &file_;
    }
  }

  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_ = &std::cout;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read input file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_manifest(const std::string& manifest_path, const std::string& command,
                    const rakun::ExtractionConfig& config,
                    const std::vector<std::string>& inputs, const std::string& output_path) {
  if (manifest_path.empty()) return;
  rakun::RunManifest manifest;
  manifest.command = command;
  manifest.config = config;
  manifest.inputs = inputs;
  manifest.output_path = output_path;
  manifest.tool_version = rakun::kToolVersion;
  manifest.timestamp = rakun::current_timestamp_utc();
  std::ofstream out(manifest_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open manifest file: " + manifest_path);
  }
  out << rakun::manifest_to_json(manifest).dump(2) << "\n";
}

nlohmann::json keywords_json(const std::vector<rakun::ScoredKeyword>& keywords) {
  nlohmann::json list = nlohmann::json::array();
  for (const rakun::ScoredKeyword& keyword : keywords) {
    list.push_back({{"terms", keyword.terms}, {"score", keyword.score}});
  }
  return list;
}

nlohmann::json metrics_json(const rakun::EvalMetrics& metrics) {
  return {
      {"tp", metrics.tp},
      {"fp", metrics.fp},
      {"gold_total", metrics.tp + metrics.fn},
      {"precision", metrics.precision},
      {"recall", metrics.recall},
      {"f1", metrics.f1},
  };
}

int run_extract(const std::string& input, const rakun::ExtractionConfig& config,
                const std::string& output, const std::string& manifest_path) {
  const std::filesystem::path in(input);
  std::vector<std::pair<std::string, std::filesystem::path>> files;
  if (std::filesystem::is_directory(in)) {
    for (const auto& entry : std::filesystem::directory_iterator(in)) {
      if (entry.is_regular_file()) {
        files.emplace_back(entry.path().filename().string(), entry.path());
      }
    }
    std::sort(files.begin(), files.end());
  } else if (std::filesystem::is_regular_file(in)) {
    files.emplace_back(input, in);
  } else {
    throw std::runtime_error("input is not a readable file or directory: " + input);
  }

  OutputSink sink(output);
  for (const auto& [id, path] : files) {
    const std::vector<rakun::ScoredKeyword> keywords = rakun::extract(read_file(path), config);
    const nlohmann::json record = {{"id", id}, {"keywords", keywords_json(keywords)}};
    sink.stream() << record.dump() << "\n";
  }
  write_manifest(manifest_path, "extract", config, {input}, output);
  return kExitSuccess;
}

int run_evaluate(const std::string& dataset, const rakun::ExtractionConfig& config,
                 std::optional<int> cv, bool use_grid, unsigned seed, unsigned threads,
                 const std::string& output, const std::string& manifest_path) {
  const std::vector<rakun::GoldDocument> docs = rakun::load_dataset(dataset);
  if (docs.empty()) {
    throw std::runtime_error("dataset has no scoreable documents: " + dataset);
  }

  OutputSink sink(output);
  nlohmann::json record = {{"dataset", dataset}, {"documents", docs.size()}};
  if (!cv) {
    const rakun::EvalMetrics metrics = rakun::evaluate_dataset(docs, config, threads);
    record["config"] = rakun::config_summary_json(config);
    record.update(metrics_json(metrics));
  } else {
    const rakun::GridSpec grid =
        use_grid ? rakun::GridSpec{} : rakun::GridSpec::single(config);
    const rakun::CrossValidationResult result =
        rakun::cross_validate(docs, grid, config, *cv, seed, threads);
    nlohmann::json fold_results = nlohmann::json::array();
    for (const rakun::FoldOutcome& fold : result.folds) {
      fold_results.push_back({{"fold", fold.fold},
                              {"config", rakun::config_summary_json(fold.best_config)},
                              {"train_f1", fold.train_f1},
                              {"metrics", metrics_json(fold.test_metrics)}});
    }
    record["cv"] = {{"folds", *cv},
                    {"seed", seed},
                    {"grid_size", rakun::expand_grid(grid, config).size()},
                    {"fold_results", fold_results},
                    {"overall", metrics_json(result.overall)}};
  }
  sink.stream() << record.dump() << "\n";
  write_manifest(manifest_path, "evaluate", config, {dataset}, output);
  return kExitSuccess;
}

int run_export(const std::string& input, const rakun::ExtractionConfig& config,
               const std::string& format, const std::string& output,
               const std::string& manifest_path) {
  const rakun::DocumentAnalysis analysis = rakun::analyze_document(read_file(input), config);
  const std::set<std::string> keyword_vertices =
      rakun::top_k_vertices(analysis.scores, config.num_keywords);

  OutputSink sink(output);
  if (format == "dot") {
    sink.stream() << rakun::to_dot(analysis.graph, analysis.scores, keyword_vertices);
  } else if (format == "graphml") {
    sink.stream() << rakun::to_graphml(analysis.graph, analysis.scores, keyword_vertices);
  } else {
    sink.stream()
        << rakun::graph_to_json(analysis.graph, analysis.scores, keyword_vertices).dump()
        << "\n";
  }
  write_manifest(manifest_path, "export-graph", config, {input}, output);
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RaKUn: rank-based keyword extraction via unsupervised graph aggregates"};
  app.require_subcommand(1);

  ConfigFlags extract_flags;
  std::string extract_input;
  std::string extract_output;
  std::string extract_manifest;
  CLI::App* cmd_extract = app.add_subcommand("extract", "Extract keywords from a file or directory");
  cmd_extract->add_option("input", extract_input, "Document file or directory")->required();
  add_config_flags(cmd_extract, extract_flags);
  cmd_extract->add_option("--output", extract_output, "Write records here instead of stdout");
  cmd_extract->add_option("--manifest", extract_manifest, "Write a run manifest to this path");

  ConfigFlags eval_flags;
  std::string eval_dataset;
  std::string eval_output;
  std::string eval_manifest;
  std::optional<int> eval_cv;
  bool eval_grid = false;
  unsigned eval_seed = 1;
  unsigned eval_threads = 0;
  CLI::App* cmd_evaluate =
      app.add_subcommand("evaluate", "Score extraction against a gold-standard dataset");
  cmd_evaluate->add_option("dataset", eval_dataset, "Dataset root (docsutf8/ + keys/)")
      ->required();
  add_config_flags(cmd_evaluate, eval_flags);
  cmd_evaluate->add_option("--cv", eval_cv, "Cross-validate with this many folds");
  cmd_evaluate->add_flag("--grid", eval_grid, "Grid-search the standard parameter grid");
  cmd_evaluate->add_option("--seed", eval_seed, "Shuffle seed for --cv");
  cmd_evaluate->add_option("--threads", eval_threads, "Worker threads (0 = auto)");
  cmd_evaluate->add_option("--output", eval_output, "Write the report here instead of stdout");
  cmd_evaluate->add_option("--manifest", eval_manifest, "Write a run manifest to this path");

  ConfigFlags export_flags;
  std::string export_input;
  std::string export_output;
  std::string export_manifest;
  std::string export_format = "dot";
  CLI::App* cmd_export =
      app.add_subcommand("export-graph", "Serialize the post-merge corpus graph");
  cmd_export->add_option("input", export_input, "Document file")->required();
  add_config_flags(cmd_export, export_flags);
  cmd_export->add_option("--format", export_format, "Serialization format")
      ->check(CLI::IsMember({"dot", "graphml", "json"}));
  cmd_export->add_option("--output", export_output, "Write the graph here instead of stdout");
  cmd_export->add_option("--manifest", export_manifest, "Write a run manifest to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_extract->parsed()) {
      return run_extract(extract_input, resolve_config(extract_flags), extract_output,
                         extract_manifest);
    }
    if (cmd_evaluate->parsed()) {
      return run_evaluate(eval_dataset, resolve_config(eval_flags), eval_cv, eval_grid,
                          eval_seed, eval_threads, eval_output, eval_manifest);
    }
    if (cmd_export->parsed()) {
      return run_export(export_input, resolve_config(export_flags), export_format,
                        export_output, export_manifest);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
