#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "rakun/config.hpp"
#include "rakun/keywords.hpp"

namespace rakun {

struct GoldDocument {
  std::string id;
  std::string body;
  std::set<std::string> gold_keys;  // trimmed, lowercased, one per line on disk

  // Documents with an empty key file are loaded but never scored.
  bool scoreable() const { return !gold_keys.empty(); }
};

// Layout: <root>/docsutf8/<id>.txt with <root>/keys/<id>.key. Documents
// lacking a key file are skipped with a warning on stderr. Throws
// std::runtime_error when either subdirectory is missing. Result is sorted
// by id.
std::vector<GoldDocument> load_dataset(const std::filesystem::path& root);

struct EvalMetrics {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  static EvalMetrics from_counts(std::uint64_t tp, std::uint64_t fp, std::uint64_t fn);
};

// Exact set matching after token-wise stemming and lowercasing on both
// sides. tp counts the intersection; fp the remaining predictions (the
// stemmed prediction set deduplicates collapsing forms); fn the missed gold
// keys, so recall's denominator is the gold-key count.
EvalMetrics score_document(const std::vector<ScoredKeyword>& predicted,
                           const GoldDocument& gold);

// Micro-aggregation: sums the per-document counts of every scoreable
// document, then derives P/R/F1 once. threads = 0 picks the hardware
// concurrency. Throws std::invalid_argument when docs is empty.
EvalMetrics evaluate_dataset(const std::vector<GoldDocument>& docs,
                             const ExtractionConfig& config, unsigned threads = 0);

// Grid dimensions searched during cross-validation. The defaults mirror the
// published protocol (lemmatization yes/no maps to the lemmatize/none
// modes); the remaining config fields come from the base config. When
// num_tokens is 1 the count threshold plays no role and is not expanded.
struct GridSpec {
  std::vector<int> num_tokens = {1, 2, 3};
  std::vector<std::uint64_t> bigram_count_threshold = {1, 2};
  std::vector<std::size_t> word_length_diff = {0, 2, 4};
  std::vector<std::size_t> edit_distance = {2, 3};
  std::vector<Normalization> normalization = {Normalization::kLemmatize,
                                              Normalization::kNone};

  // One-point grid pinning every dimension to the given config.
  static GridSpec single(const ExtractionConfig& config);
};

// Expansion in grid order (the tie-break order for equal train F1):
// num_tokens, then bigram_count_threshold, word_length_diff, edit_distance,
// normalization.
std::vector<ExtractionConfig> expand_grid(const GridSpec& grid,
                                          const ExtractionConfig& base);

struct FoldOutcome {
  int fold = 0;
  ExtractionConfig best_config;  // train-split grid winner
  double train_f1 = 0.0;
  EvalMetrics test_metrics;
};

struct CrossValidationResult {
  std::vector<FoldOutcome> folds;
  EvalMetrics overall;  // micro-aggregated over every test fold
};

// Seeded shuffle of the scoreable documents into contiguous folds; per fold,
// grid search maximizes train F1 (grid order breaks ties), the winner is
// applied to the held-out fold, and the test counts accumulate into the
// overall metrics. Documents without gold keys are excluded before the
// shuffle. Throws std::invalid_argument when folds < 2 or folds exceeds the
// number of scoreable documents.
CrossValidationResult cross_validate(const std::vector<GoldDocument>& docs,
                                     const GridSpec& grid, const ExtractionConfig& base,
                                     int folds, unsigned seed, unsigned threads = 0);

}  // namespace rakun
