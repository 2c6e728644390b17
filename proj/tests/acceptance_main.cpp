// Acceptance gate: one PASS/FAIL line per criterion, exit 0 only when every
// executed criterion holds. Dataset criteria read RAKUN_DATASETS_DIR or the
// --datasets-default path and fail honestly when the corpora are absent.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rakun/centrality.hpp"
#include "rakun/config.hpp"
#include "rakun/eval.hpp"
#include "rakun/graph.hpp"
#include "rakun/keywords.hpp"
#include "rakun/meta_vertex.hpp"
#include "rakun/tokenizer.hpp"
#include "support/reference_centrality.hpp"

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Criterion {
  std::string name;
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format_double(double value, int precision = 4) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(precision);
  out << value;
  return out.str();
}

// ---------------------------------------------------------------------------
// 1. Exact-oracle equivalence for load centrality.

Criterion centrality_oracle() {
  const auto start = Clock::now();
  std::mt19937 rng(20240819);
  constexpr int kTrials = 500;
  constexpr double kTol = 1e-9;
  double max_diff = 0.0;

  for (int trial = 0; trial < kTrials; ++trial) {
    const rakun::CorpusGraph graph = testsupport::random_digraph(rng, 7);
    const rakun::CentralityScores exact = rakun::brute_force_load(graph);
    const rakun::CentralityScores fast = rakun::load_centrality(graph);
    for (const auto& [label, value] : exact) {
      const double diff = std::fabs(fast.at(label) - value);
      if (diff > max_diff) max_diff = diff;
    }
  }

  rakun::CorpusGraph path;
  path.add_edge("a", "b");
  path.add_edge("b", "c");
  const rakun::CentralityScores path_scores = rakun::load_centrality(path);
  const bool path_ok = path_scores.at("a") == 0.0 && path_scores.at("b") == 1.0 &&
                       path_scores.at("c") == 0.0;

  rakun::CorpusGraph cycle;
  cycle.add_edge("a", "b");
  cycle.add_edge("b", "c");
  cycle.add_edge("c", "d");
  cycle.add_edge("d", "a");
  bool cycle_ok = true;
  for (const auto& [label, value] : rakun::load_centrality(cycle)) {
    cycle_ok = cycle_ok && value == 3.0;
  }

  const double elapsed = seconds_since(start);
  Criterion result;
  result.name = "centrality oracle equivalence";
  result.pass = max_diff <= kTol && path_ok && cycle_ok && elapsed < 10.0;
  result.detail = std::to_string(kTrials) + " random graphs <= 7 vertices, max deviation " +
                  format_double(max_diff, 12) + ", path/cycle cases " +
                  (path_ok && cycle_ok ? "exact" : "WRONG") + ", " +
                  format_double(elapsed, 2) + "s";
  return result;
}

// ---------------------------------------------------------------------------
// 2. Load centrality and betweenness disagree on a concrete witness graph.

Criterion load_betweenness_witness() {
  rakun::CorpusGraph graph;
  graph.add_edge("s", "a");
  graph.add_edge("s", "b");
  graph.add_edge("a", "c");
  graph.add_edge("a", "d");
  graph.add_edge("b", "c");
  graph.add_edge("c", "t");
  graph.add_edge("d", "t");

  const rakun::CentralityScores load = rakun::load_centrality(graph);
  const std::map<std::string, double> betweenness = testsupport::reference_betweenness(graph);

  const std::map<std::string, double> expected_load = {
      {"s", 0.0}, {"a", 2.0}, {"b", 1.0}, {"c", 2.25}, {"d", 0.75}, {"t", 0.0}};
  const std::map<std::string, double> expected_betweenness = {
      {"s", 0.0}, {"a", 13.0 / 6.0}, {"b", 5.0 / 6.0},
      {"c", 13.0 / 6.0}, {"d", 5.0 / 6.0}, {"t", 0.0}};

  bool load_ok = true;
  for (const auto& [label, value] : expected_load) {
    load_ok = load_ok && std::fabs(load.at(label) - value) <= 1e-12;
  }
  bool betweenness_ok = true;
  for (const auto& [label, value] : expected_betweenness) {
    betweenness_ok = betweenness_ok && std::fabs(betweenness.at(label) - value) <= 1e-12;
  }
  bool diverges = true;
  for (const std::string label : {"a", "b", "c", "d"}) {
    diverges = diverges && std::fabs(load.at(label) - betweenness.at(label)) > 0.05;
  }

  Criterion result;
  result.name = "load vs betweenness divergence witness";
  result.pass = load_ok && betweenness_ok && diverges;
  result.detail = "7-edge graph: load(a)=" + format_double(load.at("a"), 3) +
                  " vs betweenness(a)=" + format_double(betweenness.at("a"), 3) +
                  ", load(c)=" + format_double(load.at("c"), 3) +
                  " vs betweenness(c)=" + format_double(betweenness.at("c"), 3) +
                  ", every interior vertex differs";
  return result;
}

// ---------------------------------------------------------------------------
// 3. Meta-vertex merging preserves the integer bookkeeping on fuzzed graphs.

Criterion meta_vertex_invariants() {
  std::mt19937 rng(7771234);
  constexpr int kTrials = 300;
  int violations = 0;

  rakun::ExtractionConfig tokenizer_config;  // defaults: no filtering
  tokenizer_config.min_token_length = 0;

  for (int trial = 0; trial < kTrials; ++trial) {
    std::uniform_int_distribution<int> vocab_size(2, 12);
    std::uniform_int_distribution<int> word_len(1, 5);
    std::uniform_int_distribution<int> letter(0, 1);
    std::vector<std::string> vocab(vocab_size(rng));
    for (std::string& word : vocab) {
      const int len = word_len(rng);
      for (int i = 0; i < len; ++i) word.push_back(letter(rng) == 0 ? 'a' : 'b');
    }
    std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
    std::string text;
    for (int step = 0; step < 30; ++step) {
      if (!text.empty()) text.push_back(' ');
      text += vocab[pick(rng)];
    }

    const rakun::CorpusGraph graph =
        rakun::build_graph(rakun::tokenize(text, tokenizer_config));
    if (graph.num_vertices() == 0) continue;
    const rakun::CentralityScores scores = rakun::load_centrality(graph);

    std::uniform_int_distribution<std::size_t> l_dist(0, 3);
    std::uniform_int_distribution<std::size_t> alpha_dist(1, 3);
    const std::set<rakun::LabelPair> pairs =
        rakun::candidate_pairs(graph, l_dist(rng), alpha_dist(rng));
    const rakun::MergeResult merged = rakun::merge_meta_vertices(graph, pairs, scores);

    const bool vertices_ok = merged.graph.num_vertices() <= graph.num_vertices();
    const bool edges_ok = merged.graph.num_edges() <= graph.num_edges();
    const bool weight_ok = merged.graph.total_edge_weight() +
                               merged.dropped_self_loop_weight ==
                           graph.total_edge_weight();
    if (!(vertices_ok && edges_ok && weight_ok)) ++violations;
  }

  Criterion result;
  result.name = "meta-vertex merge invariants";
  result.pass = violations == 0;
  result.detail = std::to_string(kTrials) +
                  " fuzzed graphs: |V|, |E| never grow and edge weight is conserved up to "
                  "dropped self-loops (" +
                  std::to_string(violations) + " violations)";
  return result;
}

// ---------------------------------------------------------------------------
// Dataset criteria.

fs::path datasets_root(const std::string& fallback) {
  const char* env = std::getenv("RAKUN_DATASETS_DIR");
  if (env != nullptr && *env != '\0') return fs::path(env);
  return fs::path(fallback);
}

bool dataset_present(const fs::path& dataset) {
  return fs::is_directory(dataset / "docsutf8") && fs::is_directory(dataset / "keys");
}

Criterion dataset_reproduction(const fs::path& root, const std::string& dataset_name,
                               double target_f1, double tolerance, double budget_seconds) {
  Criterion result;
  result.name = dataset_name + " benchmark F1@10";
  const fs::path dataset = root / dataset_name;
  if (!dataset_present(dataset)) {
    result.pass = false;
    result.detail = "blocked: dataset not found at " + dataset.string() +
                    " (expected docsutf8/ and keys/)";
    return result;
  }

  const auto start = Clock::now();
  const std::vector<rakun::GoldDocument> docs = rakun::load_dataset(dataset);
  const rakun::EvalMetrics metrics =
      rakun::evaluate_dataset(docs, rakun::paper_default_config(), 0);
  const double elapsed = seconds_since(start);

  const bool f1_ok = std::fabs(metrics.f1 - target_f1) <= tolerance;
  const bool time_ok = elapsed < budget_seconds;
  result.pass = f1_ok && time_ok;
  result.detail = "F1@10 = " + format_double(metrics.f1) + " (target " +
                  format_double(target_f1, 3) + " +/- " + format_double(tolerance, 2) +
                  "), " + std::to_string(docs.size()) + " documents, " +
                  format_double(elapsed, 1) + "s (budget " +
                  format_double(budget_seconds, 0) + "s)";
  return result;
}

std::string describe_config(const rakun::ExtractionConfig& config) {
  return "p=" + std::to_string(config.max_ngram) +
         " f=" + std::to_string(config.bigram_count_threshold) +
         " l=" + std::to_string(config.word_length_diff_threshold) +
         " a=" + std::to_string(config.edit_distance_threshold) + " norm=" +
         rakun::to_string(config.normalization);
}

Criterion default_config_recovery(const fs::path& root) {
  Criterion result;
  result.name = "cross-validated default-config recovery";
  const fs::path dataset = root / "wiki20";
  if (!dataset_present(dataset)) {
    result.pass = false;
    result.detail = "blocked: dataset not found at " + dataset.string() +
                    " (expected docsutf8/ and keys/)";
    return result;
  }

  const std::vector<rakun::GoldDocument> docs = rakun::load_dataset(dataset);
  const rakun::CrossValidationResult cv = rakun::cross_validate(
      docs, rakun::GridSpec{}, rakun::paper_default_config(), 5, 1, 0);

  // The published winning setting, restated over the searched grid: unigram
  // keywords, edit distance 2, lemmatization on. The grid holds length-diff
  // values {0,2,4}, so l is reported but not gated.
  std::map<std::string, int> winner_counts;
  int marker_folds = 0;
  std::string winners;
  for (const rakun::FoldOutcome& fold : cv.folds) {
    const std::string description = describe_config(fold.best_config);
    ++winner_counts[description];
    if (fold.best_config.max_ngram == 1 &&
        fold.best_config.edit_distance_threshold == 2 &&
        fold.best_config.normalization == rakun::Normalization::kLemmatize) {
      ++marker_folds;
    }
    if (!winners.empty()) winners += "; ";
    winners += "fold " + std::to_string(fold.fold) + ": " + description;
  }
  int top_count = 0;
  for (const auto& [description, count] : winner_counts) {
    if (count > top_count) top_count = count;
  }

  const bool stable = top_count >= 3;
  const bool marker_majority = marker_folds >= 3;
  const bool f1_ok = std::fabs(cv.overall.f1 - 0.190) <= 0.08;
  result.pass = stable || marker_majority || f1_ok;
  result.detail = winners + "; reference setting on " + std::to_string(marker_folds) +
                  "/5 folds, modal winner on " + std::to_string(top_count) +
                  "/5, overall F1 = " + format_double(cv.overall.f1);
  return result;
}

// ---------------------------------------------------------------------------
// 7. Byte-identical reruns for every CLI command.

struct CommandRun {
  int status = -1;
  std::string out;
};

CommandRun run_command(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  CommandRun run;
  if (pipe == nullptr) return run;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) run.out.append(buffer, n);
  const int raw = pclose(pipe);
  run.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return run;
}

Criterion cli_determinism(const std::string& argv0) {
  Criterion result;
  result.name = "byte-identical CLI reruns";

  std::string cli;
  if (const char* env = std::getenv("RAKUN_CLI"); env != nullptr && *env != '\0') {
    cli = env;
  } else {
    cli = (fs::path(argv0).parent_path() / "rakun").string();
  }
  std::string fixtures = "tests/data";
  if (const char* env = std::getenv("RAKUN_TEST_DATA"); env != nullptr && *env != '\0') {
    fixtures = env;
  }
  if (!fs::exists(cli)) {
    result.pass = false;
    result.detail = "blocked: CLI binary not found at " + cli;
    return result;
  }

  const std::string doc = fixtures + "/minicorpus/docsutf8/doc_c.txt";
  const std::string corpus_dir = fixtures + "/minicorpus/docsutf8";
  const std::string dataset = fixtures + "/minicorpus";
  const std::vector<std::string> commands = {
      cli + " extract " + doc + " --top-k 5 --max-ngram 3 2>/dev/null",
      cli + " extract " + corpus_dir + " 2>/dev/null",
      cli + " evaluate " + dataset + " --top-k 3 2>/dev/null",
      cli + " evaluate " + dataset + " --cv 3 --seed 9 --grid --threads 4 2>/dev/null",
      cli + " export-graph " + doc + " --format dot 2>/dev/null",
      cli + " export-graph " + doc + " --format graphml 2>/dev/null",
      cli + " export-graph " + doc + " --format json 2>/dev/null",
  };

  int mismatches = 0;
  int failures = 0;
  for (const std::string& command : commands) {
    const CommandRun first = run_command(command);
    const CommandRun second = run_command(command);
    if (first.status != 0 || second.status != 0) ++failures;
    if (first.out != second.out || first.out.empty()) ++mismatches;
  }

  result.pass = mismatches == 0 && failures == 0;
  result.detail = std::to_string(commands.size()) +
                  " commands run twice: " + std::to_string(mismatches) + " mismatches, " +
                  std::to_string(failures) + " nonzero exits";
  return result;
}

// ---------------------------------------------------------------------------
// 8. Hand-derived golden documents, asserted exactly.

bool keywords_equal(const std::vector<rakun::ScoredKeyword>& got,
                    const std::vector<std::pair<std::string, double>>& expected) {
  if (got.size() != expected.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (rakun::joined_terms(got[i]) != expected[i].first) return false;
    if (got[i].score != expected[i].second) return false;
  }
  return true;
}

Criterion golden_documents() {
  rakun::ExtractionConfig small;
  small.num_keywords = 3;

  const bool doc_a = keywords_equal(
      rakun::extract("alpha beta gamma delta", small),
      {{"beta", 1.0}, {"alpha", 0.0}, {"gamma", 0.0}});

  const bool doc_b = keywords_equal(
      rakun::extract("Mechanic fixes mechanical parts", small),
      {{"mechanical", 1.0}, {"fixes", 0.0}, {"parts", 0.0}});

  rakun::ExtractionConfig trigram;
  trigram.num_keywords = 4;
  trigram.max_ngram = 3;
  const bool doc_c = keywords_equal(
      rakun::extract("data mining finds data mining gold", trigram),
      {{"mining", 3.0}, {"data mining", 2.5}, {"data", 2.0}, {"data mining finds", 2.0}});

  Criterion result;
  result.name = "golden document extractions";
  result.pass = doc_a && doc_b && doc_c;
  result.detail = std::string("merge-and-rank doc ") + (doc_a ? "ok" : "WRONG") +
                  ", representative-surface doc " + (doc_b ? "ok" : "WRONG") +
                  ", trigram doc " + (doc_c ? "ok" : "WRONG") +
                  " (exact scores and order)";
  return result;
}

// A criterion that throws is a failure, not a crashed report.
template <typename Fn>
Criterion run_safely(const std::string& name, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return {name, false, std::string("unhandled error: ") + e.what()};
  }
}

}  // namespace

int main(int argc, char** argv) {
  bool skip_datasets = false;
  bool only_datasets = false;
  std::string datasets_default = "data";
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--skip-datasets") {
      skip_datasets = true;
    } else if (arg == "--only-datasets") {
      only_datasets = true;
    } else if (arg == "--datasets-default" && i + 1 < argc) {
      datasets_default = argv[++i];
    } else {
      std::cerr << "usage: " << argv[0]
                << " [--skip-datasets] [--only-datasets] [--datasets-default <dir>]\n";
      return 2;
    }
  }

  std::vector<Criterion> results;
  std::vector<std::string> skipped;

  if (!only_datasets) {
    results.push_back(run_safely("centrality oracle equivalence", centrality_oracle));
    results.push_back(
        run_safely("load vs betweenness divergence witness", load_betweenness_witness));
    results.push_back(run_safely("meta-vertex merge invariants", meta_vertex_invariants));
  }
  if (skip_datasets) {
    skipped = {"wiki20 benchmark F1@10", "fao30 benchmark F1@10",
               "cross-validated default-config recovery"};
  } else {
    const fs::path root = datasets_root(datasets_default);
    results.push_back(run_safely("wiki20 benchmark F1@10", [&] {
      return dataset_reproduction(root, "wiki20", 0.190, 0.08, 120.0);
    }));
    results.push_back(run_safely("fao30 benchmark F1@10", [&] {
      return dataset_reproduction(root, "fao30", 0.233, 0.08, 600.0);
    }));
    results.push_back(run_safely("cross-validated default-config recovery",
                                 [&] { return default_config_recovery(root); }));
  }
  if (!only_datasets) {
    results.push_back(
        run_safely("byte-identical CLI reruns", [&] { return cli_determinism(argv[0]); }));
    results.push_back(run_safely("golden document extractions", golden_documents));
  }

  int failures = 0;
  for (const Criterion& criterion : results) {
    if (!criterion.pass) ++failures;
    std::cout << (criterion.pass ? "PASS" : "FAIL") << ": " << criterion.name << " ("
              << criterion.detail << ")\n";
  }
  for (const std::string& name : skipped) {
    std::cout << "SKIP: " << name << " (dataset criteria disabled by --skip-datasets)\n";
  }
  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) +
                                    " criterion(s) failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
