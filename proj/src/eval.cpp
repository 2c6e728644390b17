#include "rakun/eval.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "rakun/porter_stemmer.hpp"
#include "rakun/unicode.hpp"

namespace rakun {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs task(i) for i in [0, count) on up to `threads` workers. Tasks write
// to disjoint slots, so no synchronization beyond the shared index is
// needed.
template <typename Task>
void parallel_for(std::size_t count, unsigned threads, const Task& task) {
  threads = std::min<unsigned>(threads, static_cast<unsigned>(count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&next, count, &task] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        task(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

std::set<std::string> stemmed_prediction_set(const std::vector<ScoredKeyword>& predicted) {
  std::set<std::string> out;
  for (const ScoredKeyword& keyword : predicted) {
    out.insert(stem_phrase(ascii_lower(joined_terms(keyword))));
  }
  return out;
}

std::set<std::string> stemmed_gold_set(const GoldDocument& gold) {
  std::set<std::string> out;
  for (const std::string& key : gold.gold_keys) {
    out.insert(stem_phrase(ascii_lower(key)));
  }
  return out;
}

struct Counts {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;

  Counts& operator+=(const Counts& other) {
    tp += other.tp;
    fp += other.fp;
    fn += other.fn;
    return *this;
  }
};

Counts count_document(const std::vector<ScoredKeyword>& predicted, const GoldDocument& gold) {
  const std::set<std::string> pred = stemmed_prediction_set(predicted);
  const std::set<std::string> gold_set = stemmed_gold_set(gold);
  std::uint64_t tp = 0;
  for (const std::string& key : pred) {
    if (gold_set.count(key) > 0) ++tp;
  }
  return Counts{tp, pred.size() - tp, gold_set.size() - tp};
}

}  // namespace

std::vector<GoldDocument> load_dataset(const std::filesystem::path& root) {
  const std::filesystem::path docs_dir = root / "docsutf8";
  const std::filesystem::path keys_dir = root / "keys";
  if (!std::filesystem::is_directory(docs_dir)) {
    throw std::runtime_error("dataset root " + root.string() + " has no docsutf8/ directory");
  }
  if (!std::filesystem::is_directory(keys_dir)) {
    throw std::runtime_error("dataset root " + root.string() + " has no keys/ directory");
  }

  std::vector<std::filesystem::path> doc_paths;
  for (const auto& entry : std::filesystem::directory_iterator(docs_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      doc_paths.push_back(entry.path());
    }
  }
  std::sort(doc_paths.begin(), doc_paths.end());

  std::vector<GoldDocument> docs;
  for (const auto& doc_path : doc_paths) {
    const std::string id = doc_path.stem().string();
    const std::filesystem::path key_path = keys_dir / (id + ".key");
    if (!std::filesystem::is_regular_file(key_path)) {
      std::cerr << "warning: skipping " << id << ": no key file at " << key_path.string()
                << "\n";
      continue;
    }
    GoldDocument doc;
    doc.id = id;
    doc.body = read_file(doc_path);
    std::istringstream keys(read_file(key_path));
    std::string line;
    while (std::getline(keys, line)) {
      const std::string key = trim(line);
      if (!key.empty()) doc.gold_keys.insert(ascii_lower(key));
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

EvalMetrics EvalMetrics::from_counts(std::uint64_t tp, std::uint64_t fp, std::uint64_t fn) {
  EvalMetrics m;
  m.tp = tp;
  m.fp = fp;
  m.fn = fn;
  m.precision = tp + fp > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
  m.recall = tp + fn > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
  m.f1 = m.precision + m.recall > 0.0
             ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  return m;
}

EvalMetrics score_document(const std::vector<ScoredKeyword>& predicted,
                           const GoldDocument& gold) {
  const Counts counts = count_document(predicted, gold);
  return EvalMetrics::from_counts(counts.tp, counts.fp, counts.fn);
}

EvalMetrics evaluate_dataset(const std::vector<GoldDocument>& docs,
                             const ExtractionConfig& config, unsigned threads) {
  if (docs.empty()) {
    throw std::invalid_argument("evaluate_dataset: no documents");
  }
  config.validate();

  std::vector<const GoldDocument*> scoreable;
  for (const GoldDocument& doc : docs) {
    if (doc.scoreable()) scoreable.push_back(&doc);
  }
  std::vector<Counts> per_doc(scoreable.size());
  parallel_for(scoreable.size(), resolve_threads(threads), [&](std::size_t i) {
    per_doc[i] = count_document(extract(scoreable[i]->body, config), *scoreable[i]);
  });

  Counts total;
  for (const Counts& counts : per_doc) total += counts;
  return EvalMetrics::from_counts(total.tp, total.fp, total.fn);
}

GridSpec GridSpec::single(const ExtractionConfig& config) {
  GridSpec grid;
  grid.num_tokens = {config.max_ngram};
  grid.bigram_count_threshold = {config.bigram_count_threshold};
  grid.word_length_diff = {config.word_length_diff_threshold};
  grid.edit_distance = {config.edit_distance_threshold};
  grid.normalization = {config.normalization};
  return grid;
}

std::vector<ExtractionConfig> expand_grid(const GridSpec& grid,
                                          const ExtractionConfig& base) {
  std::vector<ExtractionConfig> configs;
  for (const int p : grid.num_tokens) {
    const std::vector<std::uint64_t> thresholds =
        p == 1 ? std::vector<std::uint64_t>{base.bigram_count_threshold}
               : grid.bigram_count_threshold;
    for (const std::uint64_t f : thresholds) {
      for (const std::size_t l : grid.word_length_diff) {
        for (const std::size_t alpha : grid.edit_distance) {
          for (const Normalization mode : grid.normalization) {
            ExtractionConfig config = base;
            config.max_ngram = p;
            config.bigram_count_threshold = f;
            config.word_length_diff_threshold = l;
            config.edit_distance_threshold = alpha;
            config.normalization = mode;
            config.validate();
            configs.push_back(std::move(config));
          }
        }
      }
    }
  }
  return configs;
}

CrossValidationResult cross_validate(const std::vector<GoldDocument>& docs,
                                     const GridSpec& grid, const ExtractionConfig& base,
                                     int folds, unsigned seed, unsigned threads) {
  if (folds < 2) {
    throw std::invalid_argument("cross_validate: folds must be >= 2");
  }
  std::vector<const GoldDocument*> scoreable;
  for (const GoldDocument& doc : docs) {
    if (doc.scoreable()) scoreable.push_back(&doc);
  }
  const std::size_t n = scoreable.size();
  if (static_cast<std::size_t>(folds) > n) {
    throw std::invalid_argument("cross_validate: more folds than scoreable documents");
  }
  const std::vector<ExtractionConfig> configs = expand_grid(grid, base);
  if (configs.empty()) {
    throw std::invalid_argument("cross_validate: empty grid");
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::mt19937 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> fold_of(n);
  for (std::size_t rank = 0; rank < n; ++rank) {
    fold_of[order[rank]] = static_cast<int>(rank * static_cast<std::size_t>(folds) / n);
  }

  // Configs sharing tokenization and meta-vertex parameters reuse one
  // analysis; only the n-gram stage reruns per config.
  using AnalysisKey = std::tuple<Normalization, std::size_t, std::size_t, std::size_t>;
  std::map<AnalysisKey, std::vector<std::size_t>> groups;
  for (std::size_t ci = 0; ci < configs.size(); ++ci) {
    const ExtractionConfig& c = configs[ci];
    groups[AnalysisKey{c.normalization, c.min_token_length, c.word_length_diff_threshold,
                       c.edit_distance_threshold}]
        .push_back(ci);
  }
  std::vector<std::vector<std::size_t>> group_list;
  group_list.reserve(groups.size());
  for (auto& [key, members] : groups) group_list.push_back(std::move(members));

  // counts[d][c]: document d scored under config c.
  std::vector<std::vector<Counts>> counts(n, std::vector<Counts>(configs.size()));
  const std::size_t tasks = n * group_list.size();
  parallel_for(tasks, resolve_threads(threads), [&](std::size_t task) {
    const std::size_t d = task / group_list.size();
    const std::vector<std::size_t>& group = group_list[task % group_list.size()];
    const GoldDocument& doc = *scoreable[d];
    const DocumentAnalysis analysis = analyze_document(doc.body, configs[group.front()]);
    for (const std::size_t ci : group) {
      counts[d][ci] = count_document(keywords_from(analysis, configs[ci]), doc);
    }
  });

  CrossValidationResult result;
  Counts overall;
  for (int f = 0; f < folds; ++f) {
    std::size_t best_ci = 0;
    double best_f1 = -1.0;
    for (std::size_t ci = 0; ci < configs.size(); ++ci) {
      Counts train;
      for (std::size_t d = 0; d < n; ++d) {
        if (fold_of[d] != f) train += counts[d][ci];
      }
      const double f1 = EvalMetrics::from_counts(train.tp, train.fp, train.fn).f1;
      if (f1 > best_f1) {
        best_f1 = f1;
        best_ci = ci;
      }
    }
    Counts test;
    for (std::size_t d = 0; d < n; ++d) {
      if (fold_of[d] == f) test += counts[d][best_ci];
    }
    overall += test;
    result.folds.push_back(FoldOutcome{f, configs[best_ci], best_f1,
                                       EvalMetrics::from_counts(test.tp, test.fp, test.fn)});
  }
  result.overall = EvalMetrics::from_counts(overall.tp, overall.fp, overall.fn);
  return result;
}

}  // namespace rakun
