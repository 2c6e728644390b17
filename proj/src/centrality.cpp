#include "rakun/centrality.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

namespace rakun {

namespace {

constexpr std::size_t kTargetBlock = 64;

struct IndexedGraph {
  std::vector<std::string> labels;  // sorted, index = vertex id
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> in;
};

IndexedGraph index_graph(const CorpusGraph& graph) {
  IndexedGraph ig;
  ig.labels.assign(graph.vertices().begin(), graph.vertices().end());
  std::map<std::string, int> id;
  for (std::size_t i = 0; i < ig.labels.size(); ++i) {
    id[ig.labels[i]] = static_cast<int>(i);
  }
  ig.out.resize(ig.labels.size());
  ig.in.resize(ig.labels.size());
  for (std::size_t i = 0; i < ig.labels.size(); ++i) {
    for (const auto& [dst, weight] : graph.out_edges(ig.labels[i])) {
      const int j = id[dst];
      ig.out[i].push_back(j);
      ig.in[j].push_back(static_cast<int>(i));
    }
  }
  return ig;
}

// Transit flow toward each target in [t_begin, t_end), accumulated into acc.
// Vertices are processed in decreasing distance-to-target, so every
// contribution to a vertex arrives before the vertex itself is expanded.
void accumulate_targets(const IndexedGraph& ig, std::size_t t_begin, std::size_t t_end,
                        std::vector<double>& acc) {
  const std::size_t n = ig.labels.size();
  std::vector<int> dist(n);
  std::vector<double> flow(n);
  std::vector<int> order;
  order.reserve(n);

  for (std::size_t t = t_begin; t < t_end; ++t) {
    std::fill(dist.begin(), dist.end(), -1);
    order.clear();
    dist[t] = 0;
    order.push_back(static_cast<int>(t));
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
      const int u = order[qi];
      for (const int p : ig.in[u]) {
        if (dist[p] < 0) {
          dist[p] = dist[u] + 1;
          order.push_back(p);
        }
      }
    }
    if (order.size() == 1) continue;

    for (const int u : order) flow[u] = 0.0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int u = *it;
      if (static_cast<std::size_t>(u) == t) continue;
      const double outflow = flow[u] + 1.0;  // u itself sources one unit
      int branches = 0;
      for (const int w : ig.out[u]) {
        if (dist[w] == dist[u] - 1) ++branches;
      }
      const double share = outflow / branches;
      for (const int w : ig.out[u]) {
        if (dist[w] == dist[u] - 1) flow[w] += share;
      }
    }
    for (const int u : order) {
      if (static_cast<std::size_t>(u) != t) acc[u] += flow[u];
    }
  }
}

}  // namespace

CentralityScores load_centrality(const CorpusGraph& graph, unsigned threads) {
  if (graph.num_vertices() == 0) {
    throw std::invalid_argument("load_centrality: empty graph");
  }
  const IndexedGraph ig = index_graph(graph);
  const std::size_t n = ig.labels.size();
  std::vector<double> acc(n, 0.0);

  // Every thread count walks the same fixed-size blocks and folds their
  // partials in block order; only the number computed concurrently varies.
  // Identical addition sequence, so the scores are bitwise reproducible.
  const std::size_t blocks = (n + kTargetBlock - 1) / kTargetBlock;
  const std::size_t workers = std::max(1u, threads);
  for (std::size_t wave = 0; wave < blocks; wave += workers) {
    const std::size_t in_wave = std::min(workers, blocks - wave);
    std::vector<std::vector<double>> partial(in_wave, std::vector<double>(n, 0.0));
    const auto run_block = [&ig, n](std::size_t b, std::vector<double>& buf) {
      accumulate_targets(ig, b * kTargetBlock, std::min(n, b * kTargetBlock + kTargetBlock),
                         buf);
    };
    if (in_wave == 1) {
      run_block(wave, partial[0]);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(in_wave);
      for (std::size_t w = 0; w < in_wave; ++w) {
        pool.emplace_back([&run_block, &partial, wave, w] { run_block(wave + w, partial[w]); });
      }
      for (auto& th : pool) th.join();
    }
    for (std::size_t w = 0; w < in_wave; ++w) {
      for (std::size_t i = 0; i < n; ++i) acc[i] += partial[w][i];
    }
  }

  CentralityScores scores;
  for (std::size_t i = 0; i < n; ++i) scores[ig.labels[i]] = acc[i];
  return scores;
}

CentralityScores brute_force_load(const CorpusGraph& graph) {
  if (graph.num_vertices() == 0) {
    throw std::invalid_argument("brute_force_load: empty graph");
  }
  if (graph.num_vertices() > 10) {
    throw std::invalid_argument("brute_force_load: more than 10 vertices");
  }
  const IndexedGraph ig = index_graph(graph);
  const int n = static_cast<int>(ig.labels.size());

  // All-pairs hop distances by BFS from every source.
  constexpr int kUnreached = -1;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kUnreached));
  for (int s = 0; s < n; ++s) {
    d[s][s] = 0;
    std::vector<int> queue{s};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int u = queue[qi];
      for (const int w : ig.out[u]) {
        if (d[s][w] == kUnreached) {
          d[s][w] = d[s][u] + 1;
          queue.push_back(w);
        }
      }
    }
  }

  std::vector<double> acc(n, 0.0);
  std::vector<double> flow(n);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (s == t || d[s][t] == kUnreached) continue;
      // Vertices on some shortest s-t path, walked in increasing d[s][.].
      std::vector<int> on_path;
      for (int v = 0; v < n; ++v) {
        if (d[s][v] != kUnreached && d[v][t] != kUnreached &&
            d[s][v] + d[v][t] == d[s][t]) {
          on_path.push_back(v);
        }
      }
      std::sort(on_path.begin(), on_path.end(),
                [&](int x, int y) { return d[s][x] < d[s][y]; });
      std::fill(flow.begin(), flow.end(), 0.0);
      flow[s] = 1.0;
      for (const int u : on_path) {
        if (u == t) continue;
        std::vector<int> next;
        for (const int w : ig.out[u]) {
          if (d[s][w] == d[s][u] + 1 && d[w][t] != kUnreached &&
              d[s][w] + d[w][t] == d[s][t]) {
            next.push_back(w);
          }
        }
        const double share = flow[u] / static_cast<double>(next.size());
        for (const int w : next) flow[w] += share;
      }
      for (const int v : on_path) {
        if (v != s && v != t) acc[v] += flow[v];
      }
    }
  }

  CentralityScores scores;
  for (int i = 0; i < n; ++i) scores[ig.labels[i]] = acc[i];
  return scores;
}

}  // namespace rakun
