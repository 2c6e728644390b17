#include "rakun/meta_vertex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rakun/edit_distance.hpp"
#include "rakun/porter_stemmer.hpp"
#include "rakun/unicode.hpp"

namespace rakun {

std::set<LabelPair> candidate_pairs(const CorpusGraph& graph, std::size_t l,
                                    std::size_t alpha) {
  const std::vector<std::string> labels(graph.vertices().begin(), graph.vertices().end());
  std::vector<std::vector<char32_t>> decoded(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    decoded[i] = decode_codepoints(labels[i]);
  }
  // The edit distance can never undercut the length difference, so the
  // effective length gate is min(l, alpha).
  const std::size_t gate = std::min(l, alpha);

  std::set<LabelPair> pairs;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      const std::size_t li = decoded[i].size();
      const std::size_t lj = decoded[j].size();
      const std::size_t diff = li > lj ? li - lj : lj - li;
      if (diff > gate) continue;
      if (!levenshtein_within(decoded[i], decoded[j], alpha)) continue;
      pairs.emplace(labels[i], labels[j]);
    }
  }
  return pairs;
}

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct Cluster {
  std::set<std::string> members;
  std::string representative;
  std::string identifier;
};

void elect(Cluster& cluster, const CentralityScores& pre) {
  // std::set iteration is ascending, so the first maximum is the
  // lexicographically smallest.
  const std::string* best = nullptr;
  double best_score = 0.0;
  for (const std::string& member : cluster.members) {
    const double score = pre.at(member);
    if (best == nullptr || score > best_score) {
      best = &member;
      best_score = score;
    }
  }
  cluster.representative = *best;
  cluster.identifier = porter_stem(cluster.representative);
}

}  // namespace

MergeResult merge_meta_vertices(const CorpusGraph& graph,
                                const std::set<LabelPair>& pairs,
                                const CentralityScores& pre_merge_centrality) {
  for (const auto& [a, b] : pairs) {
    if (!graph.has_vertex(a) || !graph.has_vertex(b)) {
      throw std::invalid_argument("merge_meta_vertices: candidate pair references '" +
                                  (graph.has_vertex(a) ? b : a) +
                                  "', which is not a graph vertex");
    }
  }
  for (const std::string& v : graph.vertices()) {
    if (pre_merge_centrality.find(v) == pre_merge_centrality.end()) {
      throw std::invalid_argument("merge_meta_vertices: centrality missing vertex '" + v + "'");
    }
  }

  // Transitive closure of the candidate pairs.
  std::map<std::string, int> index;
  for (const auto& [a, b] : pairs) {
    index.emplace(a, static_cast<int>(index.size()));
    index.emplace(b, static_cast<int>(index.size()));
  }
  UnionFind uf(index.size());
  for (const auto& [a, b] : pairs) uf.unite(index.at(a), index.at(b));

  std::map<int, Cluster> by_root;
  for (const auto& [label, id] : index) {
    by_root[uf.find(id)].members.insert(label);
  }
  std::vector<Cluster> clusters;
  clusters.reserve(by_root.size());
  for (auto& [root, cluster] : by_root) clusters.push_back(std::move(cluster));

  // Identifier fixpoint: equal identifiers merge their clusters; an
  // identifier equal to an untouched vertex absorbs that vertex. Either
  // event changes membership, so representatives are re-elected until the
  // labelling is stable and collision-free.
  while (true) {
    for (Cluster& cluster : clusters) elect(cluster, pre_merge_centrality);

    std::map<std::string, std::vector<std::size_t>> by_identifier;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      by_identifier[clusters[i].identifier].push_back(i);
    }
    const auto collision = std::find_if(
        by_identifier.begin(), by_identifier.end(),
        [](const auto& entry) { return entry.second.size() > 1; });
    if (collision != by_identifier.end()) {
      const std::vector<std::size_t>& group = collision->second;
      for (std::size_t gi = 1; gi < group.size(); ++gi) {
        clusters[group.front()].members.merge(clusters[group[gi]].members);
      }
      std::vector<Cluster> kept;
      kept.reserve(clusters.size() - group.size() + 1);
      const std::set<std::size_t> dead(group.begin() + 1, group.end());
      for (std::size_t i = 0; i < clusters.size(); ++i) {
        if (dead.find(i) == dead.end()) kept.push_back(std::move(clusters[i]));
      }
      clusters = std::move(kept);
      continue;
    }

    std::set<std::string> all_members;
    for (const Cluster& cluster : clusters) {
      all_members.insert(cluster.members.begin(), cluster.members.end());
    }
    bool absorbed = false;
    for (Cluster& cluster : clusters) {
      if (!graph.has_vertex(cluster.identifier)) continue;
      if (all_members.count(cluster.identifier) > 0) continue;
      cluster.members.insert(cluster.identifier);
      absorbed = true;
      break;
    }
    if (!absorbed) break;
  }

  std::map<std::string, std::string> relabel;
  for (const Cluster& cluster : clusters) {
    for (const std::string& member : cluster.members) {
      relabel[member] = cluster.identifier;
    }
  }
  const auto phi = [&relabel](const std::string& label) -> const std::string& {
    const auto it = relabel.find(label);
    return it == relabel.end() ? label : it->second;
  };

  MergeResult result;
  for (const std::string& v : graph.vertices()) result.graph.add_vertex(phi(v));
  for (const std::string& u : graph.vertices()) {
    for (const auto& [dst, weight] : graph.out_edges(u)) {
      const std::string& a = phi(u);
      const std::string& b = phi(dst);
      if (a == b) {
        result.dropped_self_loop_weight += weight;
      } else {
        result.graph.add_edge(a, b, weight);
      }
    }
  }

  for (const Cluster& cluster : clusters) {
    result.records.push_back(MetaVertexRecord{cluster.members, cluster.identifier,
                                              cluster.representative});
  }
  std::sort(result.records.begin(), result.records.end(),
            [](const MetaVertexRecord& a, const MetaVertexRecord& b) {
              return a.identifier < b.identifier;
            });
  return result;
}

std::map<std::string, std::string> vertex_mapping(
    const std::vector<MetaVertexRecord>& records) {
  std::map<std::string, std::string> mapping;
  for (const MetaVertexRecord& record : records) {
    for (const std::string& member : record.members) {
      mapping[member] = record.identifier;
    }
  }
  return mapping;
}

std::map<std::string, std::string> representative_mapping(
    const std::vector<MetaVertexRecord>& records) {
  std::map<std::string, std::string> mapping;
  for (const MetaVertexRecord& record : records) {
    mapping[record.identifier] = record.representative;
  }
  return mapping;
}

}  // namespace rakun
