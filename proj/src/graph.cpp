#include "rakun/graph.hpp"

#include <stdexcept>

namespace rakun {

namespace {
const CorpusGraph::EdgeMap kNoEdges;
const std::set<std::string> kNoNeighbors;
}  // namespace

void CorpusGraph::add_vertex(const std::string& label) { vertices_.insert(label); }

void CorpusGraph::add_edge(const std::string& src, const std::string& dst,
                           std::uint64_t weight) {
  if (src == dst) {
    throw std::invalid_argument("CorpusGraph: self-loop edge on '" + src + "'");
  }
  if (weight == 0) {
    throw std::invalid_argument("CorpusGraph: zero-weight edge");
  }
  vertices_.insert(src);
  vertices_.insert(dst);
  out_[src][dst] += weight;
  in_[dst].insert(src);
}

std::size_t CorpusGraph::num_edges() const {
  std::size_t n = 0;
  for (const auto& [src, targets] : out_) n += targets.size();
  return n;
}

std::uint64_t CorpusGraph::total_edge_weight() const {
  std::uint64_t sum = 0;
  for (const auto& [src, targets] : out_) {
    for (const auto& [dst, w] : targets) sum += w;
  }
  return sum;
}

std::uint64_t CorpusGraph::edge_weight(const std::string& src, const std::string& dst) const {
  const auto it = out_.find(src);
  if (it == out_.end()) return 0;
  const auto jt = it->second.find(dst);
  return jt == it->second.end() ? 0 : jt->second;
}

const CorpusGraph::EdgeMap& CorpusGraph::out_edges(const std::string& label) const {
  const auto it = out_.find(label);
  return it == out_.end() ? kNoEdges : it->second;
}

const std::set<std::string>& CorpusGraph::in_neighbors(const std::string& label) const {
  const auto it = in_.find(label);
  return it == in_.end() ? kNoNeighbors : it->second;
}

bool CorpusGraph::operator==(const CorpusGraph& other) const {
  return vertices_ == other.vertices_ && out_ == other.out_;
}

}  // namespace rakun
