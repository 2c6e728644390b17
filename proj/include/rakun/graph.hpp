#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

namespace rakun {

// Directed graph over text labels with positive integer edge weights.
// Ordered containers everywhere: iteration order is the lexicographic label
// order, which keeps every downstream computation and serialization
// deterministic.
class CorpusGraph {
 public:
  using EdgeMap = std::map<std::string, std::uint64_t>;

  void add_vertex(const std::string& label);

  // Accumulates weight onto the (src, dst) edge, creating endpoints as
  // needed. Self-loops violate a graph invariant and throw.
  void add_edge(const std::string& src, const std::string& dst, std::uint64_t weight = 1);

  bool has_vertex(const std::string& label) const { return vertices_.count(label) > 0; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const;
  std::uint64_t total_edge_weight() const;
  std::uint64_t edge_weight(const std::string& src, const std::string& dst) const;

  const std::set<std::string>& vertices() const { return vertices_; }
  const EdgeMap& out_edges(const std::string& label) const;
  const std::set<std::string>& in_neighbors(const std::string& label) const;

  bool operator==(const CorpusGraph& other) const;

 private:
  std::set<std::string> vertices_;
  std::map<std::string, EdgeMap> out_;
  std::map<std::string, std::set<std::string>> in_;
};

}  // namespace rakun
