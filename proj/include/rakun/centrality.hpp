#pragma once

#include <map>
#include <string>

#include "rakun/graph.hpp"

namespace rakun {

using CentralityScores = std::map<std::string, double>;

// Load centrality under the flow-splitting definition: every ordered pair
// (s, t) with t reachable from s injects one unit at s; at each vertex the
// arriving flow is divided equally among the out-neighbors lying one hop
// closer to t (unweighted shortest paths); a vertex's score is the total
// flow transiting it as an interior vertex. Runs one reverse-BFS pass per
// target, O(V*E) overall.
//
// threads > 1 splits the targets into fixed-size blocks computed in
// parallel; partial sums are folded in block order, so the result is
// identical for every thread count. Throws std::invalid_argument on an
// empty graph.
CentralityScores load_centrality(const CorpusGraph& graph, unsigned threads = 1);

// Reference oracle: enumerates every ordered pair and simulates the flow
// splitting down that pair's shortest-path DAG. Quadratic blow-up, so it
// refuses graphs with more than 10 vertices (std::invalid_argument).
CentralityScores brute_force_load(const CorpusGraph& graph);

}  // namespace rakun
