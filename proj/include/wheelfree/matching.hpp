#pragma once

#include <vector>

#include "wheelfree/errors.hpp"

namespace wheelfree {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  Weight weight = 0;
};

// Graph with non-negative integer edge weights. Parallel edges are allowed
// here; the matching routines keep only the heaviest edge of each pair.
struct EdgeWeightedGraph {
  int n = 0;
  std::vector<WeightedEdge> edges;

  // Rejects self-loops, out-of-range endpoints and negative weights.
  void add_edge(int u, int v, Weight w);
};

struct MatchingResult {
  std::vector<int> edges;  // indices into EdgeWeightedGraph::edges
  Weight total_weight = 0;
  std::vector<int> mate;   // mate[v] or -1
};

// Maximum weight matching (not necessarily of maximum cardinality) by the
// primal-dual blossom method, O(V^3), with integer duals scaled by 2.
MatchingResult max_weight_matching(const EdgeWeightedGraph& g);

// Exhaustive backtracking over all matchings; refuses more than 40 edges.
Weight brute_max_weight_matching(const EdgeWeightedGraph& g);

bool is_matching(const EdgeWeightedGraph& g, const std::vector<int>& edge_indices);

}  // namespace wheelfree
