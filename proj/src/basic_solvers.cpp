#include <algorithm>

#include "wheelfree/basic_solvers.hpp"

namespace wheelfree {

const char* to_string(BasicClass c) {
  switch (c) {
    case BasicClass::SeriesParallel: return "series-parallel";
    case BasicClass::CompleteBipartite: return "complete-bipartite";
    case BasicClass::Line: return "line";
  }
  return "?";
}

bool is_complete_bipartite(const Trigraph& g, VertexSet* side_a, VertexSet* side_b) {
  const int n = g.size();
  if (n < 2 || !g.is_graph()) return false;
  VertexSet a, b;
  for (Vertex v = 0; v < n; ++v) (v != 0 && g.strongly_adjacent(0, v) ? a : b).push_back(v);
  if (a.empty()) return false;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      bool same_side = std::binary_search(a.begin(), a.end(), u) == std::binary_search(a.begin(), a.end(), v);
      if (g.strongly_adjacent(u, v) == same_side) return false;
    }
  if (side_a) *side_a = a;
  if (side_b) *side_b = b;
  return true;
}

BasicClass classify_basic(const Trigraph& g) {
  if (is_series_parallel(g)) return BasicClass::SeriesParallel;
  if (is_complete_bipartite(g)) return BasicClass::CompleteBipartite;
  return BasicClass::Line;
}

Weight alpha_series_parallel(const WeightedTrigraph& wt) {
  TreeDecomposition td = tree_decomposition_width2(wt.g);
  GemExpansion exp = replace_all_gems(wt);
  TreeDecomposition full = augment_decomposition_for_gems(td, exp);
  return mwss_on_tree_decomposition(exp.result.g, exp.result.w.vertices(), full);
}

Weight alpha_complete_bipartite(const WeightedTrigraph& wt) {
  VertexSet a, b;
  if (!is_complete_bipartite(wt.g, &a, &b)) throw InvalidArgument("not a complete bipartite graph");
  Weight wa = 0, wb = 0;
  for (Vertex v : a) wa = checked_add(wa, wt.w.vertex(v));
  for (Vertex v : b) wb = checked_add(wb, wt.w.vertex(v));
  return std::max(wa, wb);
}

Weight alpha_line(const WeightedTrigraph& wt) {
  GemExpansion exp = replace_all_gems(wt);
  LineRoot root = line_graph_root(exp.result.g);
  for (std::size_t i = 0; i < root.root.edges.size(); ++i) root.root.edges[i].weight = exp.result.w.vertex(static_cast<Vertex>(i));
  return max_weight_matching(root.root).total_weight;
}

Weight alpha_basic(const WeightedTrigraph& wt, BasicClass cls) {
  switch (cls) {
    case BasicClass::SeriesParallel: return alpha_series_parallel(wt);
    case BasicClass::CompleteBipartite: return alpha_complete_bipartite(wt);
    case BasicClass::Line: return alpha_line(wt);
  }
  throw InternalError("unknown basic class");
}

Weight alpha_basic(const WeightedTrigraph& wt) { return alpha_basic(wt, classify_basic(wt.g)); }

}  // namespace wheelfree
