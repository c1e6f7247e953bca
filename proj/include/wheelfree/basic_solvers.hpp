#pragma once

#include <array>
#include <string>
#include <vector>

#include "wheelfree/matching.hpp"
#include "wheelfree/weights.hpp"

namespace wheelfree {

enum class BasicClass { SeriesParallel, CompleteBipartite, Line };
const char* to_string(BasicClass c);

// Series-parallel if the full realization has treewidth at most two; else
// complete bipartite if g is a complete bipartite graph; else line. The line
// outcome is not verified here: root reconstruction in alpha_line does that.
BasicClass classify_basic(const Trigraph& g);

// Treewidth at most two, i.e. no K4 subdivision in the full realization.
bool is_series_parallel(const Trigraph& g);

// Two strongly stable sides, strongly complete to each other, no semi pairs.
// On success fills the side containing the neighbours of vertex 0 first.
bool is_complete_bipartite(const Trigraph& g, VertexSet* side_a = nullptr, VertexSet* side_b = nullptr);

struct GemVertices {
  Vertex u = -1;
  Vertex v = -1;        // u < v, the replaced semi pair
  Vertex x_pair = -1;   // x_{uv}, carries w(uv)
  Vertex x_vu = -1;     // x_{v,u}, carries w(v,u), adjacent to u
  Vertex x_uv = -1;     // x_{u,v}, carries w(u,v), adjacent to v
};

struct GemExpansion {
  WeightedTrigraph result;
  std::vector<GemVertices> gems;
  // For every vertex of result: index into gems, or -1 for source vertices.
  std::vector<int> origin;
};

// Replaces one semi pair by a gem; the three new vertices get the next labels.
GemExpansion replace_gem(const WeightedTrigraph& wt, Vertex u, Vertex v);
// Replaces every semi pair, in lexicographic order of the source pairs.
GemExpansion replace_all_gems(const WeightedTrigraph& wt);

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::vector<int>> tree;  // adjacency among bag indices

  int width() const;
};

// Empty when td is a tree decomposition of the full realization of g,
// otherwise the first violated condition.
std::string tree_decomposition_violation(const Trigraph& g, const TreeDecomposition& td);

// Width <= 2 decomposition of a graph by eliminating vertices of degree at
// most two. Throws NotSeriesParallel when the elimination stalls. Semi pairs
// are treated as edges.
TreeDecomposition tree_decomposition_width2(const Trigraph& g);

// Attaches, for every gem, the bags {u, v, x_uv-pair, x_{u,v}} and
// {u, x_{v,u}, x_uv-pair, x_{u,v}} below a bag holding u and v.
TreeDecomposition augment_decomposition_for_gems(const TreeDecomposition& td, const GemExpansion& exp);

// Maximum weight stable set of a graph by dynamic programming over td.
Weight mwss_on_tree_decomposition(const Trigraph& graph, const std::vector<Weight>& vertex_weights,
                                  const TreeDecomposition& td);

Weight alpha_series_parallel(const WeightedTrigraph& wt);
Weight alpha_complete_bipartite(const WeightedTrigraph& wt);

struct LineRoot {
  EdgeWeightedGraph root;                   // weights left at zero
  std::vector<std::array<int, 2>> edge_of;  // input vertex -> root edge endpoints
};

// Root graph H with L(H) isomorphic to g (a graph), with the explicit
// vertex -> edge correspondence. Throws NotLineGraph.
LineRoot line_graph_root(const Trigraph& g);

// True when the correspondence reproduces exactly the adjacency of g.
bool verify_line_root(const Trigraph& g, const LineRoot& root);

Weight alpha_line(const WeightedTrigraph& wt);

// classify_basic followed by the matching case solver.
Weight alpha_basic(const WeightedTrigraph& wt);
Weight alpha_basic(const WeightedTrigraph& wt, BasicClass cls);

}  // namespace wheelfree
