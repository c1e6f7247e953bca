#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "wheelfree/testkit.hpp"
#include "wheelfree/weights.hpp"

namespace wheelfree::test {

inline Trigraph cycle(int n) {
  Trigraph g(n);
  for (int i = 0; i < n; ++i) g.set(i, (i + 1) % n, Adjacency::StrongAdj);
  return g;
}

inline Trigraph path(int n) {
  Trigraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.set(i, i + 1, Adjacency::StrongAdj);
  return g;
}

inline Trigraph complete(int n) {
  Trigraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.set(i, j, Adjacency::StrongAdj);
  return g;
}

inline Trigraph complete_bipartite_graph(int a, int b) {
  Trigraph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = a; j < a + b; ++j) g.set(i, j, Adjacency::StrongAdj);
  return g;
}

inline WeightedTrigraph unit_weights(Trigraph g) {
  WeightedTrigraph wt(std::move(g));
  for (Vertex v = 0; v < wt.size(); ++v) wt.w.set_vertex(v, 1);
  return wt;
}

// Arbitrary trigraph: each pair strong with probability strong/100, else semi
// with probability semi/100.
inline Trigraph random_trigraph(SplitMix64& rng, int n, int strong, int semi) {
  Trigraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto r = rng.below(100);
      if (r < static_cast<std::uint64_t>(strong)) g.set(i, j, Adjacency::StrongAdj);
      else if (r < static_cast<std::uint64_t>(strong + semi)) g.set(i, j, Adjacency::Semi);
    }
  return g;
}

inline WeightedTrigraph random_weights(SplitMix64& rng, Trigraph g, Weight top) {
  WeightedTrigraph wt(std::move(g));
  for (Vertex v = 0; v < wt.size(); ++v) wt.w.set_vertex(v, rng.range(0, top));
  for (auto [u, v] : wt.g.semi_pairs()) {
    Weight p = rng.range(0, top);
    wt.w.set_pair(u, v, rng.range(0, p), rng.range(0, p), p);
  }
  return wt;
}

inline WeightedTrigraph random_weighted(SplitMix64& rng, int n, Weight top, int strong = 30, int semi = 25) {
  return random_weights(rng, random_trigraph(rng, n, strong, semi), top);
}

inline VertexSet random_subset(SplitMix64& rng, int n) {
  VertexSet s;
  for (int v = 0; v < n; ++v)
    if (rng.chance(1, 2)) s.push_back(v);
  return s;
}

inline VertexSet mask_to_set(unsigned mask, int n) {
  VertexSet s;
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1) s.push_back(v);
  return s;
}

inline Weight vertex_sum(const WeightedTrigraph& wt, const VertexSet& s) {
  Weight t = 0;
  for (Vertex v : s) t += wt.w.vertex(v);
  return t;
}

// Maximum stable set size of a graph on at most 64 vertices. Takes degree
// <= 1 vertices greedily, otherwise branches on a vertex of maximum degree.
inline int mis_size(const std::vector<std::uint64_t>& adj, std::uint64_t live) {
  if (!live) return 0;
  int best_v = -1, best_d = -1;
  for (std::uint64_t m = live; m; m &= m - 1) {
    int v = __builtin_ctzll(m);
    int d = __builtin_popcountll(adj[v] & live);
    if (d <= 1) return 1 + mis_size(adj, live & ~(adj[v] | (1ull << v)));
    if (d > best_d) best_d = d, best_v = v;
  }
  std::uint64_t bit = 1ull << best_v;
  return std::max(mis_size(adj, live & ~bit), 1 + mis_size(adj, live & ~(adj[best_v] | bit)));
}

inline int mis_size(const Trigraph& g) {
  const int n = g.size();
  std::vector<std::uint64_t> adj(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && g.full_adjacent(u, v)) adj[u] |= 1ull << v;
  return mis_size(adj, n == 64 ? ~0ull : (1ull << n) - 1);
}

}  // namespace wheelfree::test
