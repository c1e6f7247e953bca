#include "wheelfree/basic_solvers.hpp"

namespace wheelfree {

namespace {

GemExpansion expand(const WeightedTrigraph& wt, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  const int n = wt.g.size();
  const int total = n + 3 * static_cast<int>(pairs.size());
  GemExpansion exp;
  Trigraph g(total);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int t = wt.g.theta(u, v);
      if (t != -1) g.set(u, v, static_cast<Adjacency>(t));
    }
  WeightFunction w(total);
  for (int u = 0; u < n; ++u) w.set_vertex(u, wt.w.vertex(u));
  for (const auto& [key, p] : wt.w.pairs()) w.set_pair(key.first, key.second, p.lo_hi, p.hi_lo, p.pair);

  exp.origin.assign(total, -1);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [u, v] = pairs[i];
    GemVertices gv{u, v, n + 3 * static_cast<int>(i), n + 3 * static_cast<int>(i) + 1,
                   n + 3 * static_cast<int>(i) + 2};
    g.set(u, v, Adjacency::StrongAnti);
    g.set(u, gv.x_vu, Adjacency::StrongAdj);
    g.set(gv.x_vu, gv.x_uv, Adjacency::StrongAdj);
    g.set(gv.x_uv, v, Adjacency::StrongAdj);
    g.set(gv.x_pair, u, Adjacency::StrongAdj);
    g.set(gv.x_pair, gv.x_vu, Adjacency::StrongAdj);
    g.set(gv.x_pair, gv.x_uv, Adjacency::StrongAdj);
    g.set(gv.x_pair, v, Adjacency::StrongAdj);
    w.set_vertex(gv.x_pair, wt.w.pair(u, v));
    w.set_vertex(gv.x_vu, wt.w.directed(v, u));
    w.set_vertex(gv.x_uv, wt.w.directed(u, v));
    w.clear_pair(u, v);
    for (Vertex x : {gv.x_pair, gv.x_vu, gv.x_uv}) exp.origin[x] = static_cast<int>(i);
    exp.gems.push_back(gv);
  }
  exp.result = WeightedTrigraph(std::move(g), std::move(w));
  return exp;
}

}  // namespace

GemExpansion replace_gem(const WeightedTrigraph& wt, Vertex u, Vertex v) {
  if (wt.g.adjacency(u, v) != Adjacency::Semi) throw InvalidArgument("gem replacement needs a semi pair");
  if (u > v) std::swap(u, v);
  return expand(wt, {{u, v}});
}

GemExpansion replace_all_gems(const WeightedTrigraph& wt) { return expand(wt, wt.g.semi_pairs()); }

}  // namespace wheelfree
