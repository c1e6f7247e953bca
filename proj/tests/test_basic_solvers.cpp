#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "wheelfree/basic_solvers.hpp"

using namespace wheelfree;
using namespace wheelfree::test;

namespace {

WeightedTrigraph semi_pair(Weight wu, Weight wv, Weight w_uv, Weight w_vu, Weight w_pair) {
  Trigraph g(2);
  g.set(0, 1, Adjacency::Semi);
  WeightedTrigraph wt(g);
  wt.w.set_vertex(0, wu);
  wt.w.set_vertex(1, wv);
  wt.w.set_pair(0, 1, w_uv, w_vu, w_pair);
  return wt;
}

// Random tree on n vertices by attaching each vertex to an earlier one.
Trigraph random_tree(SplitMix64& rng, int n) {
  Trigraph g(n);
  for (int v = 1; v < n; ++v) g.set(v, static_cast<Vertex>(rng.below(v)), Adjacency::StrongAdj);
  return g;
}

}  // namespace

TEST_CASE("classify_basic") {
  CHECK(classify_basic(cycle(5)) == BasicClass::SeriesParallel);
  CHECK(classify_basic(complete_bipartite_graph(3, 3)) == BasicClass::CompleteBipartite);
  Trigraph star = graph_from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  Trigraph k5 = line_graph_of(star);
  CHECK(k5 == complete(5));
  CHECK(classify_basic(k5) == BasicClass::Line);
  CHECK(!is_series_parallel(complete(4)));
  CHECK(is_series_parallel(complete_bipartite_graph(2, 5)));

  VertexSet a, b;
  CHECK(is_complete_bipartite(complete_bipartite_graph(2, 3), &a, &b));
  CHECK(a == VertexSet{2, 3, 4});
  CHECK(b == VertexSet{0, 1});
  CHECK(!is_complete_bipartite(cycle(5)));
  Trigraph semi_k22 = complete_bipartite_graph(2, 2);
  semi_k22.set(0, 2, Adjacency::Semi);
  CHECK(!is_complete_bipartite(semi_k22));
}

TEST_CASE("replace_gem") {
  GemExpansion one = replace_gem(semi_pair(1, 1, 0, 0, 0), 0, 1);
  CHECK(one.result.size() == 5);
  CHECK(one.result.g.is_graph());
  CHECK(one.result.w.vertices() == std::vector<Weight>{1, 1, 0, 0, 0});
  CHECK(alpha_by_enumeration(one.result) == 2);
  CHECK(one.origin == std::vector<int>{-1, -1, 0, 0, 0});
  const GemVertices& gv = one.gems[0];
  CHECK(gv.x_pair == 2);
  CHECK(gv.x_vu == 3);
  CHECK(gv.x_uv == 4);
  const Trigraph& h = one.result.g;
  CHECK(h.strongly_adjacent(0, gv.x_vu));
  CHECK(h.strongly_adjacent(gv.x_vu, gv.x_uv));
  CHECK(h.strongly_adjacent(gv.x_uv, 1));
  for (Vertex x : {0, 1, gv.x_vu, gv.x_uv}) CHECK(h.strongly_adjacent(gv.x_pair, x));
  CHECK(!h.strongly_adjacent(0, 1));

  GemExpansion heavy = replace_gem(semi_pair(0, 0, 0, 0, 5), 0, 1);
  CHECK(alpha_by_enumeration(heavy.result) == 5);

  GemExpansion dir = replace_gem(semi_pair(0, 0, 2, 3, 4), 0, 1);
  CHECK(dir.result.w.vertex(dir.gems[0].x_pair) == 4);
  CHECK(dir.result.w.vertex(dir.gems[0].x_uv) == 2);
  CHECK(dir.result.w.vertex(dir.gems[0].x_vu) == 3);

  CHECK_THROWS_AS(replace_gem(unit_weights(path(2)), 0, 1), InvalidArgument);
}

TEST_CASE("gem expansion preserves alpha") {
  SplitMix64 rng(67);
  for (int i = 0; i < 200; ++i) {
    int n = static_cast<int>(rng.range(2, 7));
    WeightedTrigraph wt = random_weighted(rng, n, 20, 30, 20);
    if (wt.g.semi_count() > 4) continue;
    Weight expect = alpha_by_enumeration(wt);
    GemExpansion all = replace_all_gems(wt);
    CHECK(all.result.g.is_graph());
    CHECK(all.result.size() == n + 3 * wt.g.semi_count());
    CHECK(alpha_by_enumeration(all.result) == expect);
    for (auto [u, v] : wt.g.semi_pairs()) CHECK(alpha_by_enumeration(replace_gem(wt, u, v).result) == expect);
  }
  WeightedTrigraph plain = unit_weights(cycle(5));
  CHECK(replace_all_gems(plain).result == plain);
}

TEST_CASE("gem order does not change alpha") {
  SplitMix64 rng(71);
  for (int i = 0; i < 60; ++i) {
    WeightedTrigraph wt = random_weighted(rng, 6, 20, 30, 20);
    auto pairs = wt.g.semi_pairs();
    if (pairs.size() < 2 || pairs.size() > 3) continue;
    // Replace in reverse order by hand, carrying the remaining pairs along.
    WeightedTrigraph cur = wt;
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) cur = replace_gem(cur, it->first, it->second).result;
    CHECK(alpha_by_enumeration(cur) == alpha_by_enumeration(replace_all_gems(wt).result));
  }
}

TEST_CASE("width-two tree decompositions") {
  TreeDecomposition tri = tree_decomposition_width2(complete(3));
  CHECK(tree_decomposition_violation(complete(3), tri) == "");
  CHECK(tri.width() == 2);
  CHECK_THROWS_AS(tree_decomposition_width2(complete(4)), NotSeriesParallel);

  SplitMix64 rng(73);
  for (int i = 0; i < 50; ++i) {
    Trigraph t = random_tree(rng, static_cast<int>(rng.range(2, 15)));
    TreeDecomposition td = tree_decomposition_width2(t);
    CHECK(tree_decomposition_violation(t, td) == "");
    CHECK(td.width() == 1);
  }

  GeneratorConfig cfg;
  cfg.seed = 79;
  InstanceGenerator gen(cfg);
  for (int i = 0; i < 50; ++i) {
    WeightedTrigraph wt = gen.series_parallel(static_cast<int>(rng.range(1, 14)));
    TreeDecomposition td = tree_decomposition_width2(wt.g);
    CHECK(tree_decomposition_violation(wt.g, td) == "");
    CHECK(td.width() <= 2);
    GemExpansion exp = replace_all_gems(wt);
    TreeDecomposition aug = augment_decomposition_for_gems(td, exp);
    CHECK(tree_decomposition_violation(exp.result.g, aug) == "");
    CHECK(aug.width() <= std::max(td.width(), 3));
  }
}

TEST_CASE("augmenting a single gem") {
  WeightedTrigraph wt = semi_pair(1, 1, 0, 0, 0);
  TreeDecomposition td = tree_decomposition_width2(wt.g);
  GemExpansion exp = replace_all_gems(wt);
  TreeDecomposition aug = augment_decomposition_for_gems(td, exp);
  CHECK(aug.bags.size() == td.bags.size() + 2);
  CHECK(tree_decomposition_violation(exp.result.g, aug) == "");
  CHECK(augment_decomposition_for_gems(tree_decomposition_width2(path(3)), replace_all_gems(unit_weights(path(3))))
            .bags == tree_decomposition_width2(path(3)).bags);
}

TEST_CASE("tree decomposition checker finds violations") {
  Trigraph p3 = path(3);
  TreeDecomposition bad;
  bad.bags = {{0, 1}, {2}};
  bad.tree = {{1}, {0}};
  CHECK(tree_decomposition_violation(p3, bad) != "");
  TreeDecomposition split;
  split.bags = {{0, 1}, {1, 2}, {0}};
  split.tree = {{1}, {0, 2}, {1}};
  CHECK(tree_decomposition_violation(p3, split) != "");
  CHECK_THROWS_AS(mwss_on_tree_decomposition(p3, {1, 1, 1}, bad), InvalidArgument);
}

TEST_CASE("dynamic programming on tree decompositions") {
  Trigraph single(1);
  CHECK(mwss_on_tree_decomposition(single, {7}, tree_decomposition_width2(single)) == 7);
  Trigraph edge = path(2);
  CHECK(mwss_on_tree_decomposition(edge, {3, 4}, tree_decomposition_width2(edge)) == 4);

  GeneratorConfig cfg;
  cfg.seed = 83;
  InstanceGenerator gen(cfg);
  for (int i = 0; i < 100; ++i) {
    Trigraph g = full_realization(gen.series_parallel(12).g);
    WeightedTrigraph wt(g);
    for (Vertex v = 0; v < 12; ++v) wt.w.set_vertex(v, gen.rng().range(0, 20));
    CHECK(mwss_on_tree_decomposition(g, wt.w.vertices(), tree_decomposition_width2(g)) ==
          alpha_by_enumeration(wt));
  }
}

TEST_CASE("series-parallel solver") {
  CHECK(alpha_series_parallel(unit_weights(cycle(5))) == 2);
  CHECK(alpha_series_parallel(semi_pair(1, 1, 0, 0, 0)) == 2);
  CHECK_THROWS_AS(alpha_series_parallel(unit_weights(complete(4))), NotSeriesParallel);
  GeneratorConfig cfg;
  cfg.seed = 89;
  InstanceGenerator gen(cfg);
  for (int i = 0; i < 100; ++i) {
    WeightedTrigraph wt = gen.next(InstanceClass::SeriesParallel).wt;
    CHECK(alpha_series_parallel(wt) == alpha_by_enumeration(wt));
  }
}

TEST_CASE("complete bipartite solver") {
  CHECK(alpha_complete_bipartite(unit_weights(complete_bipartite_graph(2, 3))) == 3);
  WeightedTrigraph k11(complete_bipartite_graph(1, 1));
  k11.w.set_vertex(0, 5);
  k11.w.set_vertex(1, 2);
  CHECK(alpha_complete_bipartite(k11) == 5);
  WeightedTrigraph k33(complete_bipartite_graph(3, 3));
  const Weight w[6] = {2, 3, 5, 4, 4, 4};
  for (Vertex v = 0; v < 6; ++v) k33.w.set_vertex(v, w[v]);
  CHECK(alpha_complete_bipartite(k33) == 12);
  CHECK_THROWS_AS(alpha_complete_bipartite(unit_weights(cycle(5))), InvalidArgument);
}

TEST_CASE("line graph roots") {
  LineRoot tri = line_graph_root(complete(3));
  CHECK(verify_line_root(complete(3), tri));

  LineRoot p = line_graph_root(path(2));
  CHECK(verify_line_root(path(2), p));
  CHECK(p.root.n == 3);

  Trigraph claw = graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_THROWS_AS(line_graph_root(claw), NotLineGraph);
  // K5 minus an edge and the wheel W5 are among the forbidden subgraphs.
  Trigraph k5e = complete(5);
  k5e.set(0, 1, Adjacency::StrongAnti);
  CHECK_THROWS_AS(line_graph_root(k5e), NotLineGraph);
  Trigraph wheel(6);
  for (int i = 0; i < 5; ++i) {
    wheel.set(i, (i + 1) % 5, Adjacency::StrongAdj);
    wheel.set(i, 5, Adjacency::StrongAdj);
  }
  CHECK_THROWS_AS(line_graph_root(wheel), NotLineGraph);

  Trigraph semi(2);
  semi.set(0, 1, Adjacency::Semi);
  CHECK_THROWS_AS(line_graph_root(semi), InvalidArgument);

  GeneratorConfig cfg;
  cfg.seed = 97;
  InstanceGenerator gen(cfg);
  for (int i = 0; i < 100; ++i) {
    Trigraph h = gen.subcubic_graph(static_cast<int>(gen.rng().range(1, 14)), false);
    Trigraph lg = line_graph_of(h);
    LineRoot r = line_graph_root(lg);
    CHECK(verify_line_root(lg, r));
  }
}

TEST_CASE("line solver") {
  WeightedTrigraph p3(path(3));
  p3.w.set_vertex(0, 1);
  p3.w.set_vertex(1, 5);
  p3.w.set_vertex(2, 1);
  CHECK(alpha_line(p3) == 5);
  WeightedTrigraph one(Trigraph(1));
  one.w.set_vertex(0, 9);
  CHECK(alpha_line(one) == 9);
  CHECK_THROWS_AS(alpha_line(unit_weights(graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}}))), NotLineGraph);

  GeneratorConfig cfg;
  cfg.seed = 101;
  InstanceGenerator gen(cfg);
  for (int i = 0; i < 100; ++i) {
    WeightedTrigraph wt = gen.next(InstanceClass::Line).wt;
    CHECK(alpha_line(wt) == alpha_by_enumeration(wt));
    // The gem expansion of a line trigraph is a line graph again.
    GemExpansion exp = replace_all_gems(wt);
    CHECK(verify_line_root(exp.result.g, line_graph_root(exp.result.g)));
  }
  for (int i = 0; i < 50; ++i) {
    Trigraph h = gen.subcubic_graph(static_cast<int>(gen.rng().range(1, 10)), false);
    WeightedTrigraph lw = unit_weights(line_graph_of(h));
    EdgeWeightedGraph eh;
    eh.n = h.size();
    for (Vertex u = 0; u < h.size(); ++u)
      for (Vertex v = u + 1; v < h.size(); ++v)
        if (h.strongly_adjacent(u, v)) eh.add_edge(u, v, 1);
    CHECK(alpha_line(lw) == brute_max_weight_matching(eh));
  }
}

TEST_CASE("alpha_basic dispatch") {
  CHECK(alpha_basic(unit_weights(complete_bipartite_graph(3, 3))) == 3);
  CHECK(alpha_basic(unit_weights(cycle(7))) == 3);
  CHECK(alpha_basic(unit_weights(complete(6))) == 1);
  CHECK(alpha_basic(unit_weights(complete(6)), BasicClass::Line) == 1);
}
