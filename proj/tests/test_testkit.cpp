#include "doctest.h"
#include "helpers.hpp"
#include "wheelfree/decomposition.hpp"
#include "wheelfree/io.hpp"
#include "wheelfree/testkit.hpp"

using namespace wheelfree;
using namespace wheelfree::test;

namespace {

Trigraph wheel(int rim) {
  Trigraph g(rim + 1);
  for (int i = 0; i < rim; ++i) {
    g.set(i, (i + 1) % rim, Adjacency::StrongAdj);
    g.set(i, rim, Adjacency::StrongAdj);
  }
  return g;
}

// Graph on n vertices from the bits of code over the lexicographic pairs.
Trigraph graph_from_code(int n, unsigned code) {
  Trigraph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (code >> bit & 1) g.set(u, v, Adjacency::StrongAdj);
  return g;
}

int edge_count(const Trigraph& g) {
  int m = 0;
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v) m += g.strongly_adjacent(u, v);
  return m;
}

}  // namespace

TEST_CASE("brute alpha") {
  CHECK(brute_alpha(WeightedTrigraph(Trigraph(0))) == 0);
  CHECK(brute_alpha(unit_weights(cycle(7))) == 3);
  CHECK_THROWS_AS(brute_alpha(unit_weights(path(17))), SizeLimitExceeded);
  SplitMix64 rng(113);
  for (int i = 0; i < 40; ++i) {
    Trigraph g = random_trigraph(rng, 12, 25, 0);
    CHECK(brute_alpha(unit_weights(g)) == mis_size(g));
  }
}

TEST_CASE("ISK4 and wheel detection") {
  CHECK(!is_isk4_wheel_free(complete(4)));
  CHECK(!is_isk4_wheel_free(wheel(5)));
  CHECK(!is_isk4_wheel_free(wheel(4)));
  CHECK(is_isk4_wheel_free(cycle(6)));
  CHECK(is_isk4_wheel_free(complete_bipartite_graph(3, 3)));
  CHECK(is_isk4_wheel_free(complete(3)));
  // K_{3,3} minus a perfect matching is C6; K_{3,3} with one extra edge has a wheel.
  Trigraph k33e = complete_bipartite_graph(3, 3);
  k33e.set(0, 1, Adjacency::StrongAdj);
  CHECK(!is_isk4_wheel_free(k33e));
  Trigraph sub_k4 = graph_from_edges(7, {{0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 5}, {2, 6}, {4, 3}, {5, 3}, {6, 3}});
  CHECK(!is_isk4_wheel_free(sub_k4));
  // A semi pair whose full realization creates a wheel.
  Trigraph semi_w = wheel(5);
  semi_w.set(0, 5, Adjacency::Semi);
  semi_w.set(1, 5, Adjacency::Semi);
  semi_w.set(2, 5, Adjacency::Semi);
  CHECK(!is_isk4_wheel_free(semi_w));
  // Two diamonds glued on a common triangle: the triangle is a clique cutset
  // and the result stays in the class.
  Trigraph two_diamonds = graph_from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}});
  CHECK(is_isk4_wheel_free(two_diamonds));
  // A diamond whose two tips are joined by a 2-path has a 4-wheel around 1.
  Trigraph glued_edge = graph_from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {3, 4}});
  CHECK(!is_isk4_wheel_free(glued_edge));
  CHECK_THROWS_AS(is_isk4_wheel_free(path(17)), SizeLimitExceeded);

  GeneratorConfig cfg;
  cfg.seed = 127;
  InstanceGenerator gen(cfg);
  for (int i = 0; i < 30; ++i) CHECK(is_isk4_wheel_free(gen.series_parallel(10).g));
}

TEST_CASE("generators are reproducible and valid") {
  GeneratorConfig cfg;
  cfg.seed = 131;
  cfg.n_max = 12;
  auto a = gen_basic(cfg, 40);
  auto b = gen_basic(cfg, 40);
  REQUIRE(a.size() == 40);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(write_instance(a[i].wt) == write_instance(b[i].wt));
    CHECK(validate(a[i].wt).ok);
    CHECK(is_isk4_wheel_free(a[i].wt.g));
    CHECK(a[i].wt.size() <= 12);
    if (a[i].cls == InstanceClass::Line) {
      // Every triangle of the full realization is strong.
      const Trigraph& g = a[i].wt.g;
      for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
          for (int w = v + 1; w < g.size(); ++w)
            if (g.full_adjacent(u, v) && g.full_adjacent(v, w) && g.full_adjacent(u, w))
              CHECK(is_strong_clique(g, {u, v, w}));
    }
  }
  auto glued = gen_glued(cfg, 40);
  for (const auto& inst : glued) {
    CHECK(is_isk4_wheel_free(inst.wt.g));
    CHECK(validate(inst.wt).ok);
  }
}

TEST_CASE("glued examples decompose as expected") {
  Trigraph two_c6 = graph_from_edges(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                                          {0, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 10}, {10, 0}});
  CHECK(is_isk4_wheel_free(two_c6));
  auto p = find_good_cut_partition(two_c6);
  REQUIRE(p);
  CHECK(p->kind == CutKind::Clique);
  CHECK(p->c == VertexSet{0});

  // A C6 block with the semi pair {0, 3} replaced by the path 0-6-7-3.
  Trigraph subst = graph_from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {6, 7}, {7, 3}});
  CHECK(is_isk4_wheel_free(subst));
  auto q = find_good_cut_partition(subst);
  REQUIRE(q);
  CHECK(q->kind == CutKind::Stable);
}

TEST_CASE("Poljak double subdivision") {
  Trigraph edge = path(2);
  Trigraph p4 = poljak_double_subdivision(edge);
  CHECK(p4.size() == 4);
  CHECK(brute_alpha(unit_weights(p4)) == 2);
  Trigraph c9 = poljak_double_subdivision(complete(3));
  CHECK(c9.size() == 9);
  CHECK(brute_alpha(unit_weights(c9)) == 4);
  CHECK(poljak_double_subdivision(Trigraph(3)) == Trigraph(3));

  for (int n = 1; n <= 5; ++n)
    for (unsigned code = 0; code < (1u << (n * (n - 1) / 2)); code += 7) {
      Trigraph g = graph_from_code(n, code);
      CHECK(mis_size(poljak_double_subdivision(g)) == mis_size(g) + edge_count(g));
    }
}

TEST_CASE("two-extension") {
  Trigraph t = two_extension(path(3), 1);
  CHECK(t.size() == 7);
  CHECK(t.full_neighbors(6).size() == 4);
  CHECK(t.strongly_adjacent(0, 2));
  CHECK(t.strongly_adjacent(5, 1));
  CHECK(!t.strongly_adjacent(0, 1));
  CHECK_THROWS_AS(two_extension(complete(3), 1), InvalidArgument);
  CHECK_THROWS_AS(two_extension(path(3), 0), InvalidArgument);

  for (int n = 1; n <= 5; ++n)
    for (unsigned code = 0; code < (1u << (n * (n - 1) / 2)); code += 5) {
      Trigraph g = graph_from_code(n, code);
      Trigraph h = extended_bipartite_from(g);
      CHECK(h.size() == n + 5 * edge_count(g));
      CHECK(mis_size(h) == mis_size(g) + 2 * edge_count(g));
    }
}

TEST_CASE("bipartite trigraph hardness") {
  HardnessInstance k3 = bipartite_trigraph_hardness(complete(3));
  CHECK(k3.wt.size() == 6);
  CHECK(brute_alpha(k3.wt) == 7);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) CHECK(!k3.wt.g.strongly_adjacent(u, v));
  CHECK(brute_alpha(bipartite_trigraph_hardness(path(2)).wt) == 3);
  CHECK(brute_alpha(bipartite_trigraph_hardness(Trigraph(3)).wt) == 3);

  // [[S]] splits into source vertices and arc contributions.
  SplitMix64 rng(137);
  HardnessInstance inst = bipartite_trigraph_hardness(graph_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}}));
  for (int i = 0; i < 300; ++i) {
    VertexSet s = random_subset(rng, inst.wt.size());
    Weight expect = 0;
    for (Vertex v : s)
      if (v < inst.source.size()) ++expect;
    for (int a = 0; a < static_cast<int>(inst.arcs.size()); ++a) {
      Weight c = arc_contribution(inst, a, s);
      CHECK((c == 1 || c == 2));
      expect += c;
    }
    CHECK(set_weight(inst.wt, s) == expect);
  }
  HardnessInstance e = bipartite_trigraph_hardness(path(2));
  CHECK(arc_contribution(e, 0, {0, 2}) == 2);
  CHECK(arc_contribution(e, 0, {0, 1}) == 1);
  CHECK_THROWS_AS(arc_contribution(e, 1, {}), InvalidArgument);
}

TEST_CASE("SplitMix64 is fixed") {
  SplitMix64 a(0);
  CHECK(a.next() == 0xe220a8397b1dcdafull);
  SplitMix64 b(5);
  for (int i = 0; i < 1000; ++i) {
    auto r = b.range(-3, 3);
    CHECK(r >= -3);
    CHECK(r <= 3);
  }
}
