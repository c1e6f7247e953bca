#include "doctest.h"
#include "helpers.hpp"
#include "wheelfree/solver.hpp"

using namespace wheelfree;
using namespace wheelfree::test;

namespace {

Trigraph two_c6_on_pair() {
  return graph_from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                               {0, 6}, {6, 7}, {7, 3}, {3, 8}, {8, 9}, {9, 0}});
}

}  // namespace

TEST_CASE("basic inputs go straight to the case solvers") {
  WeightedTrigraph k33(complete_bipartite_graph(3, 3));
  const Weight w[6] = {2, 3, 5, 4, 4, 4};
  for (Vertex v = 0; v < 6; ++v) k33.w.set_vertex(v, w[v]);
  SolveResult r = alpha(k33);
  CHECK(r.alpha == 12);
  CHECK(r.steps == 0);
  CHECK(r.trace.terminal_class == BasicClass::CompleteBipartite);
  CHECK(alpha(WeightedTrigraph(Trigraph(0))).alpha == 0);
}

TEST_CASE("two holes on a stable pair") {
  WeightedTrigraph wt = unit_weights(two_c6_on_pair());
  SolveResult r = alpha(wt);
  CHECK(r.alpha == brute_alpha(wt));
  CHECK(r.steps >= 1);
  CHECK(r.trace.steps.size() == static_cast<std::size_t>(r.steps));
  CHECK(alpha(wt, SolveOptions{false}).trace.steps.empty());
}

TEST_CASE("solver matches brute force on generated instances") {
  GeneratorConfig cfg;
  cfg.seed = 103;
  cfg.n_max = 12;
  InstanceGenerator gen(cfg);
  for (int i = 0; i < 200; ++i) {
    GeneratedInstance inst = gen.next();
    SolveResult r = alpha(inst.wt);
    CHECK(r.alpha == brute_alpha(inst.wt));
    CHECK(r.alpha >= set_weight(inst.wt, {}));
    CHECK(r.steps < std::max(inst.wt.size(), 1));
  }
}

TEST_CASE("each recursion level preserves alpha") {
  GeneratorConfig cfg;
  cfg.seed = 107;
  cfg.class_mix = {0, 0, 0, 1, 1};
  InstanceGenerator gen(cfg);
  for (int i = 0; i < 40; ++i) {
    WeightedTrigraph wt = gen.next().wt;
    SolveResult r = alpha(wt);
    for (const TraceStep& s : r.trace.steps) {
      // The table's last entry is alpha of the A-block with all of C.
      CHECK(s.table.size() == (1u << s.part.c.size()));
      for (std::size_t m = 0; m < s.table.size(); ++m) CHECK(s.table[m] >= s.table[0]);
      if (s.part.kind == CutKind::Clique) CHECK(s.offset == s.table[0]);
      else CHECK(s.offset == 0);
    }
  }
}

TEST_CASE("class violations surface as invalid input") {
  // The 5-wheel is neither basic nor decomposable.
  Trigraph w5(6);
  for (int i = 0; i < 5; ++i) {
    w5.set(i, (i + 1) % 5, Adjacency::StrongAdj);
    w5.set(i, 5, Adjacency::StrongAdj);
  }
  CHECK_THROWS_AS(alpha(unit_weights(w5)), InvalidInput);

  WeightedTrigraph bad(path(2));
  bad.w.set_pair(0, 1, 0, 0, 1);
  CHECK_THROWS_AS(alpha(bad), InvalidArgument);
}

TEST_CASE("extraction on graphs") {
  CHECK(max_stable_set_graph(WeightedTrigraph(Trigraph(0))).stable_set.empty());
  WeightedTrigraph single(Trigraph(1));
  single.w.set_vertex(0, 3);
  ExtractionResult one = max_stable_set_graph(single);
  CHECK(one.stable_set == VertexSet{0});
  CHECK(one.weight == 3);

  ExtractionResult c5 = max_stable_set_graph(unit_weights(cycle(5)));
  CHECK(c5.weight == 2);
  CHECK(c5.stable_set.size() == 2);
  CHECK(is_stable_set(cycle(5), c5.stable_set));

  WeightedTrigraph semi(Trigraph(2));
  semi.g.set(0, 1, Adjacency::Semi);
  CHECK_THROWS_AS(max_stable_set_graph(semi), InvalidArgument);

  GeneratorConfig cfg;
  cfg.seed = 109;
  cfg.semi_percent = 0;
  InstanceGenerator gen(cfg);
  for (int i = 0; i < 60; ++i) {
    WeightedTrigraph wt = gen.next().wt;
    if (!wt.g.is_graph()) continue;
    ExtractionResult ex = max_stable_set_graph(wt);
    CHECK(is_stable_set(wt.g, ex.stable_set));
    CHECK(ex.weight == vertex_sum(wt, ex.stable_set));
    CHECK(ex.weight == alpha(wt).alpha);
  }
}
