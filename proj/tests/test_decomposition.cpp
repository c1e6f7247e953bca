#include "doctest.h"
#include "helpers.hpp"
#include "wheelfree/decomposition.hpp"

using namespace wheelfree;
using namespace wheelfree::test;

namespace {

// Two C6 holes 0..5 and 0,6,7,3,8,9 sharing the stable pair {0, 3}.
Trigraph two_c6_on_pair() {
  return graph_from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                               {0, 6}, {6, 7}, {7, 3}, {3, 8}, {8, 9}, {9, 0}});
}

// Brute-force existence of a good cut-partition over all candidate cutsets.
bool has_good_cut_partition(const Trigraph& g) {
  const int n = g.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    VertexSet c = mask_to_set(mask, n);
    if (c.size() > 3) continue;
    bool clique = is_strong_clique(g, c);
    bool stable_pair = c.size() == 2 && g.theta(c[0], c[1]) <= 0;
    if (!clique && !stable_pair) continue;
    VertexSet rest;
    for (Vertex v = 0; v < n; ++v)
      if (!(mask >> v & 1)) rest.push_back(v);
    InducedResult ir = induced(g, rest);
    auto comps = components(ir.g);
    if (comps.size() < 2) continue;
    CutPartition part;
    part.c = c;
    part.kind = clique ? CutKind::Clique : CutKind::Stable;
    for (Vertex v : comps[0]) part.a.push_back(ir.to_old[v]);
    for (std::size_t i = 1; i < comps.size(); ++i)
      for (Vertex v : comps[i]) part.b.push_back(ir.to_old[v]);
    part.b = normalized(part.b);
    if (is_good_cut_partition(g, part)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("find_good_cut_partition examples") {
  CHECK(!find_good_cut_partition(complete_bipartite_graph(3, 3)));

  Trigraph bowtie = graph_from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  auto p = find_good_cut_partition(bowtie);
  REQUIRE(p);
  CHECK(p->kind == CutKind::Clique);
  CHECK(p->c == VertexSet{2});
  CHECK(p->a == VertexSet{0, 1});

  auto q = find_good_cut_partition(cycle(6));
  REQUIRE(q);
  CHECK(q->kind == CutKind::Stable);
  CHECK(q->c == VertexSet{0, 2});
  CHECK(is_good_cut_partition(cycle(6), *q));

  auto d = find_good_cut_partition(Trigraph(3));
  REQUIRE(d);
  CHECK(d->c.empty());
  CHECK(d->a == VertexSet{0});
  CHECK(d->b == VertexSet{1, 2});
}

TEST_CASE("fast search matches the naive candidate order") {
  GeneratorConfig cfg;
  cfg.seed = 41;
  cfg.n_max = 11;
  InstanceGenerator gen(cfg);
  SplitMix64 rng(43);
  for (int i = 0; i < 200; ++i) {
    bool valid = i % 2;
    Trigraph g = valid ? gen.next().wt.g : random_trigraph(rng, static_cast<int>(rng.range(1, 9)), 30, 15);
    auto fast = find_good_cut_partition(g);
    CHECK(fast == find_good_cut_partition_naive(g));
    // Outside the class a stable cutset need not have narrow paths on both sides.
    if (!valid) continue;
    CHECK(fast.has_value() == has_good_cut_partition(g));
    if (fast) CHECK(good_cut_partition_violation(g, *fast) == "");
  }
}

TEST_CASE("refine_cut_partition") {
  Trigraph tri_a = graph_from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
  CutPartition part{{0, 1}, {3, 4}, {2}, CutKind::Clique};
  CHECK(!refine_cut_partition(tri_a, part));

  // Path 0-1-2-3-4-5 split at 3: the A-block 0-1-2-3 has cut vertices.
  Trigraph p6 = path(6);
  CutPartition mid{{0, 1, 2}, {4, 5}, {3}, CutKind::Clique};
  auto r = refine_cut_partition(p6, mid);
  REQUIRE(r);
  CHECK(is_good_cut_partition(p6, *r));
  CHECK(r->a.size() + r->c.size() < mid.a.size() + mid.c.size());

  CHECK_THROWS_AS(refine_cut_partition(p6, CutPartition{{0}, {5}, {3}, CutKind::Clique}), InvalidArgument);
}

TEST_CASE("extreme decomposition") {
  CHECK(!find_extreme_cut_partition(complete_bipartite_graph(3, 3)).part);

  Trigraph g = two_c6_on_pair();
  ExtremeResult ex = find_extreme_cut_partition(g);
  REQUIRE(ex.part);
  Block a = make_block(g, *ex.part, Side::A);
  CHECK(!find_good_cut_partition(a.trig));
  CHECK(classify_basic(a.trig) == BasicClass::SeriesParallel);
  CHECK(ex.refinements < g.size());

  GeneratorConfig cfg;
  cfg.seed = 47;
  cfg.class_mix = {0, 0, 0, 1, 1};
  InstanceGenerator gen(cfg);
  for (int i = 0; i < 60; ++i) {
    Trigraph t = gen.next().wt.g;
    ExtremeResult e = find_extreme_cut_partition(t);
    if (!e.part) continue;
    CHECK(is_good_cut_partition(t, *e.part));
    Block ab = make_block(t, *e.part, Side::A);
    CHECK(!find_good_cut_partition(ab.trig));
    CHECK(is_isk4_wheel_free(ab.trig));
    CHECK(is_isk4_wheel_free(make_block(t, *e.part, Side::B).trig));
  }
}

TEST_CASE("decompose trace") {
  DecompositionTrace basic = decompose(complete_bipartite_graph(3, 3));
  CHECK(basic.steps.empty());
  CHECK(basic.terminal.size() == 6);
  CHECK(basic.terminal_class == BasicClass::CompleteBipartite);

  Trigraph g = two_c6_on_pair();
  DecompositionTrace t = decompose(g);
  CHECK(!t.steps.empty());
  int last = g.size() + 1;
  for (const auto& s : t.steps) {
    CHECK(s.b_side_size < last);
    last = s.b_side_size;
  }
  std::string json = trace_to_json(t);
  CHECK(json == trace_to_json(decompose(g)));
  CHECK(json.find("\"version\"") != std::string::npos);
  CHECK(trace_to_dot(t).rfind("digraph", 0) == 0);
}
