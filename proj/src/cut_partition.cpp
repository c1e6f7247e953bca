#include "wheelfree/cut_partition.hpp"

#include <algorithm>

namespace wheelfree {

const char* to_string(CutKind k) { return k == CutKind::Clique ? "clique" : "stable"; }

namespace {

bool has_narrow_path_inside(const Trigraph& g, const VertexSet& side, Vertex c1, Vertex c2) {
  VertexSet x = side;
  x.push_back(c1);
  x.push_back(c2);
  x = normalized(x);
  InducedResult ir = induced(g, x);
  return narrow_path(ir.g, ir.to_new[c1], ir.to_new[c2]).has_value();
}

}  // namespace

std::string good_cut_partition_violation(const Trigraph& g, const CutPartition& part) {
  const int n = g.size();
  std::vector<int> where(n, -1);
  auto mark = [&](const VertexSet& s, int tag) -> std::string {
    for (Vertex v : s) {
      if (v < 0 || v >= n) return "vertex out of range";
      if (where[v] != -1) return "sets overlap";
      where[v] = tag;
    }
    return {};
  };
  for (auto [s, tag] : {std::pair{&part.a, 0}, {&part.b, 1}, {&part.c, 2}})
    if (auto e = mark(*s, tag); !e.empty()) return e;
  if (std::count(where.begin(), where.end(), -1) != 0) return "sets do not cover the vertex set";
  if (part.a.empty() || part.b.empty()) return "A and B must be non-empty";
  for (Vertex u : part.a)
    for (Vertex v : part.b)
      if (g.theta(u, v) != -1) return "A is not strongly anti-complete to B";
  if (part.kind == CutKind::Clique) {
    if (part.c.size() > 3) return "clique cutset larger than three";
    if (!is_strong_clique(g, part.c)) return "C is not a strong clique";
  } else {
    if (part.c.size() != 2) return "stable cutset must have two vertices";
    if (!is_stable_set(g, part.c)) return "C is not a stable set";
    if (!has_narrow_path_inside(g, part.a, part.c[0], part.c[1]))
      return "no narrow path through A between the cutset vertices";
    if (!has_narrow_path_inside(g, part.b, part.c[0], part.c[1]))
      return "no narrow path through B between the cutset vertices";
  }
  return {};
}

bool is_good_cut_partition(const Trigraph& g, const CutPartition& part) {
  return good_cut_partition_violation(g, part).empty();
}

Block make_block_unchecked(const Trigraph& g, const CutPartition& part, Side side) {
  VertexSet x = side == Side::A ? part.a : part.b;
  x.insert(x.end(), part.c.begin(), part.c.end());
  x = normalized(x);
  InducedResult ir = induced(g, x);
  Block blk{std::move(ir.g), side, std::move(ir.to_old)};
  if (part.kind == CutKind::Stable)
    blk.trig.set(ir.to_new[part.c[0]], ir.to_new[part.c[1]], Adjacency::Semi);
  return blk;
}

Block make_block(const Trigraph& g, const CutPartition& part, Side side) {
  if (auto e = good_cut_partition_violation(g, part); !e.empty())
    throw InvalidArgument("not a good cut-partition: " + e);
  return make_block_unchecked(g, part, side);
}

}  // namespace wheelfree
