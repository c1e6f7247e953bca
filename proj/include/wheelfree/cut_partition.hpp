#pragma once

#include <string>
#include <vector>

#include "wheelfree/trigraph.hpp"

namespace wheelfree {

enum class CutKind { Clique, Stable };
enum class Side { A, B };

const char* to_string(CutKind k);

// (A, B, C) partition of V(G): A, B non-empty and strongly anti-complete.
struct CutPartition {
  VertexSet a;
  VertexSet b;
  VertexSet c;
  CutKind kind = CutKind::Clique;
  bool operator==(const CutPartition&) const = default;
};

// Empty string when part is a good cut-partition of g, otherwise the reason.
std::string good_cut_partition_violation(const Trigraph& g, const CutPartition& part);
bool is_good_cut_partition(const Trigraph& g, const CutPartition& part);

// Trigraph on X ∪ C with, for the stable kind, the C pair made semi.
struct Block {
  Trigraph trig;
  Side side = Side::A;
  std::vector<Vertex> label_map;  // block vertex -> vertex of the source
};

Block make_block(const Trigraph& g, const CutPartition& part, Side side);

// Same as make_block without re-validating the partition.
Block make_block_unchecked(const Trigraph& g, const CutPartition& part, Side side);

}  // namespace wheelfree
