#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wheelfree/basic_solvers.hpp"
#include "wheelfree/cut_partition.hpp"
#include "wheelfree/weights.hpp"

namespace wheelfree {

// First good cut-partition in the fixed candidate order: strong cliques by
// size (empty set, vertices, pairs, triples), then stable pairs, each size
// in lexicographic order. A is the component of G \ C holding the smallest
// label; B is the union of the other components. nullopt certifies that no
// good cut-partition exists.
std::optional<CutPartition> find_good_cut_partition(const Trigraph& g);

// Lifts a good cut-partition of the A-block to one of g with a strictly
// smaller A ∪ C. nullopt certifies that the A-block has no good cut-partition.
std::optional<CutPartition> refine_cut_partition(const Trigraph& g, const CutPartition& part);

struct ExtremeResult {
  std::optional<CutPartition> part;  // nullopt: g itself has no good cut-partition
  int refinements = 0;
};

// Good cut-partition whose A-block has no good cut-partition, hence is basic
// when g is {ISK4, wheel}-free.
ExtremeResult find_extreme_cut_partition(const Trigraph& g);

// Candidate order brute force, used to cross-check the fast search.
std::optional<CutPartition> find_good_cut_partition_naive(const Trigraph& g);

// One recursion level, with all vertex sets in labels of the input trigraph.
struct TraceStep {
  CutPartition part;
  VertexSet a_block;
  BasicClass a_class = BasicClass::SeriesParallel;
  int refinements = 0;
  std::vector<Weight> table;         // alpha_{A ∪ C'} by subset mask; empty without weights
  Weight offset = 0;                 // k added to the answer (clique kind), 0 otherwise
  std::vector<Weight> cutset_vertex_weights;  // transferred weights on C in the B-block
  std::optional<PairWeight> cutset_pair_weights;  // stable kind only
  int b_side_size = 0;               // vertices of the B-block
};

struct DecompositionTrace {
  std::vector<TraceStep> steps;
  VertexSet terminal;                // vertices of the final basic trigraph
  BasicClass terminal_class = BasicClass::SeriesParallel;
};

// Repeated extreme decomposition without weights: each step removes the
// A side and continues on the B-block.
DecompositionTrace decompose(const Trigraph& g);

// Stable-key-order text document of a trace.
std::string trace_to_json(const DecompositionTrace& trace, int indent = 2);
// Block tree in Graphviz dot.
std::string trace_to_dot(const DecompositionTrace& trace);

}  // namespace wheelfree
