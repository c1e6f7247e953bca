#pragma once

#include <functional>
#include <vector>

#include "wheelfree/cut_partition.hpp"
#include "wheelfree/weights.hpp"

namespace wheelfree {

// Exact solver for weighted stability, used on reductions of the A-block.
using AlphaOracle = std::function<Weight(const WeightedTrigraph&)>;

// alpha_{A ∪ C'} for every C' ⊆ C. Bit i of the mask selects c[i].
struct CutsetAlphaTable {
  VertexSet c;
  std::vector<Weight> entries;

  Weight at(unsigned mask) const { return entries.at(mask); }
  Weight alpha_a() const { return entries.at(0); }
  Weight alpha_full() const { return entries.back(); }
};

// Builds the table over all subsets of part.c from reductions of the A-block.
CutsetAlphaTable build_cutset_table(const WeightedTrigraph& wt, const CutPartition& part,
                                    const AlphaOracle& block_alpha);

struct CliqueTransferResult {
  WeightedTrigraph wb;            // weighted B-block
  std::vector<Vertex> b_to_old;   // B-block vertex -> vertex of wt
  Weight k = 0;                   // alpha_A
  CutsetAlphaTable table;
};

struct StableTransferResult {
  WeightedTrigraph wb;
  std::vector<Vertex> b_to_old;
  CutsetAlphaTable table;
};

// alpha(G, w) = k + alpha(wb).
CliqueTransferResult clique_cut_transfer(const WeightedTrigraph& wt, const CutPartition& part,
                                         const AlphaOracle& block_alpha);
// alpha(G, w) = alpha(wb). c1 is the smaller label of the cutset.
StableTransferResult stable_cut_transfer(const WeightedTrigraph& wt, const CutPartition& part,
                                         const AlphaOracle& block_alpha);

// Variants that trust the caller's partition (solver hot path).
CliqueTransferResult clique_cut_transfer_unchecked(const WeightedTrigraph& wt, const CutPartition& part,
                                                   const AlphaOracle& block_alpha);
StableTransferResult stable_cut_transfer_unchecked(const WeightedTrigraph& wt, const CutPartition& part,
                                                   const AlphaOracle& block_alpha);

}  // namespace wheelfree
