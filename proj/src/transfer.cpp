#include "wheelfree/transfer.hpp"

#include <algorithm>
#include <string>

namespace wheelfree {

namespace {

WeightedTrigraph weighted_block(const WeightedTrigraph& wt, const CutPartition& part, Side side,
                                std::vector<Vertex>* to_old) {
  Block blk = make_block_unchecked(wt.g, part, side);
  WeightFunction w = restrict_weights(wt.w, blk.label_map);
  *to_old = blk.label_map;
  return WeightedTrigraph(std::move(blk.trig), std::move(w));
}

std::vector<Vertex> inverse_map(const std::vector<Vertex>& to_old, int n) {
  std::vector<Vertex> to_new(n, -1);
  for (std::size_t i = 0; i < to_old.size(); ++i) to_new[to_old[i]] = static_cast<Vertex>(i);
  return to_new;
}

void require_kind(const WeightedTrigraph& wt, const CutPartition& part, CutKind kind) {
  if (part.kind != kind)
    throw InvalidArgument(std::string("expected a cut-partition of type ") + to_string(kind));
  if (auto e = good_cut_partition_violation(wt.g, part); !e.empty())
    throw InvalidArgument("not a good cut-partition: " + e);
}

CutsetAlphaTable table_on_block(const WeightedTrigraph& block, const std::vector<Vertex>& to_old,
                                const CutPartition& part, const AlphaOracle& block_alpha) {
  auto to_new = inverse_map(to_old, static_cast<int>(to_old.empty() ? 0 : to_old.back() + 1));
  VertexSet a_local;
  for (Vertex v : part.a) a_local.push_back(to_new[v]);
  CutsetAlphaTable table;
  table.c = part.c;
  const unsigned subsets = 1u << part.c.size();
  table.entries.resize(subsets);
  for (unsigned mask = 0; mask < subsets; ++mask) {
    VertexSet r = a_local;
    for (std::size_t i = 0; i < part.c.size(); ++i)
      if ((mask >> i) & 1) r.push_back(to_new[part.c[i]]);
    ReductionResult red = reduce(block, normalized(std::move(r)));
    table.entries[mask] = checked_add(block_alpha(red.reduced), red.exterior);
  }
  return table;
}

void check_valid(const WeightedTrigraph& wb, const char* what) {
  ValidationReport rep = validate(wb);
  if (!rep.ok) throw InternalError(std::string(what) + " produced an invalid weight function: " + rep.message);
}

}  // namespace

CutsetAlphaTable build_cutset_table(const WeightedTrigraph& wt, const CutPartition& part,
                                    const AlphaOracle& block_alpha) {
  std::vector<Vertex> to_old;
  WeightedTrigraph block = weighted_block(wt, part, Side::A, &to_old);
  return table_on_block(block, to_old, part, block_alpha);
}

CliqueTransferResult clique_cut_transfer_unchecked(const WeightedTrigraph& wt, const CutPartition& part,
                                                   const AlphaOracle& block_alpha) {
  CliqueTransferResult res;
  res.table = build_cutset_table(wt, part, block_alpha);
  res.k = res.table.alpha_a();
  res.wb = weighted_block(wt, part, Side::B, &res.b_to_old);
  auto to_new = inverse_map(res.b_to_old, wt.g.size());
  for (std::size_t i = 0; i < part.c.size(); ++i) {
    Weight wc = checked_sub(res.table.at(1u << i), res.k);
    if (wc < 0) throw InternalError("clique transfer produced a negative vertex weight");
    res.wb.w.set_vertex(to_new[part.c[i]], wc);
  }
  check_valid(res.wb, "clique transfer");
  return res;
}

StableTransferResult stable_cut_transfer_unchecked(const WeightedTrigraph& wt, const CutPartition& part,
                                                   const AlphaOracle& block_alpha) {
  StableTransferResult res;
  res.table = build_cutset_table(wt, part, block_alpha);
  res.wb = weighted_block(wt, part, Side::B, &res.b_to_old);
  auto to_new = inverse_map(res.b_to_old, wt.g.size());
  const Vertex c1 = part.c[0], c2 = part.c[1];
  const Weight a_empty = res.table.at(0b00);
  const Weight a_c1 = res.table.at(0b01);
  const Weight a_c2 = res.table.at(0b10);
  const Weight a_both = res.table.at(0b11);
  const Weight w_c2 = wt.w.vertex(c2);

  const Weight wb_c1 = checked_sub(a_both, w_c2);
  const Weight wb_c1c2 = checked_add(checked_sub(a_c1, a_both), w_c2);  // w_B(c1, c2)
  const Weight wb_c2c1 = checked_sub(a_c2, w_c2);                        // w_B(c2, c1)
  if (wb_c1 < 0 || wb_c1c2 < 0 || wb_c2c1 < 0)
    throw InternalError("stable transfer produced a negative weight");
  const Vertex b1 = to_new[c1], b2 = to_new[c2];
  res.wb.w.set_vertex(b1, wb_c1);
  res.wb.w.set_vertex(b2, w_c2);
  if (std::max(wb_c1c2, wb_c2c1) > a_empty)
    throw InternalError("stable transfer violates the pair weight cap");
  res.wb.w.set_pair(b1, b2, wb_c1c2, wb_c2c1, a_empty);
  check_valid(res.wb, "stable transfer");
  return res;
}

CliqueTransferResult clique_cut_transfer(const WeightedTrigraph& wt, const CutPartition& part,
                                         const AlphaOracle& block_alpha) {
  require_kind(wt, part, CutKind::Clique);
  return clique_cut_transfer_unchecked(wt, part, block_alpha);
}

StableTransferResult stable_cut_transfer(const WeightedTrigraph& wt, const CutPartition& part,
                                         const AlphaOracle& block_alpha) {
  require_kind(wt, part, CutKind::Stable);
  return stable_cut_transfer_unchecked(wt, part, block_alpha);
}

}  // namespace wheelfree
