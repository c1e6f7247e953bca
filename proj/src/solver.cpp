#include "wheelfree/solver.hpp"

#include "wheelfree/transfer.hpp"

namespace wheelfree {

namespace {

Weight basic_oracle(const WeightedTrigraph& wt) { return alpha_basic(wt); }

}  // namespace

SolveResult alpha(const WeightedTrigraph& wt, const SolveOptions& options) {
  if (wt.w.size() != wt.g.size()) throw InvalidArgument("weight function size differs from vertex count");
  if (ValidationReport rep = validate(wt); !rep.ok) throw InvalidArgument("invalid weights: " + rep.message);

  SolveResult res;
  WeightedTrigraph cur = wt;
  std::vector<Vertex> labels(wt.size());
  for (int i = 0; i < wt.size(); ++i) labels[i] = i;
  auto lift = [&](const VertexSet& s) {
    VertexSet out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(labels[v]);
    return out;
  };
  Weight total = 0;
  while (true) {
    ExtremeResult ex = find_extreme_cut_partition(cur.g);
    if (!ex.part) {
      BasicClass cls = classify_basic(cur.g);
      total = checked_add(total, alpha_basic(cur, cls));
      if (options.trace) {
        res.trace.terminal = labels;
        res.trace.terminal_class = cls;
      }
      break;
    }
    const CutPartition& part = *ex.part;
    if (++res.steps > wt.size()) throw InternalError("recursion did not shrink");
    TraceStep step;
    std::vector<Vertex> b_to_old;
    WeightedTrigraph next;
    if (part.kind == CutKind::Clique) {
      CliqueTransferResult tr = clique_cut_transfer_unchecked(cur, part, basic_oracle);
      total = checked_add(total, tr.k);
      step.table = tr.table.entries;
      step.offset = tr.k;
      b_to_old = std::move(tr.b_to_old);
      next = std::move(tr.wb);
    } else {
      StableTransferResult tr = stable_cut_transfer_unchecked(cur, part, basic_oracle);
      step.table = tr.table.entries;
      b_to_old = std::move(tr.b_to_old);
      next = std::move(tr.wb);
    }
    if (options.trace) {
      std::vector<Vertex> to_new(cur.size(), -1);
      for (std::size_t i = 0; i < b_to_old.size(); ++i) to_new[b_to_old[i]] = static_cast<Vertex>(i);
      for (Vertex c : part.c) step.cutset_vertex_weights.push_back(next.w.vertex(to_new[c]));
      if (part.kind == CutKind::Stable) step.cutset_pair_weights = next.w.pair_entry(to_new[part.c[0]], to_new[part.c[1]]);
      Block a_blk = make_block_unchecked(cur.g, part, Side::A);
      step.part = {lift(part.a), lift(part.b), lift(part.c), part.kind};
      step.a_block = lift(a_blk.label_map);
      step.a_class = classify_basic(a_blk.trig);
      step.refinements = ex.refinements;
      step.b_side_size = next.size();
      res.trace.steps.push_back(std::move(step));
    }
    std::vector<Vertex> next_labels;
    next_labels.reserve(b_to_old.size());
    for (Vertex v : b_to_old) next_labels.push_back(labels[v]);
    labels = std::move(next_labels);
    cur = std::move(next);
  }
  res.alpha = total;
  return res;
}

ExtractionResult max_stable_set_graph(const WeightedTrigraph& wg) {
  if (!wg.g.is_graph()) throw InvalidArgument("stable set extraction needs a graph");
  const SolveOptions fast{false};
  ExtractionResult out;
  WeightedTrigraph cur = wg;
  std::vector<Vertex> labels(wg.size());
  for (int i = 0; i < wg.size(); ++i) labels[i] = i;
  Weight a = alpha(cur, fast).alpha;
  out.weight = a;
  while (cur.size() > 0) {
    const Vertex v = 0;
    VertexSet keep_without_closed, keep_without_v;
    for (Vertex x = 1; x < cur.size(); ++x) {
      keep_without_v.push_back(x);
      if (!cur.g.full_adjacent(v, x)) keep_without_closed.push_back(x);
    }
    std::vector<Vertex> to_old;
    WeightedTrigraph rest = induced_weighted(cur, keep_without_closed, &to_old);
    Weight a_rest = alpha(rest, fast).alpha;
    if (checked_add(cur.w.vertex(v), a_rest) == a) {
      out.stable_set.push_back(labels[v]);
      a = a_rest;
    } else {
      rest = induced_weighted(cur, keep_without_v, &to_old);
    }
    std::vector<Vertex> next_labels;
    for (Vertex x : to_old) next_labels.push_back(labels[x]);
    labels = std::move(next_labels);
    cur = std::move(rest);
  }
  if (a != 0) throw InternalError("extraction ended with unexplained weight");
  return out;
}

}  // namespace wheelfree
