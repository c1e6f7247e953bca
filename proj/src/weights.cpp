#include "wheelfree/weights.hpp"

#include <algorithm>
#include <cstdint>

namespace wheelfree {

namespace {

std::pair<Vertex, Vertex> key(Vertex u, Vertex v) { return u < v ? std::pair{u, v} : std::pair{v, u}; }

}  // namespace

void WeightFunction::set_vertex(Vertex u, Weight w) {
  if (u < 0 || u >= size()) throw InvalidArgument("vertex out of range");
  if (w < 0) throw InvalidArgument("negative vertex weight");
  vertex_[u] = w;
}

Weight WeightFunction::directed(Vertex u, Vertex v) const {
  auto it = pairs_.find(key(u, v));
  if (it == pairs_.end()) return 0;
  return u < v ? it->second.lo_hi : it->second.hi_lo;
}

Weight WeightFunction::pair(Vertex u, Vertex v) const {
  auto it = pairs_.find(key(u, v));
  return it == pairs_.end() ? 0 : it->second.pair;
}

PairWeight WeightFunction::pair_entry(Vertex u, Vertex v) const {
  auto it = pairs_.find(key(u, v));
  return it == pairs_.end() ? PairWeight{} : it->second;
}

void WeightFunction::set_pair(Vertex u, Vertex v, Weight w_uv, Weight w_vu, Weight w_pair) {
  if (u == v || u < 0 || v < 0 || u >= size() || v >= size())
    throw InvalidArgument("pair weight on an invalid pair");
  if (w_uv < 0 || w_vu < 0 || w_pair < 0) throw InvalidArgument("negative pair weight");
  PairWeight p = u < v ? PairWeight{w_uv, w_vu, w_pair} : PairWeight{w_vu, w_uv, w_pair};
  if (p.zero())
    pairs_.erase(key(u, v));
  else
    pairs_[key(u, v)] = p;
}

void WeightFunction::clear_pair(Vertex u, Vertex v) { pairs_.erase(key(u, v)); }

ValidationReport validate(const WeightedTrigraph& wt) {
  ValidationReport rep;
  if (wt.w.size() != wt.g.size()) {
    rep.ok = false;
    rep.message = "weight function size does not match trigraph";
    return rep;
  }
  for (int u = 0; u < wt.g.size(); ++u)
    if (wt.w.vertex(u) < 0) {
      rep = {false, "negative weight on vertex " + std::to_string(u), u, -1};
      return rep;
    }
  for (const auto& [k, p] : wt.w.pairs()) {
    auto [u, v] = k;
    std::string name = std::to_string(u) + " " + std::to_string(v);
    if (p.lo_hi < 0 || p.hi_lo < 0 || p.pair < 0)
      return {false, "negative pair weight on " + name, u, v};
    if (!wt.g.is_semi(u, v) && !p.zero())
      return {false, "nonzero weight on non-semi pair " + name, u, v};
    if (std::max(p.lo_hi, p.hi_lo) > p.pair)
      return {false, "directed weight exceeds pair weight on " + name, u, v};
  }
  return rep;
}

Weight set_weight_mask(const WeightedTrigraph& wt, const std::vector<char>& in_s) {
  Weight total = 0;
  for (int u = 0; u < wt.g.size(); ++u)
    if (in_s[u]) total = checked_add(total, wt.w.vertex(u));
  for (const auto& [k, p] : wt.w.pairs()) {
    auto [u, v] = k;
    bool su = in_s[u], sv = in_s[v];
    if (su && !sv) total = checked_add(total, p.lo_hi);
    if (sv && !su) total = checked_add(total, p.hi_lo);
    if (!su && !sv) total = checked_add(total, p.pair);
  }
  return total;
}

Weight set_weight(const WeightedTrigraph& wt, const VertexSet& s) {
  std::vector<char> in_s(wt.g.size(), 0);
  for (Vertex v : s) {
    wt.g.check_vertex(v);
    in_s[v] = 1;
  }
  return set_weight_mask(wt, in_s);
}

WeightFunction restrict_weights(const WeightFunction& w, const std::vector<Vertex>& to_old) {
  const int k = static_cast<int>(to_old.size());
  WeightFunction out(k);
  std::vector<Vertex> to_new(w.size(), -1);
  for (int i = 0; i < k; ++i) {
    to_new[to_old[i]] = i;
    out.set_vertex(i, w.vertex(to_old[i]));
  }
  for (const auto& [key_, p] : w.pairs()) {
    Vertex a = to_new[key_.first], b = to_new[key_.second];
    if (a < 0 || b < 0) continue;
    // Relabeling is monotone, so (a, b) keeps lo < hi.
    out.set_pair(a, b, p.lo_hi, p.hi_lo, p.pair);
  }
  return out;
}

WeightedTrigraph induced_weighted(const WeightedTrigraph& wt, const VertexSet& x,
                                  std::vector<Vertex>* to_old) {
  InducedResult ir = induced(wt.g, x);
  WeightedTrigraph out(std::move(ir.g), restrict_weights(wt.w, ir.to_old));
  if (to_old) *to_old = std::move(ir.to_old);
  return out;
}

ReductionResult reduce(const WeightedTrigraph& wt, const VertexSet& r) {
  const int n = wt.g.size();
  std::vector<char> in_r(n, 0);
  for (Vertex v : r) {
    wt.g.check_vertex(v);
    in_r[v] = 1;
  }
  ReductionResult res;
  VertexSet rs;
  for (int v = 0; v < n; ++v)
    if (in_r[v]) rs.push_back(v);
  res.reduced = induced_weighted(wt, rs, &res.to_old);

  // debit[u] = sum over v outside R of (w(uv) - w(u,v)), for u in R.
  std::vector<Weight> debit(n, 0);
  for (const auto& [k, p] : wt.w.pairs()) {
    auto [u, v] = k;
    bool ru = in_r[u], rv = in_r[v];
    if (!ru && !rv) res.exterior = checked_add(res.exterior, p.pair);
    if (ru && !rv) {
      res.exterior = checked_add(res.exterior, p.pair);
      debit[u] = checked_add(debit[u], p.pair - p.lo_hi);
    }
    if (rv && !ru) {
      res.exterior = checked_add(res.exterior, p.pair);
      debit[v] = checked_add(debit[v], p.pair - p.hi_lo);
    }
  }
  for (std::size_t i = 0; i < res.to_old.size(); ++i) {
    Vertex u = res.to_old[i];
    res.reduced.w.set_vertex(static_cast<Vertex>(i), std::max<Weight>(wt.w.vertex(u) - debit[u], 0));
  }
  return res;
}

namespace {

// Enumerates stable sets of the null realization by backtracking over
// vertices in label order, tracking the best [[S]].
struct Enumerator {
  const WeightedTrigraph& wt;
  int n;
  std::vector<std::uint32_t> strong_adj;  // bitmask of strong neighbours
  std::vector<char> in_s;
  Weight best = -1;
  std::uint32_t best_mask = 0;

  explicit Enumerator(const WeightedTrigraph& w) : wt(w), n(w.g.size()), strong_adj(n, 0), in_s(n, 0) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && wt.g.strongly_adjacent(u, v)) strong_adj[u] |= std::uint32_t{1} << v;
  }

  void run(int i, std::uint32_t mask) {
    if (i == n) {
      Weight val = set_weight_mask(wt, in_s);
      if (val > best) {
        best = val;
        best_mask = mask;
      }
      return;
    }
    run(i + 1, mask);
    if ((strong_adj[i] & mask) == 0) {
      in_s[i] = 1;
      run(i + 1, mask | (std::uint32_t{1} << i));
      in_s[i] = 0;
    }
  }
};

}  // namespace

Weight alpha_by_enumeration(const WeightedTrigraph& wt, int max_n) {
  if (wt.g.size() > max_n || wt.g.size() > 31)
    throw SizeLimitExceeded("enumeration refuses " + std::to_string(wt.g.size()) + " vertices");
  Enumerator e(wt);
  e.run(0, 0);
  return e.best;
}

VertexSet argmax_by_enumeration(const WeightedTrigraph& wt, int max_n) {
  if (wt.g.size() > max_n || wt.g.size() > 31)
    throw SizeLimitExceeded("enumeration refuses " + std::to_string(wt.g.size()) + " vertices");
  Enumerator e(wt);
  e.run(0, 0);
  VertexSet s;
  for (int v = 0; v < wt.g.size(); ++v)
    if ((e.best_mask >> v) & 1) s.push_back(v);
  return s;
}

}  // namespace wheelfree
