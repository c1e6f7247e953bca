#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wheelfree/trigraph.hpp"

namespace wheelfree {

// Weights attached to one unordered pair {lo, hi} with lo < hi.
struct PairWeight {
  Weight lo_hi = 0;  // w(lo, hi)
  Weight hi_lo = 0;  // w(hi, lo)
  Weight pair = 0;   // w(lo hi)
  bool operator==(const PairWeight&) const = default;
  bool zero() const { return lo_hi == 0 && hi_lo == 0 && pair == 0; }
};

// Weight function on vertices, ordered pairs and unordered pairs. Missing
// pair entries read as zero; all-zero pair entries are never stored.
class WeightFunction {
 public:
  WeightFunction() = default;
  explicit WeightFunction(int n) : vertex_(n, 0) {}

  int size() const { return static_cast<int>(vertex_.size()); }

  Weight vertex(Vertex u) const { return vertex_.at(u); }
  void set_vertex(Vertex u, Weight w);

  // w(u, v)
  Weight directed(Vertex u, Vertex v) const;
  // w(uv)
  Weight pair(Vertex u, Vertex v) const;
  PairWeight pair_entry(Vertex u, Vertex v) const;  // indexed as (min, max)

  // Sets w(u,v), w(v,u) and w(uv) for the pair.
  void set_pair(Vertex u, Vertex v, Weight w_uv, Weight w_vu, Weight w_pair);
  void clear_pair(Vertex u, Vertex v);

  const std::map<std::pair<Vertex, Vertex>, PairWeight>& pairs() const { return pairs_; }
  const std::vector<Weight>& vertices() const { return vertex_; }

  bool operator==(const WeightFunction&) const = default;

 private:
  std::vector<Weight> vertex_;
  std::map<std::pair<Vertex, Vertex>, PairWeight> pairs_;
};

struct WeightedTrigraph {
  Trigraph g;
  WeightFunction w;

  WeightedTrigraph() = default;
  explicit WeightedTrigraph(Trigraph t) : g(std::move(t)), w(g.size()) {}
  WeightedTrigraph(Trigraph t, WeightFunction f) : g(std::move(t)), w(std::move(f)) {}
  int size() const { return g.size(); }
  bool operator==(const WeightedTrigraph&) const = default;
};

struct ValidationReport {
  bool ok = true;
  std::string message;
  Vertex u = -1;
  Vertex v = -1;
};

// Checks non-negativity, zero pair weights on non-semi pairs and the cap
// max{w(u,v), w(v,u)} <= w(uv).
ValidationReport validate(const WeightedTrigraph& wt);

// [[S]] = sum_{u in S} w(u) + sum_{u in S, v not in S} w(u,v) + sum_{uv outside S} w(uv).
Weight set_weight(const WeightedTrigraph& wt, const VertexSet& s);
// Same with a membership mask of length n.
Weight set_weight_mask(const WeightedTrigraph& wt, const std::vector<char>& in_s);

// Restriction of w to an induced subtrigraph given by its new->old map.
WeightFunction restrict_weights(const WeightFunction& w, const std::vector<Vertex>& to_old);

// Restriction to an induced subtrigraph.
WeightedTrigraph induced_weighted(const WeightedTrigraph& wt, const VertexSet& x,
                                  std::vector<Vertex>* to_old = nullptr);

struct ReductionResult {
  WeightedTrigraph reduced;  // on G[R], labels ascending
  Weight exterior = 0;
  std::vector<Vertex> to_old;
};

ReductionResult reduce(const WeightedTrigraph& wt, const VertexSet& r);

// Maximum of [[S]] over all stable sets. Exponential; refuses n > max_n.
Weight alpha_by_enumeration(const WeightedTrigraph& wt, int max_n = 24);

// A stable set attaining alpha_by_enumeration (lowest-mask tie break).
VertexSet argmax_by_enumeration(const WeightedTrigraph& wt, int max_n = 24);

}  // namespace wheelfree
