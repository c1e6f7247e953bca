#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wheelfree/weights.hpp"

namespace wheelfree {

// Exact alpha by subset enumeration with stability pruning.
Weight brute_alpha(const WeightedTrigraph& wt, int max_n = 16);

// Checks every realization for an induced wheel (hole of length >= 4 plus a
// centre with >= 3 neighbours on it) or an induced subdivision of K4.
// Exponential; refuses n > 16 or more than 24 semi pairs.
bool is_isk4_wheel_free(const Trigraph& g);

// SplitMix64, fixed across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi);
  // True with probability num / den.
  bool chance(std::uint64_t num, std::uint64_t den);
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::uint64_t state_;
};

enum class InstanceClass { SeriesParallel, CompleteBipartite, Line, GluedClique, GluedStable };
const char* to_string(InstanceClass c);

struct GeneratorConfig {
  std::uint64_t seed = 1;
  int n_min = 4;
  int n_max = 12;
  Weight weight_max = 20;
  // Relative frequency of each InstanceClass, in enum order.
  std::array<int, 5> class_mix{1, 1, 1, 1, 1};
  // Percentage of eligible edges turned semi.
  int semi_percent = 30;
  // Instances up to this size are checked with is_isk4_wheel_free before
  // emission; larger ones rely on safe constructions only.
  int validate_max_n = 14;
};

struct GeneratedInstance {
  WeightedTrigraph wt;
  InstanceClass cls = InstanceClass::SeriesParallel;
};

// Deterministic instance stream: the same config yields the same sequence.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(const GeneratorConfig& config);

  // Class drawn from config.class_mix, size from [n_min, n_max].
  GeneratedInstance next();
  GeneratedInstance next(InstanceClass cls);
  GeneratedInstance next(InstanceClass cls, int n);

  // Random series-parallel trigraph on exactly n vertices.
  WeightedTrigraph series_parallel(int n);
  // K_{a,b} with a + b = n, a, b >= 1.
  WeightedTrigraph complete_bipartite(int n);
  // Line trigraph L(H) for a random H of maximum degree <= 3 with about n
  // edges; only edges in no triangle may become semi.
  WeightedTrigraph line(int n);
  // Two or more pieces glued on strong cliques (size > 1 only at validated sizes).
  WeightedTrigraph glued_clique(int n);
  // Pieces glued by identifying semi pairs, which become strongly anti-adjacent.
  WeightedTrigraph glued_stable(int n);

  // Random graph of maximum degree <= 3, about target_edges edges. With
  // cactus set, every edge lies in at most one cycle.
  Trigraph subcubic_graph(int target_edges, bool cactus);

  SplitMix64& rng() { return rng_; }

 private:
  WeightedTrigraph piece(int n, bool want_semi);
  WeightedTrigraph with_random_weights(Trigraph g);
  WeightedTrigraph glue(int n, bool stable);

  GeneratorConfig config_;
  SplitMix64 rng_;
};

std::vector<GeneratedInstance> gen_basic(const GeneratorConfig& config, int count);
std::vector<GeneratedInstance> gen_glued(const GeneratorConfig& config, int count);

// Line graph of a graph, vertices numbered by the lexicographic edge order.
Trigraph line_graph_of(const Trigraph& h);

// Random relabelling: perm[old] = new.
WeightedTrigraph relabel(const WeightedTrigraph& wt, const std::vector<Vertex>& perm);

// Replaces each edge u-v (lexicographic order) by a path u-a-b-v.
Trigraph poljak_double_subdivision(const Trigraph& h);

// Deletes v (degree two, non-adjacent neighbours a < b), adds the path
// a-x1-x2-x3-x4-b and a vertex x adjacent to x1..x4. Remaining vertices keep
// their relative order; x1..x4, x get the last five labels.
Trigraph two_extension(const Trigraph& g, Vertex v);

// Subdivides every edge once, then 2-extends every subdivision vertex.
Trigraph extended_bipartite_from(const Trigraph& g);

// Each edge of h replaced by a narrow path u - x - v of semi pairs, with the
// weights that make alpha(G, w) = alpha(h) + 2m.
struct HardnessInstance {
  WeightedTrigraph wt;
  Trigraph source;
  std::vector<std::pair<Vertex, Vertex>> arcs;  // u -> v with u < v
  std::vector<Vertex> subdivision;              // arc index -> x vertex (n + index)
};

HardnessInstance bipartite_trigraph_hardness(const Trigraph& h);

// [[S ∩ {u, x, v}]] on the three-vertex subtrigraph minus w(u), w(v) for
// those in S.
Weight arc_contribution(const HardnessInstance& inst, int arc, const VertexSet& s);

// Convenience for tests: graph from an edge list.
Trigraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace wheelfree
