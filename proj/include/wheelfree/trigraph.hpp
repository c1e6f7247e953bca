#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "wheelfree/errors.hpp"

namespace wheelfree {

using Vertex = int;

// Sorted, duplicate-free list of vertex identifiers.
using VertexSet = std::vector<Vertex>;

enum class Adjacency : std::int8_t { StrongAnti = -1, Semi = 0, StrongAdj = 1 };

const char* to_string(Adjacency a);

// Vertices 0..n-1 with a three-valued adjacency on unordered pairs.
// Every pair not set explicitly is strongly anti-adjacent.
class Trigraph {
 public:
  Trigraph() = default;
  explicit Trigraph(int n);

  int size() const { return n_; }

  // Checked query; throws InvalidArgument on u == v or out-of-range input.
  Adjacency adjacency(Vertex u, Vertex v) const;
  void set(Vertex u, Vertex v, Adjacency a);

  // Unchecked theta value in {-1, 0, 1}.
  int theta(Vertex u, Vertex v) const { return theta_[static_cast<std::size_t>(u) * n_ + v]; }
  bool is_semi(Vertex u, Vertex v) const { return theta(u, v) == 0 && u != v; }
  bool strongly_adjacent(Vertex u, Vertex v) const { return theta(u, v) == 1; }
  // Adjacent in the full realization.
  bool full_adjacent(Vertex u, Vertex v) const { return u != v && theta(u, v) >= 0; }

  // Lexicographic list of semi pairs (u < v).
  std::vector<std::pair<Vertex, Vertex>> semi_pairs() const;
  int semi_count() const;
  bool is_graph() const { return semi_count() == 0; }

  // Neighbours in the full realization, ascending.
  std::vector<Vertex> full_neighbors(Vertex u) const;
  std::vector<std::vector<Vertex>> full_adjacency_lists() const;

  bool operator==(const Trigraph& o) const { return n_ == o.n_ && theta_ == o.theta_; }

  void check_vertex(Vertex u) const;

 private:
  int n_ = 0;
  std::vector<std::int8_t> theta_;  // n*n, diagonal holds 0 and is never read
};

struct InducedResult {
  Trigraph g;
  std::vector<Vertex> to_old;  // new label -> old label (ascending)
  std::vector<Vertex> to_new;  // old label -> new label, -1 when dropped
};

// Keeps the relative label order, so lexicographic order is preserved.
InducedResult induced(const Trigraph& g, const VertexSet& x);

Trigraph full_realization(const Trigraph& g);
Trigraph null_realization(const Trigraph& g);

// Visits all 2^m realizations; cost is exponential in the semi pair count.
void for_each_realization(const Trigraph& g, const std::function<void(const Trigraph&)>& fn);
// Materialized list; refuses more than 20 semi pairs.
std::vector<Trigraph> realizations(const Trigraph& g);

// Connectivity of the full realization. The null trigraph has no
// components and is not connected.
bool is_connected(const Trigraph& g);
// Components sorted by their smallest vertex; each component ascending.
std::vector<VertexSet> components(const Trigraph& g);

// BFS shortest path in the full realization, returned in path order a..b.
std::optional<std::vector<Vertex>> narrow_path_sequence(const Trigraph& g, Vertex a, Vertex b);
// The vertex set of narrow_path_sequence.
std::optional<VertexSet> narrow_path(const Trigraph& g, Vertex a, Vertex b);

bool is_stable_set(const Trigraph& g, const VertexSet& s);
bool is_strong_clique(const Trigraph& g, const VertexSet& s);

// True when the full realization of g is a path with endpoints a and b.
bool is_narrow_path_between(const Trigraph& g, Vertex a, Vertex b);

VertexSet normalized(VertexSet s);

}  // namespace wheelfree
