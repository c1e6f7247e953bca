#include "wheelfree/testkit.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace wheelfree {

Weight brute_alpha(const WeightedTrigraph& wt, int max_n) { return alpha_by_enumeration(wt, max_n); }

// ---------------------------------------------------------------------------
// ISK4 / wheel validator

namespace {

using Mask = std::uint32_t;

bool connected_mask(const std::vector<Mask>& adj, Mask s) {
  if (s == 0) return false;
  Mask seen = s & (~s + 1);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

// G[s] with all degrees 2 or 3, exactly four of degree 3, connected: true
// when the four branch vertices are pairwise joined by exactly one path.
bool is_k4_subdivision(const std::vector<Mask>& adj, Mask s, Mask branch) {
  int branch_list[4];
  int k = 0;
  for (Mask b = branch; b; b &= b - 1) branch_list[k++] = std::countr_zero(b);
  int hits[4][4] = {};
  for (int i = 0; i < 4; ++i) {
    int b = branch_list[i];
    for (Mask nb = adj[b] & s; nb; nb &= nb - 1) {
      int prev = b, cur = std::countr_zero(nb);
      while (!(branch >> cur & 1)) {
        Mask step = adj[cur] & s & ~(Mask{1} << prev);
        prev = cur;
        cur = std::countr_zero(step);
      }
      if (cur == b) return false;
      int j = static_cast<int>(std::find(branch_list, branch_list + 4, cur) - branch_list);
      ++hits[i][j];
    }
  }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && hits[i][j] != 1) return false;
  return true;
}

}  // namespace

bool is_isk4_wheel_free(const Trigraph& g) {
  const int n = g.size();
  if (n > 16) throw SizeLimitExceeded("validator refuses more than 16 vertices");
  if (g.semi_count() > 24) throw SizeLimitExceeded("validator refuses more than 24 semi pairs");
  std::vector<Mask> strong(n, 0), semi(n, 0), full(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      if (g.strongly_adjacent(u, v)) strong[u] |= Mask{1} << v;
      else if (g.is_semi(u, v)) semi[u] |= Mask{1} << v;
    }
  for (Vertex u = 0; u < n; ++u) full[u] = strong[u] | semi[u];

  std::vector<Mask> adj(n);
  std::vector<std::pair<int, int>> inner;
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (Mask s = 1; s <= all && s != 0; ++s) {
    const int size = std::popcount(s);
    if (size < 4) continue;
    bool feasible = true;
    for (Mask t = s; t; t &= t - 1) {
      int v = std::countr_zero(t);
      if (std::popcount(strong[v] & s) > 3 || std::popcount(full[v] & s) < 2) {
        feasible = false;
        break;
      }
    }
    if (!feasible || !connected_mask(full, s)) continue;
    inner.clear();
    for (Mask t = s; t; t &= t - 1) {
      int u = std::countr_zero(t);
      for (Mask r = semi[u] & s; r; r &= r - 1) {
        int v = std::countr_zero(r);
        if (u < v) inner.emplace_back(u, v);
      }
    }
    const std::uint64_t choices = std::uint64_t{1} << inner.size();
    for (std::uint64_t pick = 0; pick < choices; ++pick) {
      for (Mask t = s; t; t &= t - 1) {
        int v = std::countr_zero(t);
        adj[v] = strong[v] & s;
      }
      for (std::size_t i = 0; i < inner.size(); ++i)
        if (pick >> i & 1) {
          adj[inner[i].first] |= Mask{1} << inner[i].second;
          adj[inner[i].second] |= Mask{1} << inner[i].first;
        }
      int deg2 = 0, deg3 = 0;
      Mask branch = 0;
      for (Mask t = s; t; t &= t - 1) {
        int v = std::countr_zero(t);
        int d = std::popcount(adj[v]);
        if (d == 2) ++deg2;
        else if (d == 3) {
          ++deg3;
          branch |= Mask{1} << v;
        }
      }
      if (deg2 + deg3 != size || !connected_mask(adj, s)) continue;
      if (deg3 == 0) {
        // A hole; a centre may choose its semi pairs towards the hole freely.
        for (Vertex c = 0; c < n; ++c)
          if (!(s >> c & 1) && std::popcount(full[c] & s) >= 3) return false;
      } else if (deg3 == 4 && is_k4_subdivision(adj, s, branch)) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Random numbers

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return x % bound;
}

std::int64_t SplitMix64::range(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InvalidArgument("empty range");
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool SplitMix64::chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

// ---------------------------------------------------------------------------
// Graph helpers

const char* to_string(InstanceClass c) {
  switch (c) {
    case InstanceClass::SeriesParallel: return "series-parallel";
    case InstanceClass::CompleteBipartite: return "complete-bipartite";
    case InstanceClass::Line: return "line";
    case InstanceClass::GluedClique: return "glued-clique";
    case InstanceClass::GluedStable: return "glued-stable";
  }
  return "?";
}

Trigraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Trigraph g(n);
  for (auto [u, v] : edges) g.set(u, v, Adjacency::StrongAdj);
  return g;
}

namespace {

std::vector<std::pair<Vertex, Vertex>> edge_list(const Trigraph& h) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < h.size(); ++u)
    for (Vertex v = u + 1; v < h.size(); ++v)
      if (h.full_adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

}  // namespace

Trigraph line_graph_of(const Trigraph& h) {
  auto edges = edge_list(h);
  const int m = static_cast<int>(edges.size());
  Trigraph l(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) l.set(i, j, Adjacency::StrongAdj);
    }
  return l;
}

WeightedTrigraph relabel(const WeightedTrigraph& wt, const std::vector<Vertex>& perm) {
  const int n = wt.size();
  if (static_cast<int>(perm.size()) != n) throw InvalidArgument("permutation size differs from vertex count");
  Trigraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      int t = wt.g.theta(u, v);
      if (t != -1) g.set(perm[u], perm[v], static_cast<Adjacency>(t));
    }
  WeightFunction w(n);
  for (Vertex u = 0; u < n; ++u) w.set_vertex(perm[u], wt.w.vertex(u));
  for (const auto& [key, p] : wt.w.pairs()) w.set_pair(perm[key.first], perm[key.second], p.lo_hi, p.hi_lo, p.pair);
  return WeightedTrigraph(std::move(g), std::move(w));
}

// ---------------------------------------------------------------------------
// Generators

InstanceGenerator::InstanceGenerator(const GeneratorConfig& config) : config_(config), rng_(config.seed) {
  if (config.n_min < 1 || config.n_max < config.n_min) throw InvalidArgument("bad size range");
  if (config.weight_max < 0) throw InvalidArgument("negative weight bound");
}

WeightedTrigraph InstanceGenerator::with_random_weights(Trigraph g) {
  WeightedTrigraph wt(std::move(g));
  const Weight top = config_.weight_max;
  for (Vertex u = 0; u < wt.size(); ++u) wt.w.set_vertex(u, rng_.range(0, top));
  for (auto [u, v] : wt.g.semi_pairs()) {
    Weight pair = rng_.range(0, top);
    Weight uv = rng_.range(0, pair);
    Weight vu = rng_.range(0, pair);
    wt.w.set_pair(u, v, uv, vu, pair);
  }
  return wt;
}

namespace {

std::vector<Vertex> random_permutation(int n, SplitMix64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  return perm;
}

Trigraph permuted(const Trigraph& g, const std::vector<Vertex>& perm) {
  Trigraph out(g.size());
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v) {
      int t = g.theta(u, v);
      if (t != -1) out.set(perm[u], perm[v], static_cast<Adjacency>(t));
    }
  return out;
}

}  // namespace

WeightedTrigraph InstanceGenerator::series_parallel(int n) {
  if (n < 1) throw InvalidArgument("series-parallel size must be positive");
  Trigraph g(n);
  std::vector<std::pair<Vertex, Vertex>> edges;
  if (n >= 2) {
    g.set(0, 1, Adjacency::StrongAdj);
    edges.emplace_back(0, 1);
  }
  for (Vertex x = 2; x < n; ++x) {
    std::uint64_t op = rng_.below(20);
    if (op < 3 || edges.empty()) {
      Vertex a = static_cast<Vertex>(rng_.below(x));
      g.set(a, x, Adjacency::StrongAdj);
      edges.emplace_back(a, x);
      continue;
    }
    std::size_t i = rng_.below(edges.size());
    auto [a, b] = edges[i];
    if (op < 11) {
      // Series: subdivide a-b.
      g.set(a, b, Adjacency::StrongAnti);
      edges[i] = edges.back();
      edges.pop_back();
    }
    g.set(a, x, Adjacency::StrongAdj);
    g.set(x, b, Adjacency::StrongAdj);
    edges.emplace_back(a, x);
    edges.emplace_back(x, b);
  }
  for (auto [a, b] : edges)
    if (rng_.chance(config_.semi_percent, 100)) g.set(a, b, Adjacency::Semi);
  return with_random_weights(permuted(g, random_permutation(n, rng_)));
}

WeightedTrigraph InstanceGenerator::complete_bipartite(int n) {
  if (n < 2) throw InvalidArgument("complete bipartite size must be at least 2");
  int a = static_cast<int>(rng_.range(1, n - 1));
  Trigraph g(n);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < n; ++v) g.set(u, v, Adjacency::StrongAdj);
  return with_random_weights(permuted(g, random_permutation(n, rng_)));
}

Trigraph InstanceGenerator::subcubic_graph(int target_edges, bool cactus) {
  if (target_edges < 1) throw InvalidArgument("edge target must be positive");
  if (!cactus) {
    int k = (2 * target_edges + 2) / 3 + 1 + static_cast<int>(rng_.below(3));
    Trigraph h(k);
    std::vector<int> deg(k, 0);
    int m = 0, failures = 0;
    while (m < target_edges && failures < 50 * k) {
      Vertex u = static_cast<Vertex>(rng_.below(k)), v = static_cast<Vertex>(rng_.below(k));
      if (u == v || deg[u] >= 3 || deg[v] >= 3 || h.strongly_adjacent(u, v)) {
        ++failures;
        continue;
      }
      h.set(u, v, Adjacency::StrongAdj);
      ++deg[u];
      ++deg[v];
      ++m;
    }
    return h;
  }
  // Cactus: grow by pendant edges and cycles hung at a single vertex.
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<int> deg{0};
  auto add = [&](Vertex u, Vertex v) {
    edges.emplace_back(u, v);
    ++deg[u];
    ++deg[v];
  };
  while (static_cast<int>(edges.size()) < target_edges) {
    const int left = target_edges - static_cast<int>(edges.size());
    Vertex u = static_cast<Vertex>(rng_.below(deg.size()));
    if (deg[u] <= 1 && left >= 3 && rng_.chance(1, 2)) {
      int len = static_cast<int>(rng_.range(3, std::min(6, left)));
      Vertex prev = u;
      for (int i = 1; i < len; ++i) {
        Vertex x = static_cast<Vertex>(deg.size());
        deg.push_back(0);
        add(prev, x);
        prev = x;
      }
      add(prev, u);
    } else if (deg[u] <= 2) {
      Vertex x = static_cast<Vertex>(deg.size());
      deg.push_back(0);
      add(u, x);
    }
  }
  Trigraph h(static_cast<int>(deg.size()));
  for (auto [u, v] : edges) h.set(u, v, Adjacency::StrongAdj);
  return h;
}

WeightedTrigraph InstanceGenerator::line(int n) {
  if (n < 1) throw InvalidArgument("line size must be positive");
  const bool validate_it = n <= config_.validate_max_n;
  while (true) {
    Trigraph l = line_graph_of(subcubic_graph(n, !validate_it));
    const int m = l.size();
    Trigraph marked = l;
    for (Vertex u = 0; u < m; ++u)
      for (Vertex v = u + 1; v < m; ++v) {
        if (!l.strongly_adjacent(u, v)) continue;
        bool in_triangle = false;
        for (Vertex x = 0; x < m && !in_triangle; ++x)
          in_triangle = x != u && x != v && l.strongly_adjacent(u, x) && l.strongly_adjacent(v, x);
        if (!in_triangle && rng_.chance(config_.semi_percent, 100)) marked.set(u, v, Adjacency::Semi);
      }
    marked = permuted(marked, random_permutation(m, rng_));
    if (validate_it && m <= 16 && !is_isk4_wheel_free(marked)) continue;
    return with_random_weights(std::move(marked));
  }
}

WeightedTrigraph InstanceGenerator::piece(int n, bool want_semi) {
  const auto& mix = config_.class_mix;
  int sp = mix[0], cb = want_semi ? 0 : mix[1], ln = mix[2];
  if (n < 2) cb = 0;
  if (sp + cb + ln == 0) sp = 1;
  std::uint64_t r = rng_.below(static_cast<std::uint64_t>(sp + cb + ln));
  WeightedTrigraph wt;
  if (r < static_cast<std::uint64_t>(sp)) wt = series_parallel(n);
  else if (r < static_cast<std::uint64_t>(sp + cb)) wt = complete_bipartite(n);
  else wt = line(n);
  if (want_semi && wt.g.semi_count() == 0) {
    // Some edge in no triangle is needed; series-parallel pieces always have one.
    auto edges = edge_list(wt.g);
    for (std::size_t tries = 0; tries < 4 * edges.size(); ++tries) {
      auto [u, v] = edges[rng_.below(edges.size())];
      bool in_triangle = false;
      for (Vertex x = 0; x < wt.size() && !in_triangle; ++x)
        in_triangle = x != u && x != v && wt.g.full_adjacent(u, x) && wt.g.full_adjacent(v, x);
      if (in_triangle) continue;
      if (wt.size() > config_.validate_max_n && r >= static_cast<std::uint64_t>(sp)) break;
      wt.g.set(u, v, Adjacency::Semi);
      if (wt.size() <= config_.validate_max_n && r >= static_cast<std::uint64_t>(sp) && !is_isk4_wheel_free(wt.g)) {
        wt.g.set(u, v, Adjacency::StrongAdj);
        continue;
      }
      Weight pair = rng_.range(0, config_.weight_max);
      wt.w.set_pair(u, v, rng_.range(0, pair), rng_.range(0, pair), pair);
      return wt;
    }
    return piece(n, want_semi);
  }
  return wt;
}

namespace {

// All strong cliques of the given size (1..3), lexicographic.
std::vector<VertexSet> strong_cliques(const Trigraph& g, int size) {
  std::vector<VertexSet> out;
  const int n = g.size();
  for (Vertex a = 0; a < n; ++a) {
    if (size == 1) {
      out.push_back({a});
      continue;
    }
    for (Vertex b = a + 1; b < n; ++b) {
      if (!g.strongly_adjacent(a, b)) continue;
      if (size == 2) {
        out.push_back({a, b});
        continue;
      }
      for (Vertex c = b + 1; c < n; ++c)
        if (g.strongly_adjacent(a, c) && g.strongly_adjacent(b, c)) out.push_back({a, b, c});
    }
  }
  return out;
}

// Disjoint union of base and piece with piece_side[i] identified to
// base_side[i]; the remaining piece vertices get labels after base.
WeightedTrigraph identify(const WeightedTrigraph& base, const WeightedTrigraph& piece, const VertexSet& base_side,
                          const VertexSet& piece_side) {
  const int nb = base.size(), np = piece.size();
  std::vector<Vertex> map(np, -1);
  for (std::size_t i = 0; i < piece_side.size(); ++i) map[piece_side[i]] = base_side[i];
  int next = nb;
  for (Vertex v = 0; v < np; ++v)
    if (map[v] == -1) map[v] = next++;
  Trigraph g(next);
  for (Vertex u = 0; u < nb; ++u)
    for (Vertex v = u + 1; v < nb; ++v) {
      int t = base.g.theta(u, v);
      if (t != -1) g.set(u, v, static_cast<Adjacency>(t));
    }
  for (Vertex u = 0; u < np; ++u)
    for (Vertex v = u + 1; v < np; ++v) {
      int t = piece.g.theta(u, v);
      if (t != -1 && g.theta(map[u], map[v]) == -1) g.set(map[u], map[v], static_cast<Adjacency>(t));
    }
  WeightFunction w(next);
  for (Vertex u = 0; u < nb; ++u) w.set_vertex(u, base.w.vertex(u));
  for (Vertex u = 0; u < np; ++u)
    if (map[u] >= nb) w.set_vertex(map[u], piece.w.vertex(u));
  for (const auto& [key, p] : base.w.pairs()) w.set_pair(key.first, key.second, p.lo_hi, p.hi_lo, p.pair);
  for (const auto& [key, p] : piece.w.pairs()) {
    Vertex a = map[key.first], b = map[key.second];
    if (a < nb && b < nb) continue;
    w.set_pair(a, b, p.lo_hi, p.hi_lo, p.pair);
  }
  return WeightedTrigraph(std::move(g), std::move(w));
}

}  // namespace

WeightedTrigraph InstanceGenerator::glue(int n, bool stable) {
  if (n < 3) throw InvalidArgument("glued size must be at least 3");
  const bool small = n <= config_.validate_max_n;
  while (true) {
    int first = static_cast<int>(rng_.range(std::min(n, 3), std::max(3, std::min(n - 1, 10))));
    WeightedTrigraph base = piece(first, stable);
    while (base.size() < n) {
      const int remaining = n - base.size();
      bool done = false;
      if (stable && remaining >= 1) {
        int size = static_cast<int>(rng_.range(std::min(4, remaining + 2), std::min(10, remaining + 2)));
        if (size >= 3) {
          auto base_semis = base.g.semi_pairs();
          if (!base_semis.empty()) {
            WeightedTrigraph p = piece(size, true);
            auto piece_semis = p.g.semi_pairs();
            auto [c1, c2] = base_semis[rng_.below(base_semis.size())];
            auto [d1, d2] = piece_semis[rng_.below(piece_semis.size())];
            if (rng_.chance(1, 2)) std::swap(d1, d2);
            WeightedTrigraph next = identify(base, p, {c1, c2}, {d1, d2});
            next.g.set(c1, c2, Adjacency::StrongAnti);
            next.w.clear_pair(c1, c2);
            base = std::move(next);
            done = true;
          }
        }
      }
      if (!done) {
        int k = 1;
        if (!stable && small) k = static_cast<int>(rng_.range(1, 3));
        int size = static_cast<int>(rng_.range(std::min(k + 1, remaining + k), std::min(10, remaining + k)));
        WeightedTrigraph p = piece(std::max(size, 2), stable);
        auto in_base = strong_cliques(base.g, k);
        auto in_piece = strong_cliques(p.g, k);
        if (in_base.empty() || in_piece.empty()) {
          // The piece was sized for a larger clique; redraw if it overshoots.
          if (p.size() - 1 > remaining) continue;
          k = 1;
          in_base = strong_cliques(base.g, 1);
          in_piece = strong_cliques(p.g, 1);
        }
        VertexSet kb = in_base[rng_.below(in_base.size())];
        VertexSet kp = in_piece[rng_.below(in_piece.size())];
        rng_.shuffle(kp);
        base = identify(base, p, kb, kp);
      }
    }
    base = relabel(base, random_permutation(base.size(), rng_));
    if (base.size() <= config_.validate_max_n && base.size() <= 16 && !is_isk4_wheel_free(base.g)) continue;
    return base;
  }
}

WeightedTrigraph InstanceGenerator::glued_clique(int n) { return glue(n, false); }
WeightedTrigraph InstanceGenerator::glued_stable(int n) { return glue(n, true); }

GeneratedInstance InstanceGenerator::next(InstanceClass cls, int n) {
  GeneratedInstance out;
  out.cls = cls;
  switch (cls) {
    case InstanceClass::SeriesParallel: out.wt = series_parallel(n); break;
    case InstanceClass::CompleteBipartite: out.wt = complete_bipartite(std::max(n, 2)); break;
    case InstanceClass::Line: out.wt = line(n); break;
    case InstanceClass::GluedClique: out.wt = glued_clique(std::max(n, 3)); break;
    case InstanceClass::GluedStable: out.wt = glued_stable(std::max(n, 3)); break;
  }
  return out;
}

GeneratedInstance InstanceGenerator::next(InstanceClass cls) {
  return next(cls, static_cast<int>(rng_.range(config_.n_min, config_.n_max)));
}

GeneratedInstance InstanceGenerator::next() {
  const auto& mix = config_.class_mix;
  int total = std::accumulate(mix.begin(), mix.end(), 0);
  if (total <= 0) throw InvalidArgument("class mix is empty");
  int r = static_cast<int>(rng_.below(static_cast<std::uint64_t>(total)));
  int cls = 0;
  while (r >= mix[cls]) r -= mix[cls++];
  return next(static_cast<InstanceClass>(cls));
}

std::vector<GeneratedInstance> gen_basic(const GeneratorConfig& config, int count) {
  GeneratorConfig c = config;
  c.class_mix[3] = c.class_mix[4] = 0;
  if (c.class_mix[0] + c.class_mix[1] + c.class_mix[2] == 0) c.class_mix = {1, 1, 1, 0, 0};
  InstanceGenerator gen(c);
  std::vector<GeneratedInstance> out;
  for (int i = 0; i < count; ++i) out.push_back(gen.next());
  return out;
}

std::vector<GeneratedInstance> gen_glued(const GeneratorConfig& config, int count) {
  InstanceGenerator gen(config);
  std::vector<GeneratedInstance> out;
  const int cm = config.class_mix[3], sm = config.class_mix[4];
  for (int i = 0; i < count; ++i) {
    bool stable = (cm + sm == 0) ? gen.rng().chance(1, 2) : gen.rng().below(cm + sm) >= static_cast<std::uint64_t>(cm);
    out.push_back(gen.next(stable ? InstanceClass::GluedStable : InstanceClass::GluedClique));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constructions from the hardness arguments

Trigraph poljak_double_subdivision(const Trigraph& h) {
  if (!h.is_graph()) throw InvalidArgument("expected a graph");
  auto edges = edge_list(h);
  const int n = h.size();
  Trigraph g(n + 2 * static_cast<int>(edges.size()));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    Vertex a = n + 2 * static_cast<int>(i), b = a + 1;
    g.set(u, a, Adjacency::StrongAdj);
    g.set(a, b, Adjacency::StrongAdj);
    g.set(b, v, Adjacency::StrongAdj);
  }
  return g;
}

Trigraph two_extension(const Trigraph& g, Vertex v) {
  g.check_vertex(v);
  if (!g.is_graph()) throw InvalidArgument("expected a graph");
  auto nb = g.full_neighbors(v);
  if (nb.size() != 2) throw InvalidArgument("2-extension needs a vertex of degree two");
  if (g.full_adjacent(nb[0], nb[1])) throw InvalidArgument("2-extension needs non-adjacent neighbours");
  const int n = g.size();
  VertexSet keep;
  for (Vertex u = 0; u < n; ++u)
    if (u != v) keep.push_back(u);
  InducedResult ind = induced(g, keep);
  Trigraph out(n - 1 + 5);
  for (Vertex a = 0; a < n - 1; ++a)
    for (Vertex b = a + 1; b < n - 1; ++b)
      if (ind.g.strongly_adjacent(a, b)) out.set(a, b, Adjacency::StrongAdj);
  const Vertex x1 = n - 1, x2 = n, x3 = n + 1, x4 = n + 2, x = n + 3;
  const Vertex a = ind.to_new[nb[0]], b = ind.to_new[nb[1]];
  const Vertex path[] = {a, x1, x2, x3, x4, b};
  for (int i = 0; i + 1 < 6; ++i) out.set(path[i], path[i + 1], Adjacency::StrongAdj);
  for (Vertex y : {x1, x2, x3, x4}) out.set(x, y, Adjacency::StrongAdj);
  return out;
}

Trigraph extended_bipartite_from(const Trigraph& g) {
  if (!g.is_graph()) throw InvalidArgument("expected a graph");
  auto edges = edge_list(g);
  const int n = g.size();
  Trigraph b(n + static_cast<int>(edges.size()));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    b.set(edges[i].first, n + static_cast<int>(i), Adjacency::StrongAdj);
    b.set(n + static_cast<int>(i), edges[i].second, Adjacency::StrongAdj);
  }
  // Each 2-extension removes the lowest remaining subdivision vertex, which
  // therefore always sits at label n.
  for (std::size_t i = 0; i < edges.size(); ++i) b = two_extension(b, n);
  return b;
}

HardnessInstance bipartite_trigraph_hardness(const Trigraph& h) {
  if (!h.is_graph()) throw InvalidArgument("expected a graph");
  HardnessInstance inst;
  inst.source = h;
  inst.arcs = edge_list(h);
  const int n = h.size(), m = static_cast<int>(inst.arcs.size());
  Trigraph g(n + m);
  WeightFunction w(n + m);
  for (Vertex u = 0; u < n + m; ++u) w.set_vertex(u, 1);
  for (int i = 0; i < m; ++i) {
    auto [u, v] = inst.arcs[i];
    Vertex x = n + i;
    inst.subdivision.push_back(x);
    g.set(u, x, Adjacency::Semi);
    g.set(x, v, Adjacency::Semi);
    w.set_pair(u, x, 0, 0, 1);  // w(u x) = 1
    w.set_pair(x, v, 1, 1, 1);  // w(x, v) = w(v, x) = w(x v) = 1
  }
  inst.wt = WeightedTrigraph(std::move(g), std::move(w));
  return inst;
}

Weight arc_contribution(const HardnessInstance& inst, int arc, const VertexSet& s) {
  if (arc < 0 || arc >= static_cast<int>(inst.arcs.size())) throw InvalidArgument("arc index out of range");
  for (Vertex v : s) inst.wt.g.check_vertex(v);
  const VertexSet sorted = normalized(s);
  auto [u, v] = inst.arcs[arc];
  const Vertex x = inst.subdivision[arc];
  VertexSet t = normalized({u, x, v});
  std::vector<Vertex> to_old;
  WeightedTrigraph sub = induced_weighted(inst.wt, t, &to_old);
  VertexSet local;
  Weight ends = 0;
  for (std::size_t i = 0; i < to_old.size(); ++i)
    if (std::binary_search(sorted.begin(), sorted.end(), to_old[i])) {
      local.push_back(static_cast<Vertex>(i));
      if (to_old[i] != x) ends += inst.wt.w.vertex(to_old[i]);
    }
  return set_weight(sub, local) - ends;
}

}  // namespace wheelfree
