#include "wheelfree/trigraph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace wheelfree {

const char* to_string(Adjacency a) {
  switch (a) {
    case Adjacency::StrongAnti:
      return "strong-anti";
    case Adjacency::Semi:
      return "semi";
    case Adjacency::StrongAdj:
      return "strong-adj";
  }
  return "?";
}

Trigraph::Trigraph(int n) : n_(n) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  theta_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i) theta_[static_cast<std::size_t>(i) * n + i] = 0;
}

void Trigraph::check_vertex(Vertex u) const {
  if (u < 0 || u >= n_) throw InvalidArgument("vertex " + std::to_string(u) + " out of range");
}

Adjacency Trigraph::adjacency(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidArgument("adjacency of a vertex with itself");
  return static_cast<Adjacency>(theta(u, v));
}

void Trigraph::set(Vertex u, Vertex v, Adjacency a) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidArgument("cannot set adjacency of a vertex with itself");
  auto t = static_cast<std::int8_t>(a);
  theta_[static_cast<std::size_t>(u) * n_ + v] = t;
  theta_[static_cast<std::size_t>(v) * n_ + u] = t;
}

std::vector<std::pair<Vertex, Vertex>> Trigraph::semi_pairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (theta(u, v) == 0) out.emplace_back(u, v);
  return out;
}

int Trigraph::semi_count() const {
  int c = 0;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (theta(u, v) == 0) ++c;
  return c;
}

std::vector<Vertex> Trigraph::full_neighbors(Vertex u) const {
  std::vector<Vertex> out;
  const std::int8_t* row = &theta_[static_cast<std::size_t>(u) * n_];
  for (int v = 0; v < n_; ++v)
    if (v != u && row[v] >= 0) out.push_back(v);
  return out;
}

std::vector<std::vector<Vertex>> Trigraph::full_adjacency_lists() const {
  std::vector<std::vector<Vertex>> adj(n_);
  for (int u = 0; u < n_; ++u) {
    const std::int8_t* row = &theta_[static_cast<std::size_t>(u) * n_];
    for (int v = u + 1; v < n_; ++v)
      if (row[v] >= 0) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
  }
  for (auto& l : adj) std::sort(l.begin(), l.end());
  return adj;
}

VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

InducedResult induced(const Trigraph& g, const VertexSet& x) {
  InducedResult r;
  r.to_new.assign(g.size(), -1);
  for (Vertex v : x) {
    g.check_vertex(v);
    r.to_new[v] = 0;
  }
  for (int v = 0; v < g.size(); ++v)
    if (r.to_new[v] == 0) {
      r.to_new[v] = static_cast<int>(r.to_old.size());
      r.to_old.push_back(v);
    }
  int k = static_cast<int>(r.to_old.size());
  r.g = Trigraph(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      int t = g.theta(r.to_old[i], r.to_old[j]);
      if (t != -1) r.g.set(i, j, static_cast<Adjacency>(t));
    }
  return r;
}

Trigraph full_realization(const Trigraph& g) {
  Trigraph r = g;
  for (auto [u, v] : g.semi_pairs()) r.set(u, v, Adjacency::StrongAdj);
  return r;
}

Trigraph null_realization(const Trigraph& g) {
  Trigraph r = g;
  for (auto [u, v] : g.semi_pairs()) r.set(u, v, Adjacency::StrongAnti);
  return r;
}

void for_each_realization(const Trigraph& g, const std::function<void(const Trigraph&)>& fn) {
  auto semis = g.semi_pairs();
  if (semis.size() >= 63) throw SizeLimitExceeded("too many semi pairs to enumerate realizations");
  Trigraph r = null_realization(g);
  const std::uint64_t total = std::uint64_t{1} << semis.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t i = 0; i < semis.size(); ++i)
      r.set(semis[i].first, semis[i].second,
            (mask >> i) & 1 ? Adjacency::StrongAdj : Adjacency::StrongAnti);
    fn(r);
  }
}

std::vector<Trigraph> realizations(const Trigraph& g) {
  if (g.semi_count() > 20) throw SizeLimitExceeded("too many semi pairs to materialize realizations");
  std::vector<Trigraph> out;
  for_each_realization(g, [&](const Trigraph& r) { out.push_back(r); });
  return out;
}

std::vector<VertexSet> components(const Trigraph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.size(), 0);
  std::vector<Vertex> stack;
  for (int s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v = 0; v < g.size(); ++v)
        if (!seen[v] && g.full_adjacent(u, v)) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Trigraph& g) { return components(g).size() == 1; }

std::optional<std::vector<Vertex>> narrow_path_sequence(const Trigraph& g, Vertex a, Vertex b) {
  g.check_vertex(a);
  g.check_vertex(b);
  if (a == b) throw InvalidArgument("narrow path endpoints must differ");
  std::vector<Vertex> parent(g.size(), -1);
  std::vector<char> seen(g.size(), 0);
  std::deque<Vertex> queue{a};
  seen[a] = 1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (u == b) break;
    for (int v = 0; v < g.size(); ++v)
      if (!seen[v] && g.full_adjacent(u, v)) {
        seen[v] = 1;
        parent[v] = u;
        queue.push_back(v);
      }
  }
  if (!seen[b]) return std::nullopt;
  std::vector<Vertex> path;
  for (Vertex v = b; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<VertexSet> narrow_path(const Trigraph& g, Vertex a, Vertex b) {
  auto seq = narrow_path_sequence(g, a, b);
  if (!seq) return std::nullopt;
  return normalized(*seq);
}

bool is_stable_set(const Trigraph& g, const VertexSet& s) {
  for (Vertex v : s) g.check_vertex(v);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] != s[j] && g.theta(s[i], s[j]) == 1) return false;
  return true;
}

bool is_strong_clique(const Trigraph& g, const VertexSet& s) {
  for (Vertex v : s) g.check_vertex(v);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] != s[j] && g.theta(s[i], s[j]) != 1) return false;
  return true;
}

bool is_narrow_path_between(const Trigraph& g, Vertex a, Vertex b) {
  const int n = g.size();
  if (a == b || a < 0 || b < 0 || a >= n || b >= n) return false;
  int edges = 0;
  for (int u = 0; u < n; ++u) {
    int deg = 0;
    for (int v = 0; v < n; ++v)
      if (g.full_adjacent(u, v)) ++deg;
    edges += deg;
    int want = (u == a || u == b) ? 1 : 2;
    if (deg != want) return false;
  }
  return edges / 2 == n - 1 && is_connected(g);
}

}  // namespace wheelfree
