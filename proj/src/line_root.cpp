#include <algorithm>
#include <map>
#include <set>

#include "wheelfree/basic_solvers.hpp"

namespace wheelfree {

namespace {

constexpr int kMaxStartCells = 1 << 12;

// Clique partition of the edges of one component (Krausz cells) grown from a
// start cell: each vertex popped from the stack puts all its uncovered edges
// into one new cell. Fails when a vertex lands in a third cell or a new cell
// is not a clique.
bool grow_cells(const std::vector<std::vector<Vertex>>& adj, const std::vector<Vertex>& comp,
                const VertexSet& start, std::vector<VertexSet>& cells, std::vector<int>& count) {
  std::map<Vertex, std::set<Vertex>> rest;
  for (Vertex v : comp) rest[v] = std::set<Vertex>(adj[v].begin(), adj[v].end());
  auto cover = [&](const VertexSet& cell) {
    for (std::size_t i = 0; i < cell.size(); ++i)
      for (std::size_t j = i + 1; j < cell.size(); ++j) {
        auto& a = rest[cell[i]];
        if (!a.erase(cell[j])) return false;
        rest[cell[j]].erase(cell[i]);
      }
    for (Vertex v : cell)
      if (++count[v] > 2) return false;
    cells.push_back(cell);
    return true;
  };
  if (!cover(start)) return false;
  std::vector<Vertex> stack(start.rbegin(), start.rend());
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    auto& ru = rest[u];
    if (ru.empty()) continue;
    VertexSet cell(ru.begin(), ru.end());
    cell.push_back(u);
    cell = normalized(std::move(cell));
    if (!cover(cell)) return false;
    for (auto it = cell.rbegin(); it != cell.rend(); ++it)
      if (*it != u) stack.push_back(*it);
  }
  for (Vertex v : comp)
    if (!rest[v].empty()) return false;
  return true;
}

// Start cells {a} ∪ K for the lowest vertex a: K is one colour class of a
// 2-colouring of the complement of G[N(a)], or N(a) itself when N(a) is a clique.
std::vector<VertexSet> start_cells(const Trigraph& g, const std::vector<std::vector<Vertex>>& adj, Vertex a) {
  const auto& nb = adj[a];
  const int k = static_cast<int>(nb.size());
  std::vector<VertexSet> out;
  bool clique = true;
  for (int i = 0; i < k && clique; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!g.full_adjacent(nb[i], nb[j])) {
        clique = false;
        break;
      }
  if (clique) {
    VertexSet all = nb;
    all.push_back(a);
    out.push_back(normalized(std::move(all)));
    if (k > 3) return out;
  }
  // Components of the complement of G[N(a)] with a 2-colouring each.
  std::vector<int> colour(k, -1), comp_of(k, -1);
  int comps = 0;
  for (int s = 0; s < k; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    comp_of[s] = comps;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < k; ++y) {
        if (y == x || g.full_adjacent(nb[x], nb[y])) continue;
        if (colour[y] == -1) {
          colour[y] = 1 - colour[x];
          comp_of[y] = comps;
          stack.push_back(y);
        } else if (colour[y] == colour[x]) {
          return out;
        }
      }
    }
    ++comps;
  }
  if (comps > 12) return out;
  for (unsigned flip = 0; flip < (1u << comps) && static_cast<int>(out.size()) < kMaxStartCells; ++flip) {
    VertexSet cell{a};
    for (int i = 0; i < k; ++i)
      if ((colour[i] ^ static_cast<int>(flip >> comp_of[i] & 1)) == 0) cell.push_back(nb[i]);
    if (cell.size() < 2) continue;
    cell = normalized(std::move(cell));
    if (std::find(out.begin(), out.end(), cell) == out.end()) out.push_back(std::move(cell));
  }
  return out;
}

}  // namespace

LineRoot line_graph_root(const Trigraph& g) {
  if (!g.is_graph()) throw InvalidArgument("line root needs a graph");
  const int n = g.size();
  auto adj = g.full_adjacency_lists();
  LineRoot out;
  out.edge_of.assign(n, {-1, -1});
  int root_n = 0;
  std::vector<std::pair<int, int>> root_edges;

  for (const auto& comp : components(g)) {
    if (comp.size() == 1) {
      out.edge_of[comp[0]] = {root_n, root_n + 1};
      root_n += 2;
      continue;
    }
    bool done = false;
    for (const auto& start : start_cells(g, adj, comp[0])) {
      std::vector<VertexSet> cells;
      std::vector<int> count(n, 0);
      if (!grow_cells(adj, comp, start, cells, count)) continue;
      // Root vertices: one per cell, plus one per vertex lying in a single cell.
      std::map<Vertex, std::vector<int>> ends;
      int next = root_n;
      for (const auto& cell : cells) {
        for (Vertex v : cell) ends[v].push_back(next);
        ++next;
      }
      for (Vertex v : comp)
        if (ends[v].size() == 1) ends[v].push_back(next++);
      LineRoot trial = out;
      for (Vertex v : comp) trial.edge_of[v] = {ends[v][0], ends[v][1]};
      // Check the component's adjacency against the candidate correspondence.
      bool ok = true;
      for (std::size_t i = 0; i < comp.size() && ok; ++i)
        for (std::size_t j = i + 1; j < comp.size(); ++j) {
          const auto& e = trial.edge_of[comp[i]];
          const auto& f = trial.edge_of[comp[j]];
          bool share = e[0] == f[0] || e[0] == f[1] || e[1] == f[0] || e[1] == f[1];
          bool same = (e[0] == f[0] && e[1] == f[1]) || (e[0] == f[1] && e[1] == f[0]);
          if (same || share != g.full_adjacent(comp[i], comp[j])) {
            ok = false;
            break;
          }
        }
      if (!ok) continue;
      out = std::move(trial);
      root_n = next;
      done = true;
      break;
    }
    if (!done) throw NotLineGraph("component containing vertex " + std::to_string(comp[0]) + " is not a line graph");
  }
  out.root.n = root_n;
  for (Vertex v = 0; v < n; ++v) out.root.add_edge(out.edge_of[v][0], out.edge_of[v][1], 0);
  return out;
}

bool verify_line_root(const Trigraph& g, const LineRoot& root) {
  const int n = g.size();
  if (static_cast<int>(root.edge_of.size()) != n || static_cast<int>(root.root.edges.size()) != n) return false;
  std::set<std::pair<int, int>> seen;
  for (Vertex v = 0; v < n; ++v) {
    auto [a, b] = root.edge_of[v];
    if (a == b || a < 0 || b < 0 || a >= root.root.n || b >= root.root.n) return false;
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) return false;
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const auto& e = root.edge_of[u];
      const auto& f = root.edge_of[v];
      bool share = e[0] == f[0] || e[0] == f[1] || e[1] == f[0] || e[1] == f[1];
      if (share != g.full_adjacent(u, v)) return false;
    }
  return true;
}

}  // namespace wheelfree
