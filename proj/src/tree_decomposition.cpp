#include <algorithm>
#include <limits>
#include <set>

#include "wheelfree/basic_solvers.hpp"

namespace wheelfree {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

namespace {

// Elimination of vertices of degree <= 2 in the full realization. Returns
// false when it stalls. On success fills td (when given) with one bag per
// vertex, parented at the bag of its first eliminated neighbour.
bool eliminate(const Trigraph& g, TreeDecomposition* td) {
  const int n = g.size();
  std::vector<std::set<Vertex>> adj(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (g.full_adjacent(u, v)) {
        adj[u].insert(v);
        adj[v].insert(u);
      }
  // Keyed by (degree, label) so leaves go first and forests get width one.
  std::set<std::pair<int, Vertex>> ready;
  auto offer = [&](Vertex u) {
    if (adj[u].size() <= 2) ready.insert({static_cast<int>(adj[u].size()), u});
  };
  for (Vertex u = 0; u < n; ++u) offer(u);
  std::vector<char> alive(n, 1);
  std::vector<int> position(n, -1);
  std::vector<std::vector<Vertex>> later(n);
  std::vector<Vertex> order;
  order.reserve(n);
  while (static_cast<int>(order.size()) < n) {
    if (ready.empty()) return false;
    auto [deg, v] = *ready.begin();
    ready.erase(ready.begin());
    if (!alive[v] || static_cast<int>(adj[v].size()) != deg) continue;
    alive[v] = 0;
    position[v] = static_cast<int>(order.size());
    order.push_back(v);
    later[v].assign(adj[v].begin(), adj[v].end());
    for (Vertex x : later[v]) adj[x].erase(v);
    if (later[v].size() == 2) {
      Vertex a = later[v][0], b = later[v][1];
      adj[a].insert(b);
      adj[b].insert(a);
    }
    for (Vertex x : later[v]) offer(x);
  }
  if (!td) return true;

  td->bags.assign(n, {});
  td->tree.assign(n, {});
  std::vector<int> bag_of(n);
  for (int i = 0; i < n; ++i) bag_of[order[i]] = i;
  int previous_root = -1;
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    VertexSet bag = later[v];
    bag.push_back(v);
    td->bags[i] = normalized(std::move(bag));
    int parent = -1;
    for (Vertex x : later[v])
      if (parent == -1 || position[x] < position[order[parent]]) parent = bag_of[x];
    if (parent == -1) {
      // Roots of separate components are chained so the result is one tree.
      if (previous_root != -1) {
        td->tree[i].push_back(previous_root);
        td->tree[previous_root].push_back(i);
      }
      previous_root = i;
    } else {
      td->tree[i].push_back(parent);
      td->tree[parent].push_back(i);
    }
  }
  return true;
}

}  // namespace

bool is_series_parallel(const Trigraph& g) { return eliminate(g, nullptr); }

TreeDecomposition tree_decomposition_width2(const Trigraph& g) {
  TreeDecomposition td;
  if (!eliminate(g, &td)) throw NotSeriesParallel("full realization has treewidth above two");
  return td;
}

std::string tree_decomposition_violation(const Trigraph& g, const TreeDecomposition& td) {
  const int n = g.size();
  const int m = static_cast<int>(td.bags.size());
  if (static_cast<int>(td.tree.size()) != m) return "tree size differs from bag count";
  std::vector<std::vector<int>> bags_of(n);
  for (int i = 0; i < m; ++i) {
    const auto& bag = td.bags[i];
    for (std::size_t k = 0; k < bag.size(); ++k) {
      if (bag[k] < 0 || bag[k] >= n) return "bag " + std::to_string(i) + " has an unknown vertex";
      if (k > 0 && bag[k] <= bag[k - 1]) return "bag " + std::to_string(i) + " is not sorted";
      bags_of[bag[k]].push_back(i);
    }
  }
  std::size_t tree_edges = 0;
  for (int i = 0; i < m; ++i)
    for (int j : td.tree[i]) {
      if (j < 0 || j >= m || j == i) return "bad tree edge at bag " + std::to_string(i);
      if (std::find(td.tree[j].begin(), td.tree[j].end(), i) == td.tree[j].end())
        return "asymmetric tree edge at bag " + std::to_string(i);
      ++tree_edges;
    }
  if (m > 0) {
    if (tree_edges != 2 * static_cast<std::size_t>(m - 1)) return "decomposition graph is not a tree";
    std::vector<char> seen(m, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 0;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      ++count;
      for (int s : td.tree[t])
        if (!seen[s]) {
          seen[s] = 1;
          stack.push_back(s);
        }
    }
    if (count != m) return "decomposition graph is not connected";
  }
  for (Vertex v = 0; v < n; ++v)
    if (bags_of[v].empty()) return "vertex " + std::to_string(v) + " is in no bag";
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.full_adjacent(u, v)) continue;
      const auto& small = bags_of[u].size() <= bags_of[v].size() ? bags_of[u] : bags_of[v];
      Vertex other = bags_of[u].size() <= bags_of[v].size() ? v : u;
      bool found = false;
      for (int i : small)
        if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), other)) {
          found = true;
          break;
        }
      if (!found) return "edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag";
    }
  std::vector<int> mark(m, -1);
  for (Vertex v = 0; v < n; ++v) {
    for (int i : bags_of[v]) mark[i] = v;
    std::vector<int> stack{bags_of[v][0]};
    int reached = 0;
    mark[bags_of[v][0]] = -2 - v;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      ++reached;
      for (int s : td.tree[t])
        if (mark[s] == v) {
          mark[s] = -2 - v;
          stack.push_back(s);
        }
    }
    if (reached != static_cast<int>(bags_of[v].size()))
      return "bags of vertex " + std::to_string(v) + " are not connected";
  }
  return {};
}

TreeDecomposition augment_decomposition_for_gems(const TreeDecomposition& td, const GemExpansion& exp) {
  TreeDecomposition out = td;
  for (const auto& gem : exp.gems) {
    int host = -1;
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
      const auto& bag = td.bags[i];
      if (std::binary_search(bag.begin(), bag.end(), gem.u) && std::binary_search(bag.begin(), bag.end(), gem.v)) {
        host = static_cast<int>(i);
        break;
      }
    }
    if (host == -1) throw InvalidArgument("no bag holds both ends of a gem");
    int first = static_cast<int>(out.bags.size());
    out.bags.push_back(normalized({gem.u, gem.v, gem.x_pair, gem.x_uv}));
    out.bags.push_back(normalized({gem.u, gem.x_vu, gem.x_pair, gem.x_uv}));
    out.tree.push_back({host, first + 1});
    out.tree.push_back({first});
    out.tree[host].push_back(first);
  }
  return out;
}

Weight mwss_on_tree_decomposition(const Trigraph& graph, const std::vector<Weight>& vertex_weights,
                                  const TreeDecomposition& td) {
  if (static_cast<int>(vertex_weights.size()) != graph.size())
    throw InvalidArgument("weight vector size differs from vertex count");
  if (auto why = tree_decomposition_violation(graph, td); !why.empty()) throw InvalidArgument(why);
  const int m = static_cast<int>(td.bags.size());
  if (m == 0) return 0;
  for (const auto& bag : td.bags)
    if (bag.size() > 20) throw SizeLimitExceeded("bag larger than 20 vertices");
  for (Weight w : vertex_weights)
    if (w < 0) throw InvalidArgument("negative vertex weight");

  constexpr Weight kNone = std::numeric_limits<Weight>::min();
  std::vector<int> parent(m, -1), order;
  order.reserve(m);
  std::vector<char> seen(m, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    order.push_back(t);
    for (int s : td.tree[t])
      if (!seen[s]) {
        seen[s] = 1;
        parent[s] = t;
        stack.push_back(s);
      }
  }

  std::vector<std::vector<Weight>> f(m);
  // Children are finished before their parent in reverse preorder.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int t = *it;
    const auto& bag = td.bags[t];
    const int k = static_cast<int>(bag.size());
    auto& ft = f[t];
    ft.assign(std::size_t{1} << k, kNone);
    for (unsigned s = 0; s < ft.size(); ++s) {
      bool stable = true;
      Weight w = 0;
      for (int i = 0; i < k && stable; ++i) {
        if (!(s >> i & 1)) continue;
        w = checked_add(w, vertex_weights[bag[i]]);
        for (int j = i + 1; j < k; ++j)
          if ((s >> j & 1) && graph.full_adjacent(bag[i], bag[j])) {
            stable = false;
            break;
          }
      }
      if (stable) ft[s] = w;
    }
    for (int c : td.tree[t]) {
      if (c == parent[t]) continue;
      const auto& cbag = td.bags[c];
      // Shared vertices, as (index in child, index in parent).
      std::vector<std::pair<int, int>> shared;
      for (int i = 0; i < static_cast<int>(cbag.size()); ++i) {
        auto pos = std::lower_bound(bag.begin(), bag.end(), cbag[i]);
        if (pos != bag.end() && *pos == cbag[i]) shared.emplace_back(i, static_cast<int>(pos - bag.begin()));
      }
      std::vector<Weight> best(std::size_t{1} << shared.size(), kNone);
      for (unsigned s = 0; s < f[c].size(); ++s) {
        if (f[c][s] == kNone) continue;
        unsigned proj = 0;
        Weight overlap = 0;
        for (std::size_t q = 0; q < shared.size(); ++q)
          if (s >> shared[q].first & 1) {
            proj |= 1u << q;
            overlap += vertex_weights[cbag[shared[q].first]];
          }
        best[proj] = std::max(best[proj], f[c][s] - overlap);
      }
      for (unsigned s = 0; s < ft.size(); ++s) {
        if (ft[s] == kNone) continue;
        unsigned proj = 0;
        for (std::size_t q = 0; q < shared.size(); ++q)
          if (s >> shared[q].second & 1) proj |= 1u << q;
        ft[s] = best[proj] == kNone ? kNone : checked_add(ft[s], best[proj]);
      }
      std::vector<Weight>().swap(f[c]);
    }
  }
  return *std::max_element(f[0].begin(), f[0].end());
}

}  // namespace wheelfree
