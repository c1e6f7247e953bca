#include "wheelfree/decomposition.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace wheelfree {

namespace {

using AdjLists = std::vector<std::vector<Vertex>>;

// Components of the full realization restricted to vertices not removed,
// each sorted, ordered by smallest label.
std::vector<VertexSet> components_without(const AdjLists& adj, const std::vector<char>& removed) {
  const int n = static_cast<int>(adj.size());
  std::vector<VertexSet> out;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack;
  for (int s = 0; s < n; ++s) {
    if (removed[s] || seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex v : adj[u])
        if (!removed[v] && !seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Articulation points of the graph on the vertices not removed. A vertex is
// reported when its removal increases the number of components.
std::vector<char> articulation_points(const AdjLists& adj, const std::vector<char>& removed) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next(n, 0);
  std::vector<char> is_ap(n, 0);
  std::vector<Vertex> stack;
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (removed[root] || disc[root] != -1) continue;
    int root_children = 0;
    disc[root] = low[root] = timer++;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex u = stack.back();
      if (next[u] < adj[u].size()) {
        Vertex v = adj[u][next[u]++];
        if (removed[v]) continue;
        if (disc[v] == -1) {
          parent[v] = u;
          disc[v] = low[v] = timer++;
          if (u == root) ++root_children;
          stack.push_back(v);
        } else if (v != parent[u]) {
          low[u] = std::min(low[u], disc[v]);
        }
      } else {
        stack.pop_back();
        Vertex p = parent[u];
        if (p != -1) {
          low[p] = std::min(low[p], low[u]);
          if (p != root && low[u] >= disc[p]) is_ap[p] = 1;
        }
      }
    }
    if (root_children >= 2) is_ap[root] = 1;
  }
  return is_ap;
}

CutPartition partition_from(const AdjLists& adj, const VertexSet& c, CutKind kind) {
  std::vector<char> removed(adj.size(), 0);
  for (Vertex v : c) removed[v] = 1;
  auto comps = components_without(adj, removed);
  CutPartition part;
  part.kind = kind;
  part.c = c;
  part.a = comps.front();
  for (std::size_t i = 1; i < comps.size(); ++i) part.b.insert(part.b.end(), comps[i].begin(), comps[i].end());
  std::sort(part.b.begin(), part.b.end());
  return part;
}

}  // namespace

std::optional<CutPartition> find_good_cut_partition(const Trigraph& g) {
  const int n = g.size();
  if (n < 2) return std::nullopt;
  const AdjLists adj = g.full_adjacency_lists();
  std::vector<char> removed(n, 0);

  if (components_without(adj, removed).size() >= 2) return partition_from(adj, {}, CutKind::Clique);

  auto aps = articulation_points(adj, removed);
  for (int v = 0; v < n; ++v)
    if (aps[v]) return partition_from(adj, {v}, CutKind::Clique);

  // Articulation points of G - u, for every u.
  std::vector<std::vector<char>> aps_without(n);
  for (int u = 0; u < n; ++u) {
    removed[u] = 1;
    aps_without[u] = articulation_points(adj, removed);
    removed[u] = 0;
    for (int v = u + 1; v < n; ++v)
      if (aps_without[u][v] && g.strongly_adjacent(u, v)) return partition_from(adj, {u, v}, CutKind::Clique);
  }

  for (int u = 0; u < n; ++u)
    for (Vertex v : adj[u]) {
      if (v <= u || !g.strongly_adjacent(u, v)) continue;
      VertexSet candidates;
      for (Vertex w : adj[v])
        if (w > v && g.strongly_adjacent(u, w) && g.strongly_adjacent(v, w)) candidates.push_back(w);
      if (candidates.empty()) continue;
      removed[u] = removed[v] = 1;
      auto a = articulation_points(adj, removed);
      removed[u] = removed[v] = 0;
      for (Vertex w : candidates)
        if (a[w]) return partition_from(adj, {u, v, w}, CutKind::Clique);
    }

  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (aps_without[u][v] && g.theta(u, v) <= 0) return partition_from(adj, {u, v}, CutKind::Stable);

  return std::nullopt;
}

std::optional<CutPartition> find_good_cut_partition_naive(const Trigraph& g) {
  const int n = g.size();
  if (n < 2) return std::nullopt;
  const AdjLists adj = g.full_adjacency_lists();
  auto try_cut = [&](const VertexSet& c, CutKind kind) -> std::optional<CutPartition> {
    std::vector<char> removed(n, 0);
    for (Vertex v : c) removed[v] = 1;
    if (components_without(adj, removed).size() >= 2) return partition_from(adj, c, kind);
    return std::nullopt;
  };
  if (auto p = try_cut({}, CutKind::Clique)) return p;
  for (int u = 0; u < n; ++u)
    if (auto p = try_cut({u}, CutKind::Clique)) return p;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.strongly_adjacent(u, v))
        if (auto p = try_cut({u, v}, CutKind::Clique)) return p;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int w = v + 1; w < n; ++w)
        if (is_strong_clique(g, {u, v, w}))
          if (auto p = try_cut({u, v, w}, CutKind::Clique)) return p;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.theta(u, v) <= 0)
        if (auto p = try_cut({u, v}, CutKind::Stable)) return p;
  return std::nullopt;
}

namespace {

std::optional<CutPartition> refine_unchecked(const Trigraph& g, const CutPartition& part) {
  Block blk = make_block_unchecked(g, part, Side::A);
  auto inner = find_good_cut_partition(blk.trig);
  if (!inner) return std::nullopt;
  auto lift = [&](const VertexSet& s) {
    VertexSet out;
    for (Vertex v : s) out.push_back(blk.label_map[v]);
    return out;
  };
  VertexSet a1 = lift(inner->a), b1 = lift(inner->b), c1 = lift(inner->c);
  std::vector<char> in_b1c1(g.size(), 0);
  for (Vertex v : b1) in_b1c1[v] = 1;
  for (Vertex v : c1) in_b1c1[v] = 1;
  bool c_inside = std::all_of(part.c.begin(), part.c.end(), [&](Vertex v) { return in_b1c1[v] != 0; });
  if (!c_inside) std::swap(a1, b1);
  CutPartition out;
  out.kind = inner->kind;
  out.a = a1;
  out.c = c1;
  out.b = part.b;
  out.b.insert(out.b.end(), b1.begin(), b1.end());
  std::sort(out.b.begin(), out.b.end());
  return out;
}

}  // namespace

std::optional<CutPartition> refine_cut_partition(const Trigraph& g, const CutPartition& part) {
  if (auto e = good_cut_partition_violation(g, part); !e.empty())
    throw InvalidArgument("not a good cut-partition: " + e);
  return refine_unchecked(g, part);
}

ExtremeResult find_extreme_cut_partition(const Trigraph& g) {
  ExtremeResult res;
  res.part = find_good_cut_partition(g);
  if (!res.part) return res;
  while (auto next = refine_unchecked(g, *res.part)) {
    res.part = std::move(next);
    ++res.refinements;
    if (res.refinements > g.size()) throw InternalError("refinement did not terminate");
  }
  return res;
}

DecompositionTrace decompose(const Trigraph& g) {
  DecompositionTrace trace;
  Trigraph cur = g;
  std::vector<Vertex> labels(g.size());
  for (int i = 0; i < g.size(); ++i) labels[i] = i;
  auto lift = [&](const VertexSet& s) {
    VertexSet out;
    for (Vertex v : s) out.push_back(labels[v]);
    return out;
  };
  while (true) {
    ExtremeResult ex = find_extreme_cut_partition(cur);
    if (!ex.part) {
      trace.terminal = labels;
      trace.terminal_class = classify_basic(cur);
      return trace;
    }
    const CutPartition& part = *ex.part;
    Block a_blk = make_block_unchecked(cur, part, Side::A);
    Block b_blk = make_block_unchecked(cur, part, Side::B);
    TraceStep step;
    step.part = {lift(part.a), lift(part.b), lift(part.c), part.kind};
    step.a_block = lift(a_blk.label_map);
    step.a_class = classify_basic(a_blk.trig);
    step.refinements = ex.refinements;
    step.b_side_size = b_blk.trig.size();
    trace.steps.push_back(std::move(step));
    std::vector<Vertex> next_labels;
    for (Vertex v : b_blk.label_map) next_labels.push_back(labels[v]);
    labels = std::move(next_labels);
    cur = std::move(b_blk.trig);
  }
}

std::string trace_to_json(const DecompositionTrace& trace, int indent) {
  nlohmann::json doc;
  doc["version"] = 1;
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& st : trace.steps) {
    nlohmann::json j;
    j["kind"] = to_string(st.part.kind);
    j["a"] = st.part.a;
    j["b"] = st.part.b;
    j["c"] = st.part.c;
    j["a_block"] = st.a_block;
    j["a_class"] = to_string(st.a_class);
    j["refinements"] = st.refinements;
    j["b_block_size"] = st.b_side_size;
    if (!st.table.empty()) {
      j["table"] = st.table;
      j["offset"] = st.offset;
      j["cutset_vertex_weights"] = st.cutset_vertex_weights;
      if (st.cutset_pair_weights) {
        const auto& p = *st.cutset_pair_weights;
        j["cutset_pair_weights"] = {{"lo_hi", p.lo_hi}, {"hi_lo", p.hi_lo}, {"pair", p.pair}};
      }
    }
    steps.push_back(std::move(j));
  }
  doc["steps"] = std::move(steps);
  doc["terminal"] = trace.terminal;
  doc["terminal_class"] = to_string(trace.terminal_class);
  return doc.dump(indent);
}

std::string trace_to_dot(const DecompositionTrace& trace) {
  auto set_label = [](const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
  };
  std::ostringstream os;
  os << "digraph decomposition {\n  node [shape=box];\n";
  const std::size_t k = trace.steps.size();
  for (std::size_t i = 0; i < k; ++i) {
    const auto& st = trace.steps[i];
    os << "  s" << i << " [label=\"step " << i << "\\n" << to_string(st.part.kind) << " cutset "
       << set_label(st.part.c) << "\"];\n";
    os << "  a" << i << " [label=\"A-block " << set_label(st.a_block) << "\\n" << to_string(st.a_class)
       << "\"];\n";
    os << "  s" << i << " -> a" << i << ";\n";
    os << "  s" << i << " -> " << (i + 1 < k ? "s" + std::to_string(i + 1) : std::string("t")) << ";\n";
  }
  os << "  t [label=\"terminal " << set_label(trace.terminal) << "\\n" << to_string(trace.terminal_class)
     << "\"];\n}\n";
  return os.str();
}

}  // namespace wheelfree
