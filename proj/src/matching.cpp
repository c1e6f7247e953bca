#include "wheelfree/matching.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace wheelfree {

void EdgeWeightedGraph::add_edge(int u, int v, Weight w) {
  if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidArgument("edge endpoint out of range");
  if (u == v) throw InvalidArgument("self-loop in matching input");
  if (w < 0) throw InvalidArgument("negative edge weight");
  edges.push_back({u, v, w});
}

namespace {

// Heaviest representative of each vertex pair, as indices into g.edges.
std::vector<int> merged_edges(const EdgeWeightedGraph& g) {
  std::map<std::pair<int, int>, int> best;
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    const auto& e = g.edges[i];
    if (e.u == e.v) throw InvalidArgument("self-loop in matching input");
    if (e.weight < 0) throw InvalidArgument("negative edge weight");
    if (e.u < 0 || e.v < 0 || e.u >= g.n || e.v >= g.n) throw InvalidArgument("edge endpoint out of range");
    auto key = std::minmax(e.u, e.v);
    auto it = best.find(key);
    if (it == best.end() || g.edges[it->second].weight < e.weight) best[key] = i;
  }
  std::vector<int> out;
  for (const auto& kv : best) out.push_back(kv.second);
  return out;
}

// Primal-dual weighted matching with blossoms. Vertex duals are stored
// doubled so that all arithmetic stays integral. Endpoint p of edge k is
// vertex edges[k].u for p = 2k and edges[k].v for p = 2k + 1.
class Blossom {
 public:
  Blossom(int nvertex, std::vector<WeightedEdge> edges)
      : nv_(nvertex), edges_(std::move(edges)), ne_(static_cast<int>(edges_.size())) {}

  std::vector<int> solve() {
    mate_.assign(nv_, -1);
    if (ne_ == 0) return mate_;
    Weight maxweight = 0;
    for (const auto& e : edges_) maxweight = std::max(maxweight, e.weight);
    endpoint_.resize(2 * ne_);
    for (int p = 0; p < 2 * ne_; ++p) endpoint_[p] = p % 2 == 0 ? edges_[p / 2].u : edges_[p / 2].v;
    neighbend_.assign(nv_, {});
    for (int k = 0; k < ne_; ++k) {
      neighbend_[edges_[k].u].push_back(2 * k + 1);
      neighbend_[edges_[k].v].push_back(2 * k);
    }
    label_.assign(2 * nv_, 0);
    labelend_.assign(2 * nv_, -1);
    inblossom_.resize(nv_);
    for (int i = 0; i < nv_; ++i) inblossom_[i] = i;
    blossomparent_.assign(2 * nv_, -1);
    blossomchilds_.assign(2 * nv_, {});
    blossombase_.assign(2 * nv_, -1);
    for (int i = 0; i < nv_; ++i) blossombase_[i] = i;
    blossomendps_.assign(2 * nv_, {});
    bestedge_.assign(2 * nv_, -1);
    blossombestedges_.assign(2 * nv_, {});
    has_bestedges_.assign(2 * nv_, 0);
    for (int b = 2 * nv_ - 1; b >= nv_; --b) unusedblossoms_.push_back(b);
    std::reverse(unusedblossoms_.begin(), unusedblossoms_.end());
    dualvar_.assign(2 * nv_, 0);
    for (int i = 0; i < nv_; ++i) dualvar_[i] = maxweight;
    allowedge_.assign(ne_, 0);

    for (int stage = 0; stage < nv_; ++stage) {
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(bestedge_.begin(), bestedge_.end(), -1);
      for (int b = nv_; b < 2 * nv_; ++b) {
        blossombestedges_[b].clear();
        has_bestedges_[b] = 0;
      }
      std::fill(allowedge_.begin(), allowedge_.end(), 0);
      queue_.clear();
      for (int v = 0; v < nv_; ++v)
        if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);

      bool augmented = false;
      while (true) {
        while (!queue_.empty() && !augmented) {
          int v = queue_.back();
          queue_.pop_back();
          for (int p : neighbend_[v]) {
            int k = p / 2;
            int w = endpoint_[p];
            if (inblossom_[v] == inblossom_[w]) continue;
            Weight kslack = 0;
            if (!allowedge_[k]) {
              kslack = slack(k);
              if (kslack <= 0) allowedge_[k] = 1;
            }
            if (allowedge_[k]) {
              if (label_[inblossom_[w]] == 0) {
                assign_label(w, 2, p ^ 1);
              } else if (label_[inblossom_[w]] == 1) {
                int base = scan_blossom(v, w);
                if (base >= 0) {
                  add_blossom(base, k);
                } else {
                  augment_matching(k);
                  augmented = true;
                  break;
                }
              } else if (label_[w] == 0) {
                label_[w] = 2;
                labelend_[w] = p ^ 1;
              }
            } else if (label_[inblossom_[w]] == 1) {
              int b = inblossom_[v];
              if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
            } else if (label_[w] == 0) {
              if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
            }
          }
        }
        if (augmented) break;

        int deltatype = 1;
        Weight delta = dualvar_[0];
        for (int v = 1; v < nv_; ++v) delta = std::min(delta, dualvar_[v]);
        int deltaedge = -1, deltablossom = -1;
        for (int v = 0; v < nv_; ++v)
          if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
            Weight d = slack(bestedge_[v]);
            if (d < delta) {
              delta = d;
              deltatype = 2;
              deltaedge = bestedge_[v];
            }
          }
        for (int b = 0; b < 2 * nv_; ++b)
          if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
            Weight ks = slack(bestedge_[b]);
            if (ks % 2 != 0) throw InternalError("odd slack between two S-blossoms");
            Weight d = ks / 2;
            if (d < delta) {
              delta = d;
              deltatype = 3;
              deltaedge = bestedge_[b];
            }
          }
        for (int b = nv_; b < 2 * nv_; ++b)
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 && dualvar_[b] < delta) {
            delta = dualvar_[b];
            deltatype = 4;
            deltablossom = b;
          }

        for (int v = 0; v < nv_; ++v) {
          if (label_[inblossom_[v]] == 1)
            dualvar_[v] -= delta;
          else if (label_[inblossom_[v]] == 2)
            dualvar_[v] += delta;
        }
        for (int b = nv_; b < 2 * nv_; ++b)
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
            if (label_[b] == 1)
              dualvar_[b] += delta;
            else if (label_[b] == 2)
              dualvar_[b] -= delta;
          }

        if (deltatype == 1) break;
        if (deltatype == 2) {
          allowedge_[deltaedge] = 1;
          int i = edges_[deltaedge].u, j = edges_[deltaedge].v;
          if (label_[inblossom_[i]] == 0) std::swap(i, j);
          queue_.push_back(i);
        } else if (deltatype == 3) {
          allowedge_[deltaedge] = 1;
          queue_.push_back(edges_[deltaedge].u);
        } else {
          expand_blossom(deltablossom, false);
        }
      }
      if (!augmented) break;
      for (int b = nv_; b < 2 * nv_; ++b)
        if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 && dualvar_[b] == 0)
          expand_blossom(b, true);
    }
    std::vector<int> out(nv_, -1);
    for (int v = 0; v < nv_; ++v)
      if (mate_[v] >= 0) out[v] = endpoint_[mate_[v]];
    return out;
  }

 private:
  Weight slack(int k) const {
    return dualvar_[edges_[k].u] + dualvar_[edges_[k].v] - 2 * edges_[k].weight;
  }

  void leaves(int b, std::vector<int>& out) const {
    if (b < nv_) {
      out.push_back(b);
      return;
    }
    for (int t : blossomchilds_[b]) leaves(t, out);
  }

  std::vector<int> leaves(int b) const {
    std::vector<int> out;
    leaves(b, out);
    return out;
  }

  static int wrap(int j, int len) { return ((j % len) + len) % len; }

  void assign_label(int w, int t, int p) {
    int b = inblossom_[w];
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    bestedge_[w] = bestedge_[b] = -1;
    if (t == 1) {
      for (int v : leaves(b)) queue_.push_back(v);
    } else if (t == 2) {
      int base = blossombase_[b];
      assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
  }

  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[v];
      if (label_[b] & 4) {
        base = blossombase_[b];
        break;
      }
      path.push_back(b);
      label_[b] = 5;
      if (labelend_[b] == -1) {
        v = -1;
      } else {
        v = endpoint_[labelend_[b]];
        b = inblossom_[v];
        v = endpoint_[labelend_[b]];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[b] = 1;
    return base;
  }

  void add_blossom(int base, int k) {
    int v = edges_[k].u, w = edges_[k].v;
    int bb = inblossom_[base];
    int bv = inblossom_[v];
    int bw = inblossom_[w];
    int b = unusedblossoms_.back();
    unusedblossoms_.pop_back();
    blossombase_[b] = base;
    blossomparent_[b] = -1;
    blossomparent_[bb] = b;
    std::vector<int> path, endps;
    while (bv != bb) {
      blossomparent_[bv] = b;
      path.push_back(bv);
      endps.push_back(labelend_[bv]);
      v = endpoint_[labelend_[bv]];
      bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      blossomparent_[bw] = b;
      path.push_back(bw);
      endps.push_back(labelend_[bw] ^ 1);
      w = endpoint_[labelend_[bw]];
      bw = inblossom_[w];
    }
    blossomchilds_[b] = path;
    blossomendps_[b] = endps;
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dualvar_[b] = 0;
    for (int x : leaves(b)) {
      if (label_[inblossom_[x]] == 2) queue_.push_back(x);
      inblossom_[x] = b;
    }
    std::vector<int> bestedgeto(2 * nv_, -1);
    for (int sub : path) {
      std::vector<std::vector<int>> nblists;
      if (!has_bestedges_[sub]) {
        for (int x : leaves(sub)) {
          std::vector<int> l;
          for (int p : neighbend_[x]) l.push_back(p / 2);
          nblists.push_back(std::move(l));
        }
      } else {
        nblists.push_back(blossombestedges_[sub]);
      }
      for (const auto& nblist : nblists)
        for (int kk : nblist) {
          int i = edges_[kk].u, j = edges_[kk].v;
          if (inblossom_[j] == b) std::swap(i, j);
          int bj = inblossom_[j];
          if (bj != b && label_[bj] == 1 && (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj])))
            bestedgeto[bj] = kk;
        }
      blossombestedges_[sub].clear();
      has_bestedges_[sub] = 0;
      bestedge_[sub] = -1;
    }
    blossombestedges_[b].clear();
    for (int kk : bestedgeto)
      if (kk != -1) blossombestedges_[b].push_back(kk);
    has_bestedges_[b] = 1;
    bestedge_[b] = -1;
    for (int kk : blossombestedges_[b])
      if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) bestedge_[b] = kk;
  }

  void expand_blossom(int b, bool endstage) {
    for (int s : blossomchilds_[b]) {
      blossomparent_[s] = -1;
      if (s < nv_) {
        inblossom_[s] = s;
      } else if (endstage && dualvar_[s] == 0) {
        expand_blossom(s, endstage);
      } else {
        for (int v : leaves(s)) inblossom_[v] = s;
      }
    }
    if (!endstage && label_[b] == 2) {
      auto& childs = blossomchilds_[b];
      auto& endps = blossomendps_[b];
      const int len = static_cast<int>(childs.size());
      int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
      int j = static_cast<int>(std::find(childs.begin(), childs.end(), entrychild) - childs.begin());
      int jstep, endptrick;
      if (j & 1) {
        j -= len;
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      int p = labelend_[b];
      while (j != 0) {
        label_[endpoint_[p ^ 1]] = 0;
        label_[endpoint_[endps[wrap(j - endptrick, len)] ^ endptrick ^ 1]] = 0;
        assign_label(endpoint_[p ^ 1], 2, p);
        allowedge_[endps[wrap(j - endptrick, len)] / 2] = 1;
        j += jstep;
        p = endps[wrap(j - endptrick, len)] ^ endptrick;
        allowedge_[p / 2] = 1;
        j += jstep;
      }
      int bv = childs[wrap(j, len)];
      label_[endpoint_[p ^ 1]] = label_[bv] = 2;
      labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
      bestedge_[bv] = -1;
      j += jstep;
      while (childs[wrap(j, len)] != entrychild) {
        bv = childs[wrap(j, len)];
        if (label_[bv] == 1) {
          j += jstep;
          continue;
        }
        int found = -1;
        for (int v : leaves(bv))
          if (label_[v] != 0) {
            found = v;
            break;
          }
        if (found != -1) {
          label_[found] = 0;
          label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
          assign_label(found, 2, labelend_[found]);
        }
        j += jstep;
      }
    }
    label_[b] = labelend_[b] = -1;
    blossomchilds_[b].clear();
    blossomendps_[b].clear();
    blossombase_[b] = -1;
    blossombestedges_[b].clear();
    has_bestedges_[b] = 0;
    bestedge_[b] = -1;
    unusedblossoms_.push_back(b);
  }

  void augment_blossom(int b, int v) {
    int t = v;
    while (blossomparent_[t] != b) t = blossomparent_[t];
    if (t >= nv_) augment_blossom(t, v);
    auto& childs = blossomchilds_[b];
    auto& endps = blossomendps_[b];
    const int len = static_cast<int>(childs.size());
    int i = static_cast<int>(std::find(childs.begin(), childs.end(), t) - childs.begin());
    int j = i;
    int jstep, endptrick;
    if (i & 1) {
      j -= len;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    while (j != 0) {
      j += jstep;
      t = childs[wrap(j, len)];
      int p = endps[wrap(j - endptrick, len)] ^ endptrick;
      if (t >= nv_) augment_blossom(t, endpoint_[p]);
      j += jstep;
      t = childs[wrap(j, len)];
      if (t >= nv_) augment_blossom(t, endpoint_[p ^ 1]);
      mate_[endpoint_[p]] = p ^ 1;
      mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(childs.begin(), childs.begin() + i, childs.end());
    std::rotate(endps.begin(), endps.begin() + i, endps.end());
    blossombase_[b] = blossombase_[childs[0]];
  }

  void augment_matching(int k) {
    int v = edges_[k].u, w = edges_[k].v;
    for (auto [s, p] : {std::pair{v, 2 * k + 1}, std::pair{w, 2 * k}}) {
      while (true) {
        int bs = inblossom_[s];
        if (bs >= nv_) augment_blossom(bs, s);
        mate_[s] = p;
        if (labelend_[bs] == -1) break;
        int t = endpoint_[labelend_[bs]];
        int bt = inblossom_[t];
        s = endpoint_[labelend_[bt]];
        int j = endpoint_[labelend_[bt] ^ 1];
        if (bt >= nv_) augment_blossom(bt, j);
        mate_[j] = labelend_[bt];
        p = labelend_[bt] ^ 1;
      }
    }
  }

  int nv_;
  std::vector<WeightedEdge> edges_;
  int ne_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> labelend_;
  std::vector<int> inblossom_;
  std::vector<int> blossomparent_;
  std::vector<std::vector<int>> blossomchilds_;
  std::vector<int> blossombase_;
  std::vector<std::vector<int>> blossomendps_;
  std::vector<int> bestedge_;
  std::vector<std::vector<int>> blossombestedges_;
  std::vector<char> has_bestedges_;
  std::vector<int> unusedblossoms_;
  std::vector<Weight> dualvar_;
  std::vector<char> allowedge_;
  std::vector<int> queue_;
};

}  // namespace

MatchingResult max_weight_matching(const EdgeWeightedGraph& g) {
  std::vector<int> keep = merged_edges(g);
  std::vector<WeightedEdge> edges;
  Weight maxw = 0;
  for (int i : keep) {
    edges.push_back(g.edges[i]);
    maxw = std::max(maxw, g.edges[i].weight);
  }
  // Doubled duals and slacks must fit comfortably in 64 bits.
  if (maxw > (Weight{1} << 60)) throw InvalidInput("edge weight too large for matching");
  Blossom solver(g.n, edges);
  std::vector<int> mate = solver.solve();

  MatchingResult res;
  res.mate.assign(g.n, -1);
  for (std::size_t idx = 0; idx < keep.size(); ++idx) {
    const auto& e = edges[idx];
    if (mate[e.u] == e.v && mate[e.v] == e.u && res.mate[e.u] == -1) {
      res.mate[e.u] = e.v;
      res.mate[e.v] = e.u;
      res.edges.push_back(keep[idx]);
      res.total_weight = checked_add(res.total_weight, e.weight);
    }
  }
  std::sort(res.edges.begin(), res.edges.end());
  return res;
}

namespace {

Weight brute_rec(const std::vector<WeightedEdge>& edges, std::size_t i, std::vector<char>& used) {
  if (i == edges.size()) return 0;
  Weight best = brute_rec(edges, i + 1, used);
  const auto& e = edges[i];
  if (!used[e.u] && !used[e.v]) {
    used[e.u] = used[e.v] = 1;
    best = std::max(best, e.weight + brute_rec(edges, i + 1, used));
    used[e.u] = used[e.v] = 0;
  }
  return best;
}

}  // namespace

Weight brute_max_weight_matching(const EdgeWeightedGraph& g) {
  std::vector<int> keep = merged_edges(g);
  if (keep.size() > 40) throw SizeLimitExceeded("brute matching refuses more than 40 edges");
  std::vector<WeightedEdge> edges;
  for (int i : keep) edges.push_back(g.edges[i]);
  std::vector<char> used(g.n, 0);
  return brute_rec(edges, 0, used);
}

bool is_matching(const EdgeWeightedGraph& g, const std::vector<int>& edge_indices) {
  std::vector<char> used(g.n, 0);
  for (int i : edge_indices) {
    if (i < 0 || i >= static_cast<int>(g.edges.size())) return false;
    const auto& e = g.edges[i];
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

}  // namespace wheelfree
