#include "wheelfree/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace wheelfree {

namespace {

constexpr int kMaxVertices = 1 << 16;

std::vector<std::string> tokens(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream ss(body);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

std::int64_t number(const std::string& tok, int line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) throw ParseError(line, "bad integer '" + tok + "'");
  return v;
}

}  // namespace

WeightedTrigraph parse_instance(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  Trigraph g;
  std::vector<char> vertex_set;
  std::set<std::pair<Vertex, Vertex>> pair_set, pair_weight_set;
  WeightFunction w;
  struct PendingPair {
    Vertex u, v;
    Weight uv, vu, pair;
    int line;
  };
  std::vector<PendingPair> pending;

  auto vertex = [&](const std::string& tok) {
    std::int64_t v = number(tok, lineno);
    if (v < 0 || v >= n) throw ParseError(lineno, "vertex " + tok + " out of range");
    return static_cast<Vertex>(v);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto t = tokens(line);
    if (t.empty()) continue;
    if (n < 0) {
      if (t[0] != "trigraph" || t.size() != 2) throw ParseError(lineno, "expected 'trigraph <n>' header");
      std::int64_t v = number(t[1], lineno);
      if (v < 0 || v > kMaxVertices) throw ParseError(lineno, "vertex count out of range");
      n = static_cast<int>(v);
      g = Trigraph(n);
      w = WeightFunction(n);
      vertex_set.assign(n, 0);
      continue;
    }
    const std::string& kind = t[0];
    if (kind == "e" || kind == "s") {
      if (t.size() != 3) throw ParseError(lineno, "expected '" + kind + " <u> <v>'");
      Vertex u = vertex(t[1]), v = vertex(t[2]);
      if (u == v) throw ParseError(lineno, "self pair");
      if (!pair_set.insert({std::min(u, v), std::max(u, v)}).second)
        throw ParseError(lineno, "duplicate or conflicting pair " + t[1] + " " + t[2]);
      g.set(u, v, kind == "e" ? Adjacency::StrongAdj : Adjacency::Semi);
    } else if (kind == "w") {
      if (t.size() != 3) throw ParseError(lineno, "expected 'w <u> <val>'");
      Vertex u = vertex(t[1]);
      Weight val = number(t[2], lineno);
      if (val < 0) throw ParseError(lineno, "negative vertex weight");
      if (vertex_set[u]) throw ParseError(lineno, "duplicate weight for vertex " + t[1]);
      vertex_set[u] = 1;
      w.set_vertex(u, val);
    } else if (kind == "sw") {
      if (t.size() != 6) throw ParseError(lineno, "expected 'sw <u> <v> <wuv> <wvu> <wpair>'");
      Vertex u = vertex(t[1]), v = vertex(t[2]);
      if (u == v) throw ParseError(lineno, "self pair");
      if (!pair_weight_set.insert({std::min(u, v), std::max(u, v)}).second)
        throw ParseError(lineno, "duplicate pair weights for " + t[1] + " " + t[2]);
      pending.push_back({u, v, number(t[3], lineno), number(t[4], lineno), number(t[5], lineno), lineno});
    } else if (kind == "trigraph") {
      throw ParseError(lineno, "second header");
    } else {
      throw ParseError(lineno, "unknown record '" + kind + "'");
    }
  }
  if (n < 0) throw ParseError(lineno, "missing 'trigraph <n>' header");
  // Pair weights are checked after all adjacency lines, so record order is free.
  for (const auto& p : pending) {
    if (!g.is_semi(p.u, p.v)) throw ParseError(p.line, "pair weights on a pair that is not semi-adjacent");
    if (p.uv < 0 || p.vu < 0 || p.pair < 0) throw ParseError(p.line, "negative pair weight");
    if (std::max(p.uv, p.vu) > p.pair) throw ParseError(p.line, "directed weight exceeds the pair weight");
    w.set_pair(p.u, p.v, p.uv, p.vu, p.pair);
  }
  return WeightedTrigraph(std::move(g), std::move(w));
}

WeightedTrigraph parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

WeightedTrigraph read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_instance(in);
}

std::string write_instance(const WeightedTrigraph& wt) {
  std::ostringstream os;
  const int n = wt.size();
  os << "trigraph " << n << "\n";
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      int t = wt.g.theta(u, v);
      if (t == 1) os << "e " << u << " " << v << "\n";
      else if (t == 0) os << "s " << u << " " << v << "\n";
    }
  for (Vertex u = 0; u < n; ++u)
    if (wt.w.vertex(u) != 0) os << "w " << u << " " << wt.w.vertex(u) << "\n";
  for (const auto& [key, p] : wt.w.pairs())
    os << "sw " << key.first << " " << key.second << " " << p.lo_hi << " " << p.hi_lo << " " << p.pair << "\n";
  return os.str();
}

void write_instance_file(const WeightedTrigraph& wt, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << write_instance(wt);
}

}  // namespace wheelfree
