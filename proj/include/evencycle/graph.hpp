#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "evencycle/common.hpp"

namespace evencycle {

/// Immutable simple undirected graph in CSR form. Adjacency lists are sorted
/// ascending; no self-loops, no parallel edges. Safe for concurrent reads.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(u32 n, std::vector<std::pair<u32, u32>> edges) {
    for (auto [u, v] : edges) {
      if (u == v) throw SelfLoopError("self-loop at vertex " + std::to_string(u));
      if (u >= n || v >= n)
        throw OutOfRangeError("edge endpoint out of range: " + std::to_string(std::max(u, v)));
    }
    Graph g;
    g.n_ = n;
    g.m_ = edges.size();
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (auto [u, v] : edges) {
      ++g.offsets_[u + 1];
      ++g.offsets_[v + 1];
    }
    for (u32 v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
    g.adj_.resize(2 * g.m_);
    std::vector<u64> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
      g.adj_[cursor[u]++] = v;
      g.adj_[cursor[v]++] = u;
    }
    for (u32 v = 0; v < n; ++v) {
      auto begin = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
      auto end = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
      std::sort(begin, end);
      auto dup = std::adjacent_find(begin, end);
      if (dup != end)
        throw DuplicateEdgeError("duplicate edge {" + std::to_string(v) + "," +
                                 std::to_string(*dup) + "}");
    }
    return g;
  }

  // Edge-list text: "u v" per line, '#' lines are comments, and an optional
  // first line "# N M" declares the vertex and edge counts.
  static Graph load_edge_list(std::istream& in) {
    std::vector<std::pair<u32, u32>> edges;
    std::optional<u64> declared_n, declared_m;
    std::string line;
    bool first = true;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::string_view sv(line);
      if (first && sv.size() > 1 && sv[0] == '#') {
        std::istringstream hs(line.substr(1));
        u64 hn = 0, hm = 0;
        std::string rest;
        if (hs >> hn >> hm && !(hs >> rest)) {
          declared_n = hn;
          declared_m = hm;
        }
      }
      first = false;
      if (!sv.empty() && sv[0] == '#') continue;
      if (sv.find_first_not_of(" \t\r") == std::string_view::npos) continue;
      std::istringstream ls(line);
      long long a = -1, b = -1;
      std::string rest;
      if (!(ls >> a >> b) || (ls >> rest) || a < 0 || b < 0)
        throw ParseError("line " + std::to_string(lineno) + ": expected two non-negative integers");
      if (a == b) throw SelfLoopError("line " + std::to_string(lineno) + ": self-loop " + line);
      edges.emplace_back(static_cast<u32>(a), static_cast<u32>(b));
    }
    u64 n = 0;
    for (auto [u, v] : edges) n = std::max<u64>(n, u64{std::max(u, v)} + 1);
    if (declared_n) {
      if (*declared_n < n)
        throw ParseError("declared vertex count " + std::to_string(*declared_n) +
                         " below max id + 1");
      n = *declared_n;
    }
    if (declared_m && *declared_m != edges.size())
      throw ParseError("declared edge count " + std::to_string(*declared_m) + " but parsed " +
                       std::to_string(edges.size()));
    return from_edges(static_cast<u32>(n), std::move(edges));
  }

  static Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return load_edge_list(in);
  }

  // Normalized form: ascending "u v" lines with u < v, newline-terminated.
  void save_edge_list(std::ostream& out) const {
    for (u32 u = 0; u < n_; ++u)
      for (u32 w : neighbors(u))
        if (u < w) out << u << ' ' << w << '\n';
  }

  std::string save_edge_list_string() const {
    std::ostringstream os;
    save_edge_list(os);
    return os.str();
  }

  u32 n() const { return n_; }
  u64 m() const { return m_; }

  std::span<const u32> neighbors(u32 v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }

  u32 degree(u32 v) const { return static_cast<u32>(offsets_[v + 1] - offsets_[v]); }

  bool has_edge(u32 u, u32 v) const {
    if (u >= n_ || v >= n_) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  std::vector<std::pair<u32, u32>> edges() const {
    std::vector<std::pair<u32, u32>> out;
    out.reserve(m_);
    for (u32 u = 0; u < n_; ++u)
      for (u32 w : neighbors(u))
        if (u < w) out.emplace_back(u, w);
    return out;
  }

  bool validate() const {
    u64 deg_sum = 0;
    for (u32 v = 0; v < n_; ++v) {
      auto nb = neighbors(v);
      deg_sum += nb.size();
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (nb[i] >= n_ || nb[i] == v) return false;
        if (i > 0 && nb[i - 1] >= nb[i]) return false;
        if (!has_edge(nb[i], v)) return false;
      }
    }
    return deg_sum == 2 * m_;
  }

 private:
  u32 n_ = 0;
  u64 m_ = 0;
  std::vector<u64> offsets_{0};
  std::vector<u32> adj_;
};

/// Total vertex order ≻: strictly higher degree means higher rank, ties broken
/// by ascending vertex id. rank is a bijection V → [0, n).
class DegreeOrder {
 public:
  explicit DegreeOrder(const Graph& g) : rank_(g.n()), by_rank_(g.n()) {
    for (u32 v = 0; v < g.n(); ++v) by_rank_[v] = v;
    std::sort(by_rank_.begin(), by_rank_.end(), [&](u32 a, u32 b) {
      if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
      return a < b;
    });
    for (u32 r = 0; r < g.n(); ++r) rank_[by_rank_[r]] = r;
  }

  u32 n() const { return static_cast<u32>(rank_.size()); }
  u32 rank(u32 v) const { return rank_[v]; }
  u32 vertex_at(u32 r) const { return by_rank_[r]; }
  // u ≺ v
  bool precedes(u32 u, u32 v) const { return rank_[u] < rank_[v]; }

 private:
  std::vector<u32> rank_;
  std::vector<u32> by_rank_;
};

// e(A,B): edges with one endpoint in A and the other in B (an edge inside
// A∩B counts once).
inline u64 count_edges_between(const Graph& g, const std::vector<bool>& in_a,
                               const std::vector<bool>& in_b) {
  u64 count = 0;
  for (u32 u = 0; u < g.n(); ++u)
    for (u32 w : g.neighbors(u))
      if (u < w && ((in_a[u] && in_b[w]) || (in_a[w] && in_b[u]))) ++count;
  return count;
}

inline std::vector<bool> membership(u32 n, const std::vector<u32>& set) {
  std::vector<bool> in(n, false);
  for (u32 v : set) {
    if (v >= n) throw OutOfRangeError("set member out of range: " + std::to_string(v));
    in[v] = true;
  }
  return in;
}

/// A pair of (possibly overlapping) vertex sets with the cached edge count
/// e(A,B) between them.
struct VertexSetPair {
  std::vector<u32> a;
  std::vector<u32> b;
  u64 edges_ab = 0;

  static VertexSetPair make(const Graph& g, std::vector<u32> a, std::vector<u32> b) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    VertexSetPair p{std::move(a), std::move(b), 0};
    p.edges_ab = count_edges_between(g, membership(g.n(), p.a), membership(g.n(), p.b));
    return p;
  }
};

/// Subgraph G_i of the listing engine: on allowed vertices, exactly the edges
/// {u,w} of the allowed-induced subgraph with min(dist(u), dist(w)) <= k-1,
/// distances measured from source inside the allowed-induced subgraph. Vertex
/// ids are preserved.
inline Graph restricted_bfs_subgraph(const Graph& g, u32 source, int k,
                                     const std::vector<bool>& allowed) {
  if (source >= g.n() || !allowed[source]) throw SourceNotAllowedError("source not allowed");
  if (k < 1) throw InvalidArgumentError("depth must be positive");
  constexpr u32 kUnreached = std::numeric_limits<u32>::max();
  std::vector<u32> dist(g.n(), kUnreached);
  std::vector<u32> queue;
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    u32 u = queue[head];
    if (dist[u] >= static_cast<u32>(k)) break;
    for (u32 w : g.neighbors(u)) {
      if (!allowed[w] || dist[w] != kUnreached) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  std::vector<std::pair<u32, u32>> edges;
  for (u32 u : queue) {
    if (dist[u] > static_cast<u32>(k - 1)) continue;
    for (u32 w : g.neighbors(u)) {
      if (!allowed[w]) continue;
      if (dist[w] <= static_cast<u32>(k - 1) && w < u) continue;  // counted from w
      edges.emplace_back(u, w);
    }
  }
  return Graph::from_edges(g.n(), std::move(edges));
}

struct BipartiteSplit {
  std::vector<u32> left;
  std::vector<u32> right;
  Graph h;
};

/// Seeded random reduction of a non-disjoint pair (A,B) to a bipartite
/// instance: shared vertices flip a per-vertex coin, and H keeps exactly the
/// A×B edges crossing L×R.
inline BipartiteSplit random_bipartite_split(const Graph& g, const VertexSetPair& pair, u64 seed) {
  auto in_a = membership(g.n(), pair.a);
  auto in_b = membership(g.n(), pair.b);
  std::vector<bool> in_l(g.n(), false), in_r(g.n(), false);
  for (u32 v = 0; v < g.n(); ++v) {
    if (in_a[v] && in_b[v]) {
      bool left = derive_stream(seed, 0x51713ULL, v) & 1;
      (left ? in_l : in_r)[v] = true;
    } else if (in_a[v]) {
      in_l[v] = true;
    } else if (in_b[v]) {
      in_r[v] = true;
    }
  }
  std::vector<std::pair<u32, u32>> kept;
  for (u32 u = 0; u < g.n(); ++u)
    for (u32 w : g.neighbors(u)) {
      if (u >= w) continue;
      bool ab_edge = (in_a[u] && in_b[w]) || (in_a[w] && in_b[u]);
      bool crossing = (in_l[u] && in_r[w]) || (in_l[w] && in_r[u]);
      if (ab_edge && crossing) kept.emplace_back(u, w);
    }
  BipartiteSplit split;
  for (u32 v = 0; v < g.n(); ++v) {
    if (in_l[v]) split.left.push_back(v);
    if (in_r[v]) split.right.push_back(v);
  }
  split.h = Graph::from_edges(g.n(), std::move(kept));
  return split;
}

}  // namespace evencycle
