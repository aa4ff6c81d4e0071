#pragma once

#include <limits>
#include <set>
#include <vector>

#include "evencycle/cycle.hpp"
#include "evencycle/graph.hpp"

namespace evencycle {
namespace oracle {

// Exhaustive ground truth for small instances. Everything here favors
// obviousness over speed; the fast paths elsewhere are tested against these.

namespace detail {

constexpr u32 kUnreached = std::numeric_limits<u32>::max();

// BFS distances from source inside {v : v > anchor} ∪ {anchor}.
inline std::vector<u32> dist_above(const Graph& g, u32 anchor) {
  std::vector<u32> dist(g.n(), kUnreached);
  std::vector<u32> queue{anchor};
  dist[anchor] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    u32 u = queue[head];
    for (u32 w : g.neighbors(u))
      if (w > anchor && dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

struct CycleDfs {
  const Graph& g;
  u32 anchor;
  u32 len;  // 2k
  const std::vector<u32>& dist;
  std::vector<u32> path;
  std::vector<bool> on_path;
  std::set<Cycle>* out;
  u64 budget;
  u64 steps = 0;

  void step() {
    if (++steps > budget) throw BudgetExceededError("cycle enumeration budget exceeded");
  }

  void extend() {
    u32 u = path.back();
    if (path.size() == len) {
      step();
      if (path[1] < u && g.has_edge(u, anchor)) out->insert(Cycle::from_sequence(path));
      return;
    }
    u32 remaining = len - static_cast<u32>(path.size());
    for (u32 w : g.neighbors(u)) {
      step();
      if (w <= anchor || on_path[w] || dist[w] > remaining) continue;
      path.push_back(w);
      on_path[w] = true;
      extend();
      path.pop_back();
      on_path[w] = false;
    }
  }
};

}  // namespace detail

/// All distinct 2k-cycles, canonicalized. Vertex-anchored enumeration: each
/// cycle is found from its minimum vertex, walking toward the smaller of the
/// two cycle-neighbors first.
inline std::set<Cycle> enumerate_cycles(const Graph& g, int k,
                                        u64 budget = std::numeric_limits<u64>::max()) {
  if (k < 2) throw InvalidArgumentError("k must be at least 2");
  std::set<Cycle> out;
  u32 len = 2 * static_cast<u32>(k);
  if (g.n() < len) return out;
  u64 steps_used = 0;
  for (u32 a = 0; a < g.n(); ++a) {
    auto dist = detail::dist_above(g, a);
    detail::CycleDfs dfs{g, a, len, dist, {a}, std::vector<bool>(g.n(), false), &out,
                         budget - steps_used};
    dfs.on_path[a] = true;
    dfs.extend();
    steps_used += dfs.steps;
  }
  return out;
}

/// Same cycle set via a different outer loop: anchored on the edge joining
/// the cycle's minimum vertex to its smaller cycle-neighbor.
inline std::set<Cycle> enumerate_cycles_edge_anchored(
    const Graph& g, int k, u64 budget = std::numeric_limits<u64>::max()) {
  if (k < 2) throw InvalidArgumentError("k must be at least 2");
  std::set<Cycle> out;
  u32 len = 2 * static_cast<u32>(k);
  if (g.n() < len) return out;
  u64 steps_used = 0;
  for (u32 a = 0; a < g.n(); ++a) {
    auto dist = detail::dist_above(g, a);
    for (u32 b : g.neighbors(a)) {
      if (b <= a) continue;
      detail::CycleDfs dfs{g,  a, len, dist, {a, b}, std::vector<bool>(g.n(), false),
                           &out, budget - steps_used};
      dfs.on_path[a] = true;
      dfs.on_path[b] = true;
      dfs.extend();
      steps_used += dfs.steps;
    }
  }
  return out;
}

/// Ordered walks (x_0, ..., x_k); equals the sum of all entries of A^k * 1.
inline u128 count_k_walks(const Graph& g, int k) {
  if (k < 1) throw InvalidArgumentError("k must be positive");
  std::vector<u128> walks(g.n(), 1);
  for (int step = 0; step < k; ++step) {
    std::vector<u128> next(g.n(), 0);
    for (u32 v = 0; v < g.n(); ++v)
      for (u32 u : g.neighbors(v)) next[v] = checked_add(next[v], walks[u]);
    walks = std::move(next);
  }
  u128 total = 0;
  for (u128 w : walks) total = checked_add(total, w);
  return total;
}

/// Ordered k-walks whose first vertex lies in the given set.
inline u128 count_k_walks_from_set(const Graph& g, int k, const std::vector<bool>& start) {
  if (k < 1) throw InvalidArgumentError("k must be positive");
  std::vector<u128> walks(g.n());
  for (u32 v = 0; v < g.n(); ++v) walks[v] = start[v] ? 1 : 0;
  for (int step = 0; step < k; ++step) {
    std::vector<u128> next(g.n(), 0);
    for (u32 v = 0; v < g.n(); ++v)
      for (u32 u : g.neighbors(v)) next[v] = checked_add(next[v], walks[u]);
    walks = std::move(next);
  }
  u128 total = 0;
  for (u128 w : walks) total = checked_add(total, w);
  return total;
}

namespace detail {
inline u128 capped_extend(const Graph& g, const DegreeOrder& order, u32 start, u32 u,
                          int remaining) {
  if (remaining == 0) return 1;
  u128 total = 0;
  for (u32 w : g.neighbors(u))
    if (order.precedes(w, start))
      total = checked_add(total, capped_extend(g, order, start, w, remaining - 1));
  return total;
}
}  // namespace detail

/// Capped k-walks from one start vertex, by exhaustive walk extension: every
/// non-initial vertex must be strictly below the start in the ≻ order.
inline u128 count_capped_k_walks_from(const Graph& g, int k, const DegreeOrder& order, u32 v) {
  if (k < 1) throw InvalidArgumentError("k must be positive");
  return detail::capped_extend(g, order, v, v, k);
}

inline u128 count_capped_k_walks(const Graph& g, int k, const DegreeOrder& order) {
  u128 total = 0;
  for (u32 v = 0; v < g.n(); ++v)
    total = checked_add(total, count_capped_k_walks_from(g, k, order, v));
  return total;
}

/// Ordered 2-paths (a1, b, a2): a1 != a2 in A, b in B, both edges present.
inline u128 count_2paths(const Graph& g, const std::vector<u32>& a, const std::vector<u32>& b) {
  auto in_a = membership(g.n(), a);
  auto in_b = membership(g.n(), b);
  for (u32 v = 0; v < g.n(); ++v)
    if (in_a[v] && in_b[v]) throw SetsOverlapError("A and B overlap at " + std::to_string(v));
  u128 total = 0;
  for (u32 v : b) {
    u128 deg_a = 0;
    for (u32 w : g.neighbors(v))
      if (in_a[w]) ++deg_a;
    if (deg_a >= 2) total = checked_add(total, checked_mul(deg_a, deg_a - 1));
  }
  return total;
}

/// Ordered 4-paths (a1, b1, a2, b2, a3), all five vertices distinct, four
/// edges present. Exhaustive; the budget guards against immodest degrees.
inline u64 count_4paths(const Graph& g, const std::vector<u32>& a, const std::vector<u32>& b,
                        u64 budget = 500'000'000ULL) {
  auto in_a = membership(g.n(), a);
  auto in_b = membership(g.n(), b);
  for (u32 v = 0; v < g.n(); ++v)
    if (in_a[v] && in_b[v]) throw SetsOverlapError("A and B overlap at " + std::to_string(v));
  u64 total = 0;
  u64 steps = 0;
  auto step = [&] {
    if (++steps > budget) throw BudgetExceededError("4-path enumeration budget exceeded");
  };
  for (u32 b1 : b) {
    for (u32 a1 : g.neighbors(b1)) {
      if (!in_a[a1]) continue;
      for (u32 a2 : g.neighbors(b1)) {
        step();
        if (!in_a[a2] || a2 == a1) continue;
        for (u32 b2 : g.neighbors(a2)) {
          step();
          if (!in_b[b2] || b2 == b1) continue;
          for (u32 a3 : g.neighbors(b2)) {
            step();
            if (in_a[a3] && a3 != a1 && a3 != a2) ++total;
          }
        }
      }
    }
  }
  return total;
}

struct CompleteBipartiteCounts {
  u128 two_paths;   // ordered, midpoints on the R side
  u128 four_paths;  // ordered, starting on the L side
  u128 hexagons;    // distinct 6-cycles
};

/// Closed forms on K_{L,R}, for acceptance checks at sizes where enumeration
/// is infeasible.
inline CompleteBipartiteCounts complete_bipartite_counts(u64 l, u64 r) {
  if (l < 1 || r < 1) throw InvalidArgumentError("parts must be non-empty");
  u128 two = checked_mul(checked_mul(static_cast<u128>(r), l), l - 1);
  u128 four = 0;
  if (l >= 3 && r >= 2) {
    four = checked_mul(checked_mul(static_cast<u128>(l), r), l - 1);
    four = checked_mul(four, r - 1);
    four = checked_mul(four, l - 2);
  }
  u128 hex = 0;
  if (l >= 3 && r >= 3) {
    u128 lp = checked_mul(checked_mul(static_cast<u128>(l), l - 1), l - 2);
    u128 rp = checked_mul(checked_mul(static_cast<u128>(r), r - 1), r - 2);
    hex = checked_mul(lp, rp) / 6;
  }
  return {two, four, hex};
}

}  // namespace oracle
}  // namespace evencycle
