#pragma once

#include <set>
#include <utility>
#include <vector>

#include "evencycle/graph.hpp"
#include "evencycle/rational.hpp"

namespace evencycle {

inline Graph cycle_graph(u32 n) {
  std::vector<std::pair<u32, u32>> edges;
  for (u32 i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  if (n >= 3) edges.emplace_back(n - 1, 0);
  return Graph::from_edges(n, std::move(edges));
}

inline Graph path_graph(u32 n) {
  std::vector<std::pair<u32, u32>> edges;
  for (u32 i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, std::move(edges));
}

// Vertex 0 is the center.
inline Graph star_graph(u32 leaves) {
  std::vector<std::pair<u32, u32>> edges;
  for (u32 i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, std::move(edges));
}

inline Graph complete_graph(u32 n) {
  std::vector<std::pair<u32, u32>> edges;
  for (u32 i = 0; i < n; ++i)
    for (u32 j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, std::move(edges));
}

// Left part is [0, l), right part [l, l+r).
inline Graph complete_bipartite(u32 l, u32 r) {
  std::vector<std::pair<u32, u32>> edges;
  for (u32 i = 0; i < l; ++i)
    for (u32 j = 0; j < r; ++j) edges.emplace_back(i, l + j);
  return Graph::from_edges(l + r, std::move(edges));
}

inline Graph petersen_graph() {
  std::vector<std::pair<u32, u32>> edges;
  for (u32 i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);        // outer pentagon
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);              // spokes
  }
  return Graph::from_edges(10, std::move(edges));
}

// LCF [5,-5]^7: the 14-vertex girth-6 cage.
inline Graph heawood_graph() {
  std::vector<std::pair<u32, u32>> edges;
  for (u32 i = 0; i < 14; ++i) edges.emplace_back(i, (i + 1) % 14);
  for (u32 i = 0; i < 14; i += 2) edges.emplace_back(i, (i + 5) % 14);
  return Graph::from_edges(14, std::move(edges));
}

// G(n, m): m distinct edges sampled uniformly by rejection. Deterministic in
// the seed across platforms.
inline Graph random_graph(u32 n, u64 m, u64 seed) {
  u64 max_m = n < 2 ? 0 : static_cast<u64>(n) * (n - 1) / 2;
  if (m > max_m) throw InvalidArgumentError("too many edges requested");
  if (4 * m > 3 * max_m) {  // dense: sample by per-pair inclusion instead
    std::vector<std::pair<u32, u32>> all;
    all.reserve(max_m);
    for (u32 i = 0; i < n; ++i)
      for (u32 j = i + 1; j < n; ++j) all.emplace_back(i, j);
    SplitMix64 rng(derive_stream(seed, 0xd3153aULL));
    for (std::size_t i = all.size(); i > 1; --i) std::swap(all[i - 1], all[rng.below(i)]);
    all.resize(m);
    return Graph::from_edges(n, std::move(all));
  }
  SplitMix64 rng(derive_stream(seed, 0xd3153aULL));
  std::set<std::pair<u32, u32>> chosen;
  while (chosen.size() < m) {
    u32 u = static_cast<u32>(rng.below(n));
    u32 v = static_cast<u32>(rng.below(n));
    if (u == v) continue;
    chosen.insert({std::min(u, v), std::max(u, v)});
  }
  return Graph::from_edges(n, {chosen.begin(), chosen.end()});
}

// Bipartite G(L, R, m): left part [0, l), right part [l, l+r).
inline Graph random_bipartite_graph(u32 l, u32 r, u64 m, u64 seed) {
  u64 max_m = static_cast<u64>(l) * r;
  if (m > max_m) throw InvalidArgumentError("too many edges requested");
  SplitMix64 rng(derive_stream(seed, 0xb1947eULL));
  std::set<std::pair<u32, u32>> chosen;
  if (4 * m > 3 * max_m) {
    for (u32 i = 0; i < l; ++i)
      for (u32 j = 0; j < r; ++j) chosen.insert({i, l + j});
    while (chosen.size() > m) {
      auto it = chosen.begin();
      std::advance(it, static_cast<long>(rng.below(chosen.size())));
      chosen.erase(it);
    }
  } else {
    while (chosen.size() < m) {
      u32 u = static_cast<u32>(rng.below(l));
      u32 v = static_cast<u32>(rng.below(r));
      chosen.insert({u, l + v});
    }
  }
  return Graph::from_edges(l + r, {chosen.begin(), chosen.end()});
}

// Bipartite G(L, R, p): each pair kept independently with probability p.
inline Graph random_bipartite_graph_p(u32 l, u32 r, const Rat& p, u64 seed) {
  if (p < 0 || p > 1) throw InvalidArgumentError("edge probability outside [0,1]");
  SplitMix64 rng(derive_stream(seed, 0xb19b7eULL));
  // keep iff next() < p * 2^64, computed exactly
  Int threshold_int = (p.get_num() << 64) / p.get_den();
  bool always = threshold_int >= Int(1) << 64;
  u64 threshold = always ? 0 : to_u64_saturating(threshold_int);
  std::vector<std::pair<u32, u32>> edges;
  for (u32 i = 0; i < l; ++i)
    for (u32 j = 0; j < r; ++j) {
      u64 x = rng.next();
      if (always || x < threshold) edges.emplace_back(i, l + j);
    }
  return Graph::from_edges(l + r, std::move(edges));
}

}  // namespace evencycle
