#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "evencycle/cycle.hpp"
#include "evencycle/graph.hpp"
#include "evencycle/rational.hpp"

namespace evencycle {

/// Total coloring of the searched subgraph's vertices with colors in [0, 2k).
struct ColorAssignment {
  std::vector<u8> color;
};

struct ListingConfig {
  int k = 3;
  std::optional<u64> delta;  // work-split threshold Δ; default ⌈m^{2/(k+1)}⌉
  u64 seed = 0;
  Rat epsilon = Rat(1, 1000000000);
  std::optional<u64> budget;  // cap on adjacency-scan steps
};

struct WorkCounters {
  u64 edges_below_delta = 0;  // Σ|E(G_i)| over iterations with deg(v_i) <= Δ
  u64 edges_above_delta = 0;  // Σ|E(G_i)| over iterations with deg(v_i) > Δ
  u64 steps = 0;              // adjacency scan steps, the budget unit
};

struct ListingResult {
  std::vector<Cycle> cycles;          // canonical ascending order
  std::vector<u32> first_found_rank;  // iteration (≻-rank) of first discovery
  WorkCounters counters;
  u64 r = 0;      // colorings per iteration
  u64 delta = 0;  // threshold used
  bool budget_exhausted = false;  // soft-budget mode only
};

/// Colorings per iteration so that, union-bounded over at most n^{2k} cycles,
/// the probability any cycle is missed in its iteration stays below ε. Uses
/// the exact colorful probability p = (2k)!/(2k)^{2k}.
inline u64 repetitions_for(int k, u32 n, const Rat& eps) {
  if (k < 2) throw InvalidArgumentError("k must be at least 2");
  if (eps <= 0 || eps >= 1) throw InvalidArgumentError("epsilon must lie in (0,1)");
  double p = 1.0;
  for (int i = 1; i <= 2 * k; ++i) p *= static_cast<double>(i) / (2.0 * k);
  double ln_n = std::log(static_cast<double>(std::max<u32>(n, 2)));
  double ln_inv_eps = -std::log(eps.get_d());
  double r = std::ceil((2.0 * k * ln_n + ln_inv_eps) / -std::log1p(-p));
  return r < 1.0 ? 1 : static_cast<u64>(r);
}

namespace detail {

/// Compact subgraph for one listing iteration; vertex ids are local.
struct LocalGraph {
  u32 nv = 0;
  std::vector<u32> offsets;
  std::vector<u32> adj;
  std::vector<u32> global;  // local id -> host id
  u64 edge_count() const { return adj.size() / 2; }
};

/// Subset-indexed bitset DP for colorful paths. dp[t][u] holds a bit per
/// color subset S meaning: a colorful path of length t from the source to u
/// with color set exactly S exists.
struct ColorfulSearch {
  int k = 0;
  u32 num_colors = 0;  // 2k
  u32 words = 0;       // u64 words per subset bitset
  std::vector<u64> dp;  // (k+1) * nv * words
  std::vector<u64> has;  // num_colors * words: subsets containing color c
  std::vector<u64> scratch;
  // reusable emission buffers
  std::vector<u32> side1, side2, seq, tail;
  Cycle probe;

  void prepare(int k_, u32 nv) {
    if (k_ != k) {
      k = k_;
      num_colors = static_cast<u32>(2 * k_);
      u64 subsets = u64{1} << num_colors;
      words = static_cast<u32>(subsets <= 64 ? 1 : subsets / 64);
      has.assign(static_cast<std::size_t>(num_colors) * words, 0);
      for (u32 c = 0; c < num_colors; ++c)
        for (u64 s = 0; s < subsets; ++s)
          if (s & (u64{1} << c)) has[c * words + (s >> 6)] |= u64{1} << (s & 63);
      scratch.assign(words, 0);
    }
    dp.assign(static_cast<std::size_t>(k + 1) * nv * words, 0);
  }

  u64* at(int t, u32 u) { return dp.data() + (static_cast<std::size_t>(t) * (dp.size() / (k + 1))) + static_cast<std::size_t>(u) * words; }

  bool test(int t, u32 u, u64 subset) {
    return (at(t, u)[subset >> 6] >> (subset & 63)) & 1;
  }

  // dst |= (src & ~has[c]) << 2^c, the "insert color c" transition.
  void or_shifted(u64* dst, const u64* src, u32 c) {
    const u64* hc = has.data() + static_cast<std::size_t>(c) * words;
    u64 shift = u64{1} << c;
    if (words == 1) {
      dst[0] |= (src[0] & ~hc[0]) << shift;
      return;
    }
    for (u32 w = 0; w < words; ++w) scratch[w] = src[w] & ~hc[w];
    if (shift >= 64) {
      u32 off = static_cast<u32>(shift >> 6);
      for (u32 w = words; w-- > off;) dst[w] |= scratch[w - off];
    } else {
      for (u32 w = words; w-- > 0;) {
        u64 lo = scratch[w] << shift;
        u64 hi = w > 0 ? scratch[w - 1] >> (64 - shift) : 0;
        dst[w] |= lo | hi;
      }
    }
  }
};

// Enumerates the colorful paths of length t from the DP source to u whose
// color set is `subset`, appending each host-id sequence source..u (t+1
// entries) to the flat buffer `out`.
inline void gather_paths(const LocalGraph& lg, ColorfulSearch& cs, std::span<const u8> colors,
                         u32 u, u64 subset, int t, std::vector<u32>& tail, u64& steps,
                         std::vector<u32>& out) {
  if (t == 0) {
    out.push_back(lg.global[u]);
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) out.push_back(*it);
    return;
  }
  u64 rest = subset & ~(u64{1} << colors[u]);
  tail.push_back(lg.global[u]);
  for (u32 idx = lg.offsets[u]; idx < lg.offsets[u + 1]; ++idx) {
    u32 x = lg.adj[idx];
    ++steps;
    if (cs.test(t - 1, x, rest)) gather_paths(lg, cs, colors, x, rest, t - 1, tail, steps, out);
  }
  tail.pop_back();
}

/// All 2k-cycles through local vertex v whose 2k vertices are rainbow under
/// `colors`. Two length-k colorful paths from v meeting at a common endpoint
/// w with color sets intersecting exactly in {color(v), color(w)} are joined
/// and materialized by DP backtracking.
template <typename Emit>
void colorful_cycles_core(const LocalGraph& lg, u32 v, std::span<const u8> colors, int k,
                          ColorfulSearch& cs, u64& steps, const Emit& emit) {
  cs.prepare(k, lg.nv);
  u32 num_colors = cs.num_colors;
  cs.at(0, v)[(u64{1} << colors[v]) >> 6] |= u64{1} << ((u64{1} << colors[v]) & 63);
  if (cs.words == 1) {  // 2k <= 6: one word per subset bitset
    u64* dp = cs.dp.data();
    const u64* has = cs.has.data();
    for (int t = 0; t < k; ++t) {
      const u64* level = dp + static_cast<std::size_t>(t) * lg.nv;
      u64* next = dp + static_cast<std::size_t>(t + 1) * lg.nv;
      for (u32 u = 0; u < lg.nv; ++u) {
        u64 src = level[u];
        if (!src) continue;
        steps += lg.offsets[u + 1] - lg.offsets[u];
        for (u32 idx = lg.offsets[u]; idx < lg.offsets[u + 1]; ++idx) {
          u32 w = lg.adj[idx];
          u8 c = colors[w];
          next[w] |= (src & ~has[c]) << (u64{1} << c);
        }
      }
    }
  } else {
    for (int t = 0; t < k; ++t) {
      for (u32 u = 0; u < lg.nv; ++u) {
        const u64* src = cs.at(t, u);
        bool any = false;
        for (u32 w = 0; w < cs.words; ++w) any |= src[w] != 0;
        if (!any) continue;
        for (u32 idx = lg.offsets[u]; idx < lg.offsets[u + 1]; ++idx) {
          u32 w = lg.adj[idx];
          ++steps;
          cs.or_shifted(cs.at(t + 1, w), src, colors[w]);
        }
      }
    }
  }
  u64 full = num_colors == 64 ? ~u64{0} : (u64{1} << num_colors) - 1;
  const std::size_t stride = static_cast<std::size_t>(k) + 1;
  for (u32 w = 0; w < lg.nv; ++w) {
    if (w == v || colors[w] == colors[v]) continue;
    const u64* end_masks = cs.at(k, w);
    for (u32 wi = 0; wi < cs.words; ++wi) {
      u64 word = end_masks[wi];
      while (word) {
        ++steps;
        u32 bit = static_cast<u32>(std::countr_zero(word));
        word &= word - 1;
        u64 s1 = (static_cast<u64>(wi) << 6) | bit;
        u64 s2 = (~s1 & full) | (u64{1} << colors[v]) | (u64{1} << colors[w]);
        if (s1 >= s2 || !cs.test(k, w, s2)) continue;
        cs.side1.clear();
        cs.side2.clear();
        cs.tail.clear();
        gather_paths(lg, cs, colors, w, s1, k, cs.tail, steps, cs.side1);
        gather_paths(lg, cs, colors, w, s2, k, cs.tail, steps, cs.side2);
        for (std::size_t pa = 0; pa < cs.side1.size(); pa += stride)
          for (std::size_t pb = 0; pb < cs.side2.size(); pb += stride) {
            cs.seq.assign(cs.side1.begin() + static_cast<std::ptrdiff_t>(pa),
                          cs.side1.begin() + static_cast<std::ptrdiff_t>(pa + stride));
            for (std::size_t j = stride - 2; j >= 1; --j)
              cs.seq.push_back(cs.side2[pb + j]);
            Cycle::canonical_sequence(cs.seq, cs.probe.v);
            emit(cs.probe);
          }
      }
    }
  }
}

/// Reusable scratch for the per-iteration BFS ball extraction.
struct BallWorkspace {
  std::vector<u32> dist, stamp, local_of, order_sorted;
  std::vector<std::pair<u32, u32>> ledges;
  u32 epoch = 0;
  LocalGraph lg;

  void init(u32 n) {
    dist.assign(n, 0);
    stamp.assign(n, 0);
    local_of.assign(n, 0);
    epoch = 0;
  }

  // G_i ball: vertices within allowed-induced distance k of source; edges
  // with min endpoint distance <= k-1. Counts adjacency scans into steps.
  void extract(const Graph& g, u32 source, int k, const std::vector<bool>& allowed, u64& steps) {
    ++epoch;
    lg.nv = 0;
    lg.global.clear();
    ledges.clear();
    auto visit = [&](u32 v, u32 d) {
      stamp[v] = epoch;
      dist[v] = d;
      local_of[v] = lg.nv++;
      lg.global.push_back(v);
    };
    visit(source, 0);
    for (u32 head = 0; head < lg.global.size(); ++head) {
      u32 u = lg.global[head];
      if (dist[u] >= static_cast<u32>(k)) break;
      for (u32 w : g.neighbors(u)) {
        ++steps;
        if (!allowed[w] || stamp[w] == epoch) continue;
        visit(w, dist[u] + 1);
      }
    }
    for (u32 lu = 0; lu < lg.nv; ++lu) {
      u32 u = lg.global[lu];
      if (dist[u] > static_cast<u32>(k - 1)) continue;
      for (u32 w : g.neighbors(u)) {
        ++steps;
        if (!allowed[w] || stamp[w] != epoch) continue;
        if (dist[w] <= static_cast<u32>(k - 1) && w < u) continue;  // counted from w
        ledges.emplace_back(lu, local_of[w]);
      }
    }
    lg.offsets.assign(lg.nv + 1, 0);
    for (auto [lu, lw] : ledges) {
      ++lg.offsets[lu + 1];
      ++lg.offsets[lw + 1];
    }
    for (u32 v = 0; v < lg.nv; ++v) lg.offsets[v + 1] += lg.offsets[v];
    lg.adj.resize(2 * ledges.size());
    std::vector<u32> cursor(lg.offsets.begin(), lg.offsets.end() - 1);
    for (auto [lu, lw] : ledges) {
      lg.adj[cursor[lu]++] = lw;
      lg.adj[cursor[lw]++] = lu;
    }
    order_sorted.resize(lg.nv);
    for (u32 i = 0; i < lg.nv; ++i) order_sorted[i] = i;
    std::sort(order_sorted.begin(), order_sorted.end(),
              [&](u32 a, u32 b) { return lg.global[a] < lg.global[b]; });
  }
};

struct EngineOptions {
  bool stop_on_first = false;
  bool soft_budget = false;  // stop and flag instead of throwing
};

inline ListingResult run_listing(const Graph& g, const ListingConfig& cfg, EngineOptions opt) {
  if (cfg.k < 2) throw InvalidArgumentError("k must be at least 2");
  if (cfg.epsilon <= 0 || cfg.epsilon >= 1)
    throw InvalidArgumentError("epsilon must lie in (0,1)");
  const int k = cfg.k;
  ListingResult result;
  result.delta = cfg.delta ? *cfg.delta : to_u64_saturating(ceil_pow_frac(Int(g.m()), 2, k + 1));
  if (g.n() < static_cast<u32>(2 * k) || g.m() == 0) return result;
  result.r = repetitions_for(k, g.n(), cfg.epsilon);

  DegreeOrder order(g);
  std::vector<bool> allowed(g.n(), false);
  BallWorkspace ws;
  ws.init(g.n());
  ColorfulSearch cs;
  std::vector<u8> colors;
  std::map<Cycle, u32> found;
  u64 budget = cfg.budget ? *cfg.budget : std::numeric_limits<u64>::max();

  auto over_budget = [&] { return result.counters.steps > budget; };
  auto handle_budget = [&]() -> bool {  // true: stop now
    if (!over_budget()) return false;
    if (opt.soft_budget) {
      result.budget_exhausted = true;
      return true;
    }
    throw BudgetExceededError("listing budget of " + std::to_string(budget) + " steps exceeded");
  };

  bool stopped = false;
  for (u32 i = 0; i < g.n() && !stopped; ++i) {
    u32 v = order.vertex_at(i);
    allowed[v] = true;
    ws.extract(g, v, k, allowed, result.counters.steps);
    u64 ball_edges = ws.lg.edge_count();
    if (order.rank(v) != i) throw InternalError("rank bookkeeping broken");
    if (g.degree(v) <= result.delta)
      result.counters.edges_below_delta += ball_edges;
    else
      result.counters.edges_above_delta += ball_edges;
    if (handle_budget()) break;
    u32 vloc = 0;  // source is local 0 by construction
    if (ws.lg.nv < static_cast<u32>(2 * k)) continue;
    if (ws.lg.offsets[vloc + 1] - ws.lg.offsets[vloc] < 2) continue;
    colors.resize(ws.lg.nv);
    for (u64 round = 0; round < result.r && !stopped; ++round) {
      SplitMix64 stream(derive_stream(cfg.seed, i, round));
      for (u32 idx : ws.order_sorted)
        colors[idx] = static_cast<u8>(stream.below(2 * static_cast<u64>(k)));
      colorful_cycles_core(ws.lg, vloc, colors, k, cs, result.counters.steps,
                           [&](const Cycle& c) {
                             auto it = found.lower_bound(c);
                             if (it != found.end() && it->first == c) return;
                             if (!c.is_cycle_of(g))
                               throw InternalError("emitted sequence failed adjacency check");
                             found.emplace_hint(it, c, i);
                           });
      if (opt.stop_on_first && !found.empty()) {
        stopped = true;
        break;
      }
      if (handle_budget()) {
        stopped = true;
        break;
      }
    }
  }

  result.cycles.reserve(found.size());
  result.first_found_rank.reserve(found.size());
  for (auto& [cycle, iter] : found) {
    result.cycles.push_back(cycle);
    result.first_found_rank.push_back(iter);
  }
  return result;
}

}  // namespace detail

/// Exactly the 2k-cycles through v in gi whose vertices receive pairwise
/// distinct colors. The whole of gi is searched.
inline std::set<Cycle> list_colorful_cycles_through(const Graph& gi, u32 v,
                                                    const ColorAssignment& coloring, int k) {
  if (v >= gi.n()) throw OutOfRangeError("vertex out of range");
  if (coloring.color.size() < gi.n()) throw InvalidArgumentError("coloring not total");
  for (u32 u = 0; u < gi.n(); ++u)
    if (coloring.color[u] >= 2 * k) throw InvalidArgumentError("color out of range");
  detail::LocalGraph lg;
  lg.nv = gi.n();
  lg.offsets.assign(gi.n() + 1, 0);
  lg.global.resize(gi.n());
  for (u32 u = 0; u < gi.n(); ++u) {
    lg.global[u] = u;
    lg.offsets[u + 1] = lg.offsets[u] + gi.degree(u);
  }
  lg.adj.reserve(2 * gi.m());
  for (u32 u = 0; u < gi.n(); ++u)
    for (u32 w : gi.neighbors(u)) lg.adj.push_back(w);
  detail::ColorfulSearch cs;
  u64 steps = 0;
  std::set<Cycle> out;
  detail::colorful_cycles_core(lg, v, coloring.color, k, cs, steps, [&](const Cycle& c) {
    if (!c.is_cycle_of(gi)) throw InternalError("emitted sequence failed adjacency check");
    out.insert(c);
  });
  return out;
}

/// Color-coding lister: iterates vertices in ≻ order, searches G_i with r
/// independent colorings each, and unions canonical cycles. Sound always;
/// complete with probability at least 1-ε.
inline ListingResult list_c2k(const Graph& g, const ListingConfig& cfg) {
  return detail::run_listing(g, cfg, {});
}

struct DetectResult {
  std::optional<Cycle> cycle;
  bool budget_exhausted = false;
  WorkCounters counters;
  u64 r = 0;
  u64 budget = 0;
};

/// Detection at Δ = ⌈m^{2/(k+1)}⌉ with a hard step budget; a none return is
/// correct with probability at least 1-ε.
inline DetectResult detect_c2k(const Graph& g, int k, u64 seed) {
  ListingConfig cfg;
  cfg.k = k;
  cfg.seed = seed;
  cfg.epsilon = Rat(1, 1000000000);
  DetectResult out;
  if (g.m() > 0) {
    Int walk_bound = ceil_pow_frac(Int(g.m()), 2 * static_cast<unsigned long>(k),
                                   static_cast<unsigned long>(k) + 1);
    u64 polylog = 1;
    u64 base = 1 + ceil_log2(std::max<u64>(g.n(), 2));
    for (int i = 0; i < 2 * k + 2; ++i) polylog = saturating_mul(polylog, base);
    out.budget = saturating_mul(64, saturating_mul(to_u64_saturating(walk_bound), polylog));
    cfg.delta = to_u64_saturating(ceil_pow_frac(Int(g.m()), 2, static_cast<unsigned long>(k) + 1));
    cfg.budget = out.budget;
  }
  detail::EngineOptions opt;
  opt.stop_on_first = true;
  opt.soft_budget = true;
  ListingResult r = detail::run_listing(g, cfg, opt);
  out.budget_exhausted = r.budget_exhausted;
  out.counters = r.counters;
  out.r = r.r;
  if (!r.cycles.empty()) out.cycle = r.cycles.front();
  return out;
}

/// Hexagon lister at the Δ = ⌈m^{2/5}⌉ operating point.
inline ListingResult list_c6(const Graph& g, u64 seed, const Rat& eps) {
  ListingConfig cfg;
  cfg.k = 3;
  cfg.seed = seed;
  cfg.epsilon = eps;
  cfg.delta = to_u64_saturating(ceil_pow_frac(Int(g.m()), 2, 5));
  return list_c2k(g, cfg);
}

struct ExactCountResult {
  u64 cycles = 0;  // t
  WorkCounters counters;
  u64 delta = 0;
};

/// Deterministic exact 2k-cycle count: per ≻-maximal vertex, enumerate simple
/// k-paths in G_i and join endpoint-matched pairs with disjoint interiors.
/// Work counters use the same Σ|E(G_i)| split as the lister.
inline ExactCountResult count_c2k_exact(const Graph& g, int k, std::optional<u64> delta_opt = {},
                                        u64 budget = std::numeric_limits<u64>::max()) {
  if (k < 2) throw InvalidArgumentError("k must be at least 2");
  ExactCountResult result;
  result.delta =
      delta_opt ? *delta_opt : to_u64_saturating(ceil_pow_frac(Int(g.m()), 2, k + 1));
  if (g.n() < static_cast<u32>(2 * k) || g.m() == 0) return result;
  DegreeOrder order(g);
  std::vector<bool> allowed(g.n(), false);
  detail::BallWorkspace ws;
  ws.init(g.n());
  std::vector<u32> path;
  std::vector<bool> on_path;
  // paths bucketed by endpoint: flattened interiors, k-1 entries each
  std::vector<std::vector<u32>> interiors;
  auto step = [&] {
    if (++result.counters.steps > budget)
      throw BudgetExceededError("exact count budget exceeded");
  };
  for (u32 i = 0; i < g.n(); ++i) {
    u32 v = order.vertex_at(i);
    allowed[v] = true;
    ws.extract(g, v, k, allowed, result.counters.steps);
    u64 ball_edges = ws.lg.edge_count();
    if (g.degree(v) <= result.delta)
      result.counters.edges_below_delta += ball_edges;
    else
      result.counters.edges_above_delta += ball_edges;
    if (ws.lg.nv < static_cast<u32>(2 * k)) continue;
    const auto& lg = ws.lg;
    interiors.assign(lg.nv, {});
    on_path.assign(lg.nv, false);
    path.clear();
    on_path[0] = true;
    // DFS over simple paths of length k from local vertex 0
    auto dfs = [&](auto&& self, u32 u, int depth) -> void {
      if (depth == k) {
        interiors[u].insert(interiors[u].end(), path.begin(), path.end());
        return;
      }
      for (u32 idx = lg.offsets[u]; idx < lg.offsets[u + 1]; ++idx) {
        u32 w = lg.adj[idx];
        step();
        if (on_path[w] || w == 0) continue;
        if (depth < k - 1) path.push_back(w);
        on_path[w] = true;
        self(self, w, depth + 1);
        if (depth < k - 1) path.pop_back();
        on_path[w] = false;
      }
    };
    dfs(dfs, 0, 0);
    u32 interior_len = static_cast<u32>(k - 1);
    for (u32 w = 1; w < lg.nv; ++w) {
      u64 cnt = interiors[w].size() / interior_len;
      if (cnt < 2) continue;
      for (u64 a = 0; a < cnt; ++a)
        for (u64 b = a + 1; b < cnt; ++b) {
          step();
          bool disjoint = true;
          for (u32 x = 0; x < interior_len && disjoint; ++x)
            for (u32 y = 0; y < interior_len && disjoint; ++y)
              if (interiors[w][a * interior_len + x] == interiors[w][b * interior_len + y])
                disjoint = false;
          if (disjoint) ++result.cycles;
        }
    }
  }
  return result;
}

}  // namespace evencycle
