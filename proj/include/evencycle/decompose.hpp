#pragma once

#include <vector>

#include "evencycle/graph.hpp"
#include "evencycle/oracle.hpp"
#include "evencycle/rational.hpp"

namespace evencycle {

// Dyadic intervals I_n = ({0}, {1}, [2,4), ..., [n'/4,n'/2), [n'/2,n']) where
// n' is the power of two in [n, 2n). Index 0 is the {0} bucket; index j >= 1
// is the j-th interval counting from {1}; the last interval is closed.

inline u32 dyadic_bucket_count(u64 n) {
  u64 np = pow2_at_least(std::max<u64>(n, 1));
  return 1 + std::max<u32>(1, np == 1 ? 1 : floor_log2(np));
}

inline u32 dyadic_index(u64 x, u64 n) {
  if (n == 0) throw InvalidArgumentError("n must be positive");
  u64 np = pow2_at_least(n);
  if (x > np) throw OutOfRangeError("value " + std::to_string(x) + " above n' = " + std::to_string(np));
  if (x == 0) return 0;
  u32 last = std::max<u32>(1, np == 1 ? 1 : floor_log2(np));
  return std::min<u32>(floor_log2(x) + 1, last);
}

/// The layered organization (V*, d*, G', X_1..X_k, d_1..d_k): X_1 ⊆ V*, every
/// v in X_i has |N_{X_{i+1}}(v)| in [d_i/2, d_i] with X_{k+1} = V(G').
struct LayerDecomposition {
  std::vector<u32> v_star;
  u64 d_star = 0;
  Graph g_prime;  // induced on vertices of host degree <= d_star; host ids
  std::vector<std::vector<u32>> layers;
  std::vector<u64> layer_degrees;
};

namespace detail {

// Capped k-walks from start v by dynamic programming over {u : u ≺ v}.
inline u128 capped_walks_from_dp(const Graph& g, int k, const DegreeOrder& order, u32 v) {
  u32 rv = order.rank(v);
  std::vector<u128> cur(g.n(), 0), next(g.n(), 0);
  u128 total = 0;
  for (u32 w : g.neighbors(v))
    if (order.rank(w) < rv) cur[w] = 1;
  for (int t = 1; t < k; ++t) {
    std::fill(next.begin(), next.end(), 0);
    for (u32 x = 0; x < g.n(); ++x) {
      if (cur[x] == 0) continue;
      for (u32 w : g.neighbors(x))
        if (order.rank(w) < rv) next[w] = checked_add(next[w], cur[x]);
    }
    std::swap(cur, next);
  }
  for (u32 x = 0; x < g.n(); ++x) total = checked_add(total, cur[x]);
  return total;
}

}  // namespace detail

inline u128 capped_k_walks_dp(const Graph& g, int k, const DegreeOrder& order) {
  u128 total = 0;
  for (u32 v = 0; v < g.n(); ++v)
    total = checked_add(total, detail::capped_walks_from_dp(g, k, order, v));
  return total;
}

/// Exact walk count over the layer sequence X_1 × X_2 × ... × X_k × V(G'),
/// walking edges of G'.
inline u128 count_layer_walks(const Graph& g, const LayerDecomposition& d, int k) {
  (void)g;
  if (static_cast<std::size_t>(k) != d.layers.size())
    throw InvalidArgumentError("k does not match the decomposition");
  const Graph& gp = d.g_prime;
  std::vector<u128> walks(gp.n(), 0);
  // f_k(v in X_k) counts extensions into X_{k+1} = V(G'): every G'-neighbor.
  std::vector<bool> in_layer = membership(gp.n(), d.layers[k - 1]);
  for (u32 v = 0; v < gp.n(); ++v)
    if (in_layer[v]) walks[v] = gp.degree(v);
  for (int level = k - 1; level >= 1; --level) {
    in_layer = membership(gp.n(), d.layers[level - 1]);
    std::vector<u128> next(gp.n(), 0);
    for (u32 v = 0; v < gp.n(); ++v) {
      if (!in_layer[v]) continue;
      for (u32 w : gp.neighbors(v)) next[v] = checked_add(next[v], walks[w]);
    }
    walks = std::move(next);
  }
  u128 total = 0;
  for (u32 v = 0; v < gp.n(); ++v) total = checked_add(total, walks[v]);
  return total;
}

/// Constructive form of the layered decomposition: every "maximizing" choice
/// in the source construction is computed exactly by walk-count DP, ties
/// broken toward the smallest bucket index.
inline LayerDecomposition layer_decompose(const Graph& g, int k, const DegreeOrder& order) {
  if (k < 1) throw InvalidArgumentError("k must be positive");
  if (g.m() == 0) throw EmptyGraphError("layer decomposition needs at least one edge");
  const u64 n = g.n();
  const u32 last_bucket = dyadic_bucket_count(n) - 1;

  // Stage 1: bucket start vertices by host degree, maximize capped walks.
  u32 best_j = 1;
  u128 best_capped = 0;
  std::vector<u128> bucket_capped(last_bucket + 1, 0);
  for (u32 v = 0; v < g.n(); ++v) {
    u32 j = dyadic_index(g.degree(v), n);
    if (j == 0) continue;
    bucket_capped[j] =
        checked_add(bucket_capped[j], detail::capped_walks_from_dp(g, k, order, v));
  }
  for (u32 j = 1; j <= last_bucket; ++j)
    if (bucket_capped[j] > best_capped) {
      best_capped = bucket_capped[j];
      best_j = j;
    }

  LayerDecomposition dec;
  dec.d_star = u64{1} << best_j;
  for (u32 v = 0; v < g.n(); ++v)
    if (dyadic_index(g.degree(v), n) == best_j) dec.v_star.push_back(v);

  std::vector<std::pair<u32, u32>> prime_edges;
  for (u32 u = 0; u < g.n(); ++u) {
    if (g.degree(u) > dec.d_star) continue;
    for (u32 w : g.neighbors(u))
      if (u < w && g.degree(w) <= dec.d_star) prime_edges.emplace_back(u, w);
  }
  dec.g_prime = Graph::from_edges(g.n(), std::move(prime_edges));
  const Graph& gp = dec.g_prime;
  std::vector<bool> in_gprime(g.n(), false);
  for (u32 v = 0; v < g.n(); ++v) in_gprime[v] = g.degree(v) <= dec.d_star;
  std::vector<bool> in_vstar = membership(g.n(), dec.v_star);

  // Stage 2: build the W chain right-to-left for every bucket tuple
  // (i_k, ..., i_1) in [1, last]^k and keep the tuple maximizing the layered
  // walk count. Tuples iterate lexicographically ascending on (i_k,...,i_1).
  std::vector<u32> tuple(k, 1), best_tuple(k, 1);
  u128 best_walks = 0;
  bool have_best = false;
  std::vector<std::vector<u32>> work_layers(k), best_layers(k);
  while (true) {
    // tuple[t] is i_{k-t}: tuple[0] = i_k, ..., tuple[k-1] = i_1
    std::vector<bool> next_membership(g.n(), false);
    for (int level = k; level >= 1; --level) {
      u32 want = tuple[k - level];
      auto& layer = work_layers[level - 1];
      layer.clear();
      std::vector<bool> cur(g.n(), false);
      for (u32 v = 0; v < g.n(); ++v) {
        if (!in_gprime[v]) continue;
        if (level == 1 && !in_vstar[v]) continue;
        u64 count = 0;
        if (level == k) {
          count = gp.degree(v);
        } else {
          for (u32 w : gp.neighbors(v))
            if (next_membership[w]) ++count;
        }
        if (dyadic_index(count, n) == want) {
          layer.push_back(v);
          cur[v] = true;
        }
      }
      next_membership = std::move(cur);
    }
    LayerDecomposition probe;
    probe.g_prime = gp;
    probe.layers = work_layers;
    u128 walks = count_layer_walks(g, probe, k);
    if (!have_best || walks > best_walks) {
      have_best = true;
      best_walks = walks;
      best_tuple = tuple;
      best_layers = work_layers;
    }
    int pos = k - 1;
    while (pos >= 0 && tuple[pos] == last_bucket) tuple[pos--] = 1;
    if (pos < 0) break;
    ++tuple[pos];
  }

  dec.layers = std::move(best_layers);
  dec.layer_degrees.resize(k);
  for (int level = 1; level <= k; ++level)
    dec.layer_degrees[level - 1] = u64{1} << best_tuple[k - level];
  return dec;
}

/// Empirical form of the two-layer interaction bound: with
/// B = {v : |N_A(v)| in [d/2, d]}, returns d^2·|B| / (|A|·⌊m^{2/(k+1)}⌋) as an
/// exact rational (0 when B is empty).
inline Rat keylem_ratio(const Graph& g, const std::vector<u32>& a, u64 d, int k) {
  if (a.empty()) throw EmptyAError("A must be non-empty");
  if (d == 0) throw InvalidArgumentError("degree window needs d >= 1");
  auto in_a = membership(g.n(), a);
  u64 b_size = 0;
  for (u32 v = 0; v < g.n(); ++v) {
    u64 deg_a = 0;
    for (u32 w : g.neighbors(v))
      if (in_a[w]) ++deg_a;
    if (2 * deg_a >= d && deg_a <= d) ++b_size;
  }
  if (b_size == 0) return Rat(0);
  Int num = Int(static_cast<unsigned long>(d)) * static_cast<unsigned long>(d) *
            static_cast<unsigned long>(b_size);
  Int den = Int(static_cast<unsigned long>(a.size())) *
            floor_pow_frac(Int(static_cast<unsigned long>(g.m())), 2,
                           static_cast<unsigned long>(k) + 1);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// The two exact inequalities tying capped walks to the layered walk count,
/// plus the stored regularity promises, all checked on one instance.
struct DecompositionAudit {
  u128 capped_walks = 0;
  u128 walks_gprime_from_vstar = 0;
  u128 layer_walks = 0;
  u32 log_nprime = 0;
  bool capped_bound_holds = false;  // capped <= (1+log n') * walks from V*
  bool walks_bound_holds = false;   // walks from V* <= (log n')^k * layer walks
  bool regularity_holds = false;
};

inline bool check_regularity(const Graph& g, int k, const LayerDecomposition& d) {
  std::vector<bool> in_vstar = membership(g.n(), d.v_star);
  for (u32 v : d.v_star)
    if (2 * u64{g.degree(v)} < d.d_star || g.degree(v) > d.d_star) return false;
  for (u32 v : d.layers[0])
    if (!in_vstar[v]) return false;
  for (int level = 1; level <= k; ++level) {
    std::vector<bool> next =
        level == k ? std::vector<bool>(g.n(), true) : membership(g.n(), d.layers[level]);
    u64 dl = d.layer_degrees[level - 1];
    for (u32 v : d.layers[level - 1]) {
      u64 count = 0;
      for (u32 w : d.g_prime.neighbors(v))
        if (next[w]) ++count;
      if (2 * count < dl || count > dl) return false;
    }
  }
  return true;
}

inline DecompositionAudit audit_decomposition(const Graph& g, int k, const DegreeOrder& order,
                                              const LayerDecomposition& d) {
  DecompositionAudit audit;
  audit.capped_walks = capped_k_walks_dp(g, k, order);
  audit.walks_gprime_from_vstar =
      oracle::count_k_walks_from_set(d.g_prime, k, membership(g.n(), d.v_star));
  audit.layer_walks = count_layer_walks(g, d, k);
  u64 np = pow2_at_least(std::max<u64>(g.n(), 1));
  audit.log_nprime = np == 1 ? 1 : floor_log2(np);
  audit.capped_bound_holds =
      audit.capped_walks <=
      checked_mul(static_cast<u128>(1) + audit.log_nprime, audit.walks_gprime_from_vstar);
  u128 factor = 1;
  for (int i = 0; i < k; ++i) factor = checked_mul(factor, audit.log_nprime);
  audit.walks_bound_holds =
      audit.walks_gprime_from_vstar <= checked_mul(factor, audit.layer_walks);
  audit.regularity_holds = check_regularity(g, k, d);
  return audit;
}

}  // namespace evencycle
