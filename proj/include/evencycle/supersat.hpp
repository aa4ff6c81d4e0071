#pragma once

#include <array>
#include <optional>
#include <vector>

#include "evencycle/generate.hpp"
#include "evencycle/graph.hpp"
#include "evencycle/oracle.hpp"
#include "evencycle/rational.hpp"

namespace evencycle {

/// Bipartite extremal threshold: true iff m > 100k(L + R + (LR)^{(k+1)/(2k)}),
/// decided exactly by cross-multiplied integer powers.
inline bool extremal_hypothesis(u64 l, u64 r, u64 m, int k) {
  if (l < 1 || r < 1 || k < 2) throw InvalidArgumentError("need L,R >= 1 and k >= 2");
  Int c(100 * static_cast<unsigned long>(k));
  Int residual = Int(static_cast<unsigned long>(m)) -
                 c * (Int(static_cast<unsigned long>(l)) + Int(static_cast<unsigned long>(r)));
  if (residual <= 0) return false;
  // residual > 100k (LR)^{(k+1)/(2k)}  <=>  residual^{2k} > (100k)^{2k} (LR)^{k+1}
  Int lr = Int(static_cast<unsigned long>(l)) * Int(static_cast<unsigned long>(r));
  return int_pow(residual, 2 * static_cast<unsigned long>(k)) >
         int_pow(c, 2 * static_cast<unsigned long>(k)) *
             int_pow(lr, static_cast<unsigned long>(k) + 1);
}

struct PeeledSets {
  std::vector<u32> b1, a1, b2;
};

/// The three at-least-average-degree restrictions used by the 4-path
/// supersaturation proof. Guarantees e(A,B1) >= e/2, e(A1,B1) >= e/4,
/// e(A1,B2) >= e/8 with e = e(A,B).
inline PeeledSets peel_sets(const Graph& g, const std::vector<u32>& a, const std::vector<u32>& b) {
  auto in_a = membership(g.n(), a);
  auto in_b = membership(g.n(), b);
  for (u32 v = 0; v < g.n(); ++v)
    if (in_a[v] && in_b[v]) throw SetsOverlapError("A and B overlap at " + std::to_string(v));
  auto deg_into = [&](u32 v, const std::vector<bool>& set) {
    u64 d = 0;
    for (u32 w : g.neighbors(v))
      if (set[w]) ++d;
    return d;
  };
  u64 e_ab = count_edges_between(g, in_a, in_b);
  if (e_ab == 0) throw NoEdgesError("no edges between A and B");

  PeeledSets out;
  for (u32 v : b)
    if (2 * b.size() * deg_into(v, in_a) >= e_ab) out.b1.push_back(v);
  auto in_b1 = membership(g.n(), out.b1);
  u64 e_ab1 = count_edges_between(g, in_a, in_b1);
  for (u32 v : a)
    if (2 * a.size() * deg_into(v, in_b1) >= e_ab1) out.a1.push_back(v);
  auto in_a1 = membership(g.n(), out.a1);
  u64 e_a1b1 = count_edges_between(g, in_a1, in_b1);
  for (u32 v : out.b1)
    if (2 * out.b1.size() * deg_into(v, in_a1) >= e_a1b1) out.b2.push_back(v);
  return out;
}

/// 2-path supersaturation bound m^2/(2R); inapplicable below m = 2R.
inline std::optional<Rat> p2_lower_bound(u64 l, u64 r, u64 m) {
  (void)l;
  if (m < 2 * r) return std::nullopt;
  Rat bound(Int(static_cast<unsigned long>(m)) * static_cast<unsigned long>(m),
            Int(2) * static_cast<unsigned long>(r));
  bound.canonicalize();
  return bound;
}

struct P4Bound {
  bool applicable = false;          // m >= 50(|A|+|B|)
  Rat value;                        // the explicit walk-generation product
  std::array<Rat, 4> factors;       // m/8, m/(8|B1|)-1, m/(4|A|)-1, m/(2|B|)-2
  u64 b1_size = 0;
  u64 edges = 0;
};

/// 4-path supersaturation: the proof's explicit product evaluated with the
/// actual peeled set sizes, as an exact rational.
inline P4Bound p4_lower_bound(const Graph& g, const std::vector<u32>& a,
                              const std::vector<u32>& b) {
  auto peeled = peel_sets(g, a, b);  // raises NoEdges / SetsOverlap
  P4Bound out;
  out.b1_size = peeled.b1.size();
  out.edges = count_edges_between(g, membership(g.n(), a), membership(g.n(), b));
  Rat m(static_cast<unsigned long>(out.edges));
  out.applicable = out.edges >= 50 * (a.size() + b.size());
  out.factors[0] = m / 8;
  out.factors[1] = m / Rat(8 * Int(static_cast<unsigned long>(out.b1_size))) - 1;
  out.factors[2] = m / Rat(4 * Int(static_cast<unsigned long>(a.size()))) - 1;
  out.factors[3] = m / Rat(2 * Int(static_cast<unsigned long>(b.size()))) - 2;
  out.value = out.factors[0] * out.factors[1] * out.factors[2] * out.factors[3];
  out.value.canonicalize();
  return out;
}

/// Hypothesis of the partial hexagon supersaturation bound:
/// m / ⌈log2(L+R)⌉^10 > L + R + (LR)^{2/3}, decided exactly.
inline bool partialsupersat_hypothesis(u64 l, u64 r, u64 m) {
  if (l < 1 || r < 1) throw InvalidArgumentError("parts must be non-empty");
  Int c = int_pow(Int(static_cast<unsigned long>(ceil_log2(std::max<u64>(l + r, 2)))), 10);
  Int q = Int(static_cast<unsigned long>(m)) -
          c * (Int(static_cast<unsigned long>(l)) + Int(static_cast<unsigned long>(r)));
  if (q <= 0) return false;
  Int lr = Int(static_cast<unsigned long>(l)) * Int(static_cast<unsigned long>(r));
  return int_pow(q, 3) > int_pow(c, 3) * int_pow(lr, 2);
}

struct PartialSupersatBound {
  Rat d_l, d_r;
  Rat value;        // d_R^3 d_L^3 min(1, d_R^3/L, d_L^2 d_R^2/L^2) / ⌈log2 n⌉^70
  bool hypothesis;  // m/⌈log2(L+R)⌉^10 > L+R+(LR)^{2/3}
};

/// Right-hand side of the partial hexagon supersaturation bound with the
/// hidden constant set to 1; reported "up to the hidden constant".
inline PartialSupersatBound partialsupersat_rhs(u64 l, u64 r, u64 m, u64 n) {
  if (l > r) throw InvalidArgumentError("requires L <= R");
  if (l < 100) throw InvalidArgumentError("requires L >= 100");
  PartialSupersatBound out;
  out.d_l = Rat(static_cast<unsigned long>(m), static_cast<unsigned long>(l));
  out.d_r = Rat(static_cast<unsigned long>(m), static_cast<unsigned long>(r));
  out.d_l.canonicalize();
  out.d_r.canonicalize();
  Rat dr3 = rat_pow(out.d_r, 3);
  Rat main = dr3 * rat_pow(out.d_l, 3);
  Rat term2 = dr3 / Rat(static_cast<unsigned long>(l));
  Rat term3 = rat_pow(out.d_l, 2) * rat_pow(out.d_r, 2) /
              Rat(Int(static_cast<unsigned long>(l)) * static_cast<unsigned long>(l));
  Rat min_term = Rat(1);
  if (term2 < min_term) min_term = term2;
  if (term3 < min_term) min_term = term3;
  Int log70 = int_pow(Int(static_cast<unsigned long>(ceil_log2(std::max<u64>(n, 2)))), 70);
  out.value = main * min_term / Rat(log70);
  out.value.canonicalize();
  out.hypothesis = partialsupersat_hypothesis(l, r, m);
  return out;
}

/// Hypothesis of the non-disjoint supersaturation variant:
/// m >= 200⌈log2 n⌉^10 · max(R·L^{1/3}, L·√R) with L <= R, decided exactly.
inline bool disjointpartialsupersat_hypothesis(u64 l_in, u64 r_in, u64 m, u64 n) {
  u64 l = std::min(l_in, r_in), r = std::max(l_in, r_in);
  if (l < 1) throw InvalidArgumentError("parts must be non-empty");
  Int c = 200 * int_pow(Int(static_cast<unsigned long>(ceil_log2(std::max<u64>(n, 2)))), 10);
  Int mi(static_cast<unsigned long>(m));
  Int li(static_cast<unsigned long>(l)), ri(static_cast<unsigned long>(r));
  // m >= c·R·L^{1/3}  <=>  m^3 >= c^3 R^3 L;  m >= c·L·√R  <=>  m^2 >= c^2 L^2 R
  bool first = int_pow(mi, 3) >= int_pow(c * ri, 3) * li;
  bool second = int_pow(mi, 2) >= int_pow(c * li, 2) * ri;
  return first && second;
}

struct SupersatHypothesisFlags {
  bool extremal = false;
  bool partial = false;
  bool disjoint = false;
};

struct SupersatReport {
  u64 l = 0, r = 0, m = 0, n = 0;
  int k = 3;
  std::optional<u64> t_exact;
  Rat bound_conjecture;                      // m^{2k} / (L^k R^k)
  std::optional<Rat> bound_partial;          // k = 3, 100 <= L <= R only
  Rat ratio;                                 // t L^k R^k / m^{2k}
  SupersatHypothesisFlags flags;
};

struct ExperimentParams {
  u64 l = 0, r = 0;
  std::optional<Rat> edge_prob;  // exactly one of edge_prob / m
  std::optional<u64> m;
  int k = 3;
  u32 trials = 1;
  u64 seed = 0;
  u64 oracle_budget = 400'000'000ULL;
  u32 max_oracle_n = 80;  // above this, t is reported as not computed
};

inline SupersatReport supersat_report_for(const Graph& g, u64 l, u64 r, int k,
                                          std::optional<u64> t) {
  SupersatReport rep;
  rep.l = l;
  rep.r = r;
  rep.m = g.m();
  rep.n = l + r;
  rep.k = k;
  rep.t_exact = t;
  unsigned long uk = static_cast<unsigned long>(k);
  Int lk = int_pow(Int(static_cast<unsigned long>(l)), uk);
  Int rk = int_pow(Int(static_cast<unsigned long>(r)), uk);
  Int m2k = int_pow(Int(static_cast<unsigned long>(g.m())), 2 * uk);
  if (g.m() > 0) {
    rep.bound_conjecture = Rat(m2k, lk * rk);
    rep.bound_conjecture.canonicalize();
  }
  if (t && g.m() > 0) {
    rep.ratio = Rat(Int(static_cast<unsigned long>(*t)) * lk * rk, m2k);
    rep.ratio.canonicalize();
  }
  if (k == 3 && l >= 100 && l <= r)
    rep.bound_partial = partialsupersat_rhs(l, r, g.m(), rep.n).value;
  rep.flags.extremal = extremal_hypothesis(l, r, g.m(), k);
  rep.flags.partial = partialsupersat_hypothesis(l, r, g.m());
  rep.flags.disjoint = disjointpartialsupersat_hypothesis(l, r, g.m(), rep.n);
  return rep;
}

/// Seeded random bipartite trials: oracle-exact t against the conjectured and
/// proved lower-bound shapes.
inline std::vector<SupersatReport> supersat_experiment(const ExperimentParams& params) {
  if (params.l < 1 || params.r < 1) throw InvalidArgumentError("parts must be non-empty");
  if (params.edge_prob.has_value() == params.m.has_value())
    throw InvalidArgumentError("give exactly one of edge_prob and m");
  std::vector<SupersatReport> reports;
  for (u32 trial = 0; trial < params.trials; ++trial) {
    u64 trial_seed = derive_stream(params.seed, 0xe4be71ULL, trial);
    Graph g = params.edge_prob
                  ? random_bipartite_graph_p(static_cast<u32>(params.l),
                                             static_cast<u32>(params.r), *params.edge_prob,
                                             trial_seed)
                  : random_bipartite_graph(static_cast<u32>(params.l),
                                           static_cast<u32>(params.r), *params.m, trial_seed);
    std::optional<u64> t;
    if (params.l + params.r <= params.max_oracle_n)
      t = oracle::enumerate_cycles(g, params.k, params.oracle_budget).size();
    reports.push_back(supersat_report_for(g, params.l, params.r, params.k, t));
  }
  return reports;
}

}  // namespace evencycle
