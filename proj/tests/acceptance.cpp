// Acceptance suite: one line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "evencycle/decompose.hpp"
#include "evencycle/listing.hpp"
#include "evencycle/lp.hpp"
#include "evencycle/oracle.hpp"
#include "evencycle/supersat.hpp"

using namespace evencycle;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, double seconds,
            const std::string& detail) {
  std::printf("criterion %d (%s): %s (%.2fs) %s\n", number, name.c_str(),
              pass ? "PASS" : "FAIL", seconds, detail.c_str());
  if (!pass) ++failures;
}

void run(int number, const std::string& name, const std::function<bool(std::string&)>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(number, name, pass, seconds, detail);
}

bool lp_verification(std::string& detail) {
  auto rep = verify_all_cases();
  bool ok = rep.pass && rep.cases.size() == 36;
  const Rat bound(8, 5);
  for (const auto& c : rep.cases) {
    ok = ok && c.status == LpStatus::Optimal && c.certificates_ok && c.routes_agree &&
         c.optimum <= bound && c.enum_optimum && *c.enum_optimum == c.optimum;
  }
  detail = "36 cases, global max " + rat_str(rep.global_max) +
           ", simplex == vertex enumeration, certificates re-verified";
  return ok;
}

bool listing_equivalence(std::string& detail) {
  std::size_t instances = 0;
  for (int k : {2, 3}) {
    std::size_t idx = 0;
    for (const Graph& g : corpus::listing_corpus()) {
      ListingConfig cfg;
      cfg.k = k;
      cfg.seed = 0x5eed0000ULL + idx++;
      auto got = list_c2k(g, cfg);
      std::set<Cycle> got_set(got.cycles.begin(), got.cycles.end());
      if (got_set != oracle::enumerate_cycles(g, k)) {
        detail = "mismatch on corpus instance " + std::to_string(idx - 1) +
                 " at k=" + std::to_string(k);
        return false;
      }
      ++instances;
    }
    for (auto& [name, g] : corpus::named_instances()) {
      ListingConfig cfg;
      cfg.k = k;
      cfg.seed = 0xabcdULL;
      auto got = list_c2k(g, cfg);
      std::set<Cycle> got_set(got.cycles.begin(), got.cycles.end());
      if (got_set != oracle::enumerate_cycles(g, k)) {
        detail = "mismatch on " + name + " at k=" + std::to_string(k);
        return false;
      }
      ++instances;
    }
  }
  detail = std::to_string(instances) + " instance/k runs, output == enumerate_cycles exactly";
  return true;
}

bool detection_correctness(std::string& detail) {
  std::size_t instances = 0;
  for (int k : {2, 3}) {
    std::size_t idx = 0;
    for (const Graph& g : corpus::listing_corpus()) {
      auto det = detect_c2k(g, k, 0xd37ec7ULL + idx++);
      bool oracle_has = !oracle::enumerate_cycles(g, k).empty();
      if (det.cycle.has_value() != oracle_has) {
        detail = "mismatch on corpus instance " + std::to_string(idx - 1);
        return false;
      }
      if (det.cycle && !det.cycle->is_cycle_of(g)) {
        detail = "returned cycle failed adjacency verification";
        return false;
      }
      ++instances;
    }
    for (auto& [name, g] : corpus::named_instances()) {
      auto det = detect_c2k(g, k, 0xd37ec7ULL);
      bool oracle_has = !oracle::enumerate_cycles(g, k).empty();
      if (det.cycle.has_value() != oracle_has || (det.cycle && !det.cycle->is_cycle_of(g))) {
        detail = "mismatch on " + name;
        return false;
      }
      ++instances;
    }
  }
  detail = std::to_string(instances) + " instance/k runs, found-iff-oracle and all verified";
  return true;
}

bool decomposition_inequalities(std::string& detail) {
  std::size_t instances = 0;
  for (int k : {2, 3}) {
    for (const Graph& g : corpus::listing_corpus()) {
      if (g.m() == 0) continue;
      DegreeOrder order(g);
      auto dec = layer_decompose(g, k, order);
      u128 capped = oracle::count_capped_k_walks(g, k, order);
      u128 from_vstar =
          oracle::count_k_walks_from_set(dec.g_prime, k, membership(g.n(), dec.v_star));
      u128 layer = count_layer_walks(g, dec, k);
      u64 np = pow2_at_least(std::max<u64>(g.n(), 1));
      u128 log_np = np == 1 ? 1 : floor_log2(np);
      if (capped > checked_mul(1 + log_np, from_vstar)) {
        detail = "capped bound failed at k=" + std::to_string(k);
        return false;
      }
      u128 factor = 1;
      for (int i = 0; i < k; ++i) factor = checked_mul(factor, log_np);
      if (from_vstar > checked_mul(factor, layer)) {
        detail = "layer bound failed at k=" + std::to_string(k);
        return false;
      }
      if (!check_regularity(g, k, dec)) {
        detail = "regularity failed at k=" + std::to_string(k);
        return false;
      }
      ++instances;
    }
  }
  detail = std::to_string(instances) +
           " decompositions, both exact inequalities and regularity hold (oracle-counted sides)";
  return true;
}

bool path_supersaturation(std::string& detail) {
  std::size_t peel_checks = 0, p2_checks = 0, p4_checks = 0;
  for (const auto& inst : corpus::bipartite_corpus()) {
    if (inst.g.m() == 0) continue;
    auto peeled = peel_sets(inst.g, inst.a, inst.b);
    u64 e = count_edges_between(inst.g, membership(inst.g.n(), inst.a),
                                membership(inst.g.n(), inst.b));
    u64 e_ab1 = count_edges_between(inst.g, membership(inst.g.n(), inst.a),
                                    membership(inst.g.n(), peeled.b1));
    u64 e_a1b1 = count_edges_between(inst.g, membership(inst.g.n(), peeled.a1),
                                     membership(inst.g.n(), peeled.b1));
    u64 e_a1b2 = count_edges_between(inst.g, membership(inst.g.n(), peeled.a1),
                                     membership(inst.g.n(), peeled.b2));
    if (2 * e_ab1 < e || 4 * e_a1b1 < e || 8 * e_a1b2 < e) {
      detail = "peeling guarantee failed";
      return false;
    }
    ++peel_checks;
    auto p2 = p2_lower_bound(inst.a.size(), inst.b.size(), inst.g.m());
    if (p2) {
      u128 actual = oracle::count_2paths(inst.g, inst.a, inst.b);
      if (Rat(int_from_u128(actual)) < *p2) {
        detail = "2-path bound failed";
        return false;
      }
      ++p2_checks;
    }
    auto p4 = p4_lower_bound(inst.g, inst.a, inst.b);
    bool positive = true;
    for (const auto& f : p4.factors) positive &= f > 0;
    if (positive) {
      u64 actual = oracle::count_4paths(inst.g, inst.a, inst.b);
      if (Rat(static_cast<unsigned long>(actual)) < p4.value) {
        detail = "4-path bound failed";
        return false;
      }
      ++p4_checks;
    }
  }
  // closed forms where enumeration is infeasible
  for (u32 side : {100u, 150u}) {
    Graph g = complete_bipartite(side, side);
    std::vector<u32> a, b;
    for (u32 v = 0; v < side; ++v) a.push_back(v);
    for (u32 v = 0; v < side; ++v) b.push_back(side + v);
    auto closed = oracle::complete_bipartite_counts(side, side);
    auto p2 = p2_lower_bound(side, side, g.m());
    if (!p2 || Rat(int_from_u128(closed.two_paths)) < *p2) {
      detail = "closed-form 2-path bound failed";
      return false;
    }
    auto p4 = p4_lower_bound(g, a, b);
    if (!p4.applicable || Rat(int_from_u128(closed.four_paths)) < p4.value) {
      detail = "closed-form 4-path bound failed";
      return false;
    }
    if (side == 100 && p4.value != Rat(16560000)) {
      detail = "frozen K_{100,100} product mismatch";
      return false;
    }
  }
  detail = std::to_string(peel_checks) + " peelings, " + std::to_string(p2_checks) +
           " 2-path and " + std::to_string(p4_checks) +
           " 4-path bounds by enumeration, closed forms at 100/150";
  return true;
}

bool scaling_bench(std::string& detail) {
  std::vector<double> log_m, log_work;
  std::string rows;
  for (u64 m : {4096ULL, 8192ULL, 16384ULL, 32768ULL, 65536ULL, 131072ULL}) {
    u64 n = 2 * m / 6;
    Graph g = random_graph(static_cast<u32>(n), m, derive_stream(0xbe9c4ULL, m));
    auto counts = count_c2k_exact(g, 3);
    u64 work = counts.counters.edges_below_delta + counts.counters.edges_above_delta;
    log_m.push_back(std::log(static_cast<double>(m)));
    log_work.push_back(std::log(static_cast<double>(work)));
    rows += " m=" + std::to_string(m) + ":work=" + std::to_string(work) +
            ",t=" + std::to_string(counts.cycles);
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < log_m.size(); ++i) {
    mx += log_m[i];
    my += log_work[i];
  }
  mx /= static_cast<double>(log_m.size());
  my /= static_cast<double>(log_m.size());
  double num = 0, den = 0;
  for (std::size_t i = 0; i < log_m.size(); ++i) {
    num += (log_m[i] - mx) * (log_work[i] - my);
    den += (log_m[i] - mx) * (log_m[i] - mx);
  }
  double slope = num / den;
  char buf[128];
  std::snprintf(buf, sizeof buf, "slope of log(work - t) vs log m = %.4f (threshold 1.75)%s",
                slope, rows.c_str());
  detail = buf;
  return slope <= 1.75;
}

bool desk_scale_statement(std::string& detail) {
  struct PredicateCase {
    const char* label;
    bool actual;
    bool expected;
  };
  // ten hand-checkable big-integer threshold comparisons
  PredicateCase cases[] = {
      {"extremal(1,1,600,k=2)=false", extremal_hypothesis(1, 1, 600, 2), false},
      {"extremal(1,1,601,k=2)=true", extremal_hypothesis(1, 1, 601, 2), true},
      {"extremal(3,3,9,k=2)=false", extremal_hypothesis(3, 3, 9, 2), false},
      {"extremal(5000,5000,2.01e8,k=2)=true", extremal_hypothesis(5000, 5000, 201000000, 2),
       true},
      {"partial(1,1,3)=false", partialsupersat_hypothesis(1, 1, 3), false},
      {"partial(1,1,4)=true", partialsupersat_hypothesis(1, 1, 4), true},
      {"partial(1000,1000,1e5)=false", partialsupersat_hypothesis(1000, 1000, 100000), false},
      {"disjoint(1,1,200,n=2)=true", disjointpartialsupersat_hypothesis(1, 1, 200, 2), true},
      {"disjoint(1,1,199,n=2)=false", disjointpartialsupersat_hypothesis(1, 1, 199, 2), false},
      {"disjoint(1,4,800,n=2)=true", disjointpartialsupersat_hypothesis(1, 4, 800, 2), true},
  };
  for (const auto& c : cases)
    if (c.actual != c.expected) {
      detail = std::string("predicate mismatch: ") + c.label;
      return false;
    }
  // exploratory ratio report; nothing here asserts the bounds' conclusions
  ExperimentParams params;
  params.l = 12;
  params.r = 12;
  params.edge_prob = Rat(1, 2);
  params.k = 3;
  params.trials = 3;
  params.seed = 7;
  auto rows = supersat_experiment(params);
  std::string ratios;
  for (const auto& row : rows) ratios += " " + rat_str(row.ratio);
  detail = "10/10 hypothesis predicates exact; hypotheses unsatisfiable at desk scale, so only "
           "exploratory ratios are reported:" + ratios;
  return true;
}

}  // namespace

int main() {
  run(1, "lp-verification", lp_verification);
  run(2, "listing-oracle-equivalence", listing_equivalence);
  run(3, "detection-correctness", detection_correctness);
  run(4, "decomposition-inequalities", decomposition_inequalities);
  run(5, "path-supersaturation", path_supersaturation);
  run(6, "scaling-bench", scaling_bench);
  run(7, "desk-scale-statement", desk_scale_statement);
  if (failures == 0) {
    std::printf("acceptance: all 7 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
