#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "evencycle/listing.hpp"
#include "evencycle/oracle.hpp"

using namespace evencycle;

namespace {

std::set<Cycle> as_set(const std::vector<Cycle>& cycles) {
  return {cycles.begin(), cycles.end()};
}

ListingConfig config_for(int k, u64 seed) {
  ListingConfig cfg;
  cfg.k = k;
  cfg.seed = seed;
  cfg.epsilon = Rat(1, 1000000000);
  return cfg;
}

}  // namespace

TEST_CASE("repetition count") {
  CHECK(repetitions_for(3, 6, Rat(1, 1000000000)) == 2024);
  CHECK(repetitions_for(2, 40, Rat(1, 1000000000)) == 361);
  CHECK(repetitions_for(3, 40, Rat(1, 1000000000)) == 2756);
  CHECK(repetitions_for(2, 10, Rat(1, 2)) >= 1);
  CHECK_THROWS_AS(repetitions_for(3, 10, Rat(2)), InvalidArgumentError);
  CHECK_THROWS_AS(repetitions_for(3, 10, Rat(0)), InvalidArgumentError);
}

TEST_CASE("colorful cycle search") {
  Graph c6 = cycle_graph(6);
  ColorAssignment rainbow{{0, 1, 2, 3, 4, 5}};
  auto found = list_colorful_cycles_through(c6, 5, rainbow, 3);
  CHECK(found.size() == 1);
  CHECK(found.begin()->is_cycle_of(c6));

  ColorAssignment clash{{0, 0, 2, 3, 4, 5}};
  CHECK(list_colorful_cycles_through(c6, 5, clash, 3).empty());
}

TEST_CASE("colorful search equals the color-filtered oracle") {
  Graph k33 = complete_bipartite(3, 3);
  ColorAssignment coloring{{0, 3, 1, 4, 2, 5}};
  for (u32 v = 0; v < k33.n(); ++v) {
    auto dp_result = list_colorful_cycles_through(k33, v, coloring, 3);
    std::set<Cycle> expected;
    for (const auto& c : oracle::enumerate_cycles(k33, 3)) {
      bool through_v = false;
      std::set<u8> colors;
      for (u32 u : c.v) {
        through_v |= u == v;
        colors.insert(coloring.color[u]);
      }
      if (through_v && colors.size() == c.v.size()) expected.insert(c);
    }
    CHECK(dp_result == expected);
  }
}

TEST_CASE("list_c2k on named instances") {
  CHECK(list_c2k(cycle_graph(6), config_for(3, 7)).cycles.size() == 1);
  CHECK(list_c2k(complete_graph(4), config_for(2, 7)).cycles.size() == 3);
  CHECK(list_c2k(cycle_graph(7), config_for(3, 7)).cycles.empty());
  CHECK(list_c2k(Graph::from_edges(0, {}), config_for(3, 7)).cycles.empty());

  Graph g = random_graph(30, 90, 12345);
  auto result = list_c2k(g, config_for(3, 99));
  CHECK(as_set(result.cycles) == oracle::enumerate_cycles(g, 3));
  for (const auto& c : result.cycles) CHECK(c.is_cycle_of(g));
}

TEST_CASE("listing equals the oracle on a corpus slice") {
  for (std::size_t idx = 0; idx < 12; ++idx) {
    const Graph& g = corpus::listing_corpus()[idx];
    for (int k : {2, 3}) {
      auto result = list_c2k(g, config_for(k, 1000 + idx));
      CHECK(as_set(result.cycles) == oracle::enumerate_cycles(g, k));
    }
  }
}

TEST_CASE("no duplicates and deterministic output") {
  Graph g = complete_bipartite(3, 4);
  auto r1 = list_c2k(g, config_for(3, 5));
  auto r2 = list_c2k(g, config_for(3, 5));
  CHECK(r1.cycles == r2.cycles);
  CHECK(r1.counters.steps == r2.counters.steps);
  CHECK(std::is_sorted(r1.cycles.begin(), r1.cycles.end()));
  CHECK(std::adjacent_find(r1.cycles.begin(), r1.cycles.end()) == r1.cycles.end());
  auto r3 = list_c2k(g, config_for(3, 6));  // different seed, same set
  CHECK(r1.cycles == r3.cycles);
}

TEST_CASE("a cycle is found exactly at the rank of its top vertex") {
  Graph g = random_graph(24, 70, 777);
  DegreeOrder ord(g);
  auto result = list_c2k(g, config_for(3, 31337));
  REQUIRE_FALSE(result.cycles.empty());
  for (std::size_t i = 0; i < result.cycles.size(); ++i) {
    u32 max_rank = 0;
    for (u32 v : result.cycles[i].v) max_rank = std::max(max_rank, ord.rank(v));
    CHECK(result.first_found_rank[i] == max_rank);
  }
}

TEST_CASE("edge work is bounded by capped walks of length up to k") {
  // Each subgraph edge maps injectively to a capped walk from v_i: the
  // canonical shortest path to the nearer endpoint plus the edge. These walks
  // have length between 1 and k, so the bound sums capped j-walks over
  // j = 1..k. (Length-k alone is not enough: on the path 0-1-2 with k = 2,
  // the top vertex owns two subgraph edges but starts no capped 2-walk.)
  for (std::size_t idx = 0; idx < 10; ++idx) {
    const Graph& g = corpus::listing_corpus()[idx];
    if (g.m() == 0) continue;
    DegreeOrder ord(g);
    for (int k : {2, 3}) {
      std::vector<bool> allowed(g.n(), false);
      u128 ball_total = 0, capped_total = 0;
      for (u32 i = 0; i < g.n(); ++i) {
        u32 v = ord.vertex_at(i);
        allowed[v] = true;
        u64 ball_edges = restricted_bfs_subgraph(g, v, k, allowed).m();
        u128 capped_up_to_k = 0;
        for (int j = 1; j <= k; ++j)
          capped_up_to_k = checked_add(capped_up_to_k,
                                       oracle::count_capped_k_walks_from(g, j, ord, v));
        CHECK(static_cast<u128>(ball_edges) <= capped_up_to_k);
        ball_total += ball_edges;
        capped_total += capped_up_to_k;
      }
      auto result = list_c2k(g, config_for(k, idx));
      CHECK(result.counters.edges_below_delta + result.counters.edges_above_delta == ball_total);
      CHECK(ball_total <= capped_total);
    }
  }
}

TEST_CASE("the literal length-k counter bound has a pendant-edge counterexample") {
  Graph path = path_graph(3);
  DegreeOrder ord(path);
  u32 center = ord.vertex_at(2);
  CHECK(center == 1);
  std::vector<bool> all(path.n(), true);
  CHECK(restricted_bfs_subgraph(path, center, 2, all).m() == 2);
  CHECK(oracle::count_capped_k_walks_from(path, 2, ord, center) == 0);
}

TEST_CASE("budget exhaustion raises for list and soft-stops for detect") {
  Graph k33 = complete_bipartite(3, 3);
  ListingConfig cfg = config_for(3, 1);
  cfg.budget = 10;
  CHECK_THROWS_AS(list_c2k(k33, cfg), BudgetExceededError);
}

TEST_CASE("detection") {
  CHECK_FALSE(detect_c2k(path_graph(10), 3, 5).cycle.has_value());
  CHECK_FALSE(detect_c2k(cycle_graph(7), 3, 5).cycle.has_value());

  auto found = detect_c2k(cycle_graph(6), 3, 5);
  REQUIRE(found.cycle.has_value());
  CHECK(*found.cycle == *oracle::enumerate_cycles(cycle_graph(6), 3).begin());
  CHECK_FALSE(found.budget_exhausted);

  for (std::size_t idx = 0; idx < 15; ++idx) {
    const Graph& g = corpus::listing_corpus()[idx];
    for (int k : {2, 3}) {
      auto det = detect_c2k(g, k, 33 + idx);
      bool oracle_has = !oracle::enumerate_cycles(g, k).empty();
      CHECK(det.cycle.has_value() == oracle_has);
      if (det.cycle) CHECK(det.cycle->is_cycle_of(g));
    }
  }
}

TEST_CASE("list_c6 wrapper") {
  Rat eps(1, 1000000000);
  CHECK(list_c6(complete_bipartite(3, 3), 7, eps).cycles.size() == 6);
  CHECK(list_c6(cycle_graph(7), 7, eps).cycles.empty());
  Graph heawood = heawood_graph();
  CHECK(as_set(list_c6(heawood, 7, eps).cycles) == oracle::enumerate_cycles(heawood, 3));
  // delta only splits the work counters
  auto a = list_c6(heawood, 7, eps);
  ListingConfig cfg = config_for(3, 7);
  cfg.delta = heawood.n();
  auto b = list_c2k(heawood, cfg);
  CHECK(a.cycles == b.cycles);
  CHECK(a.counters.edges_below_delta + a.counters.edges_above_delta ==
        b.counters.edges_below_delta + b.counters.edges_above_delta);
}

TEST_CASE("deterministic exact counting agrees with the oracle") {
  for (std::size_t idx = 0; idx < 20; ++idx) {
    const Graph& g = corpus::listing_corpus()[idx];
    for (int k : {2, 3})
      CHECK(count_c2k_exact(g, k).cycles == oracle::enumerate_cycles(g, k).size());
  }
  for (auto& [name, g] : corpus::named_instances())
    CHECK(count_c2k_exact(g, 3).cycles == oracle::enumerate_cycles(g, 3).size());
}

TEST_CASE("degenerate inputs produce empty results") {
  Graph empty = Graph::from_edges(0, {});
  CHECK(list_c2k(empty, config_for(3, 1)).cycles.empty());
  CHECK_FALSE(detect_c2k(empty, 3, 1).cycle.has_value());
  Graph edgeless = Graph::from_edges(9, {});
  CHECK(list_c2k(edgeless, config_for(2, 1)).cycles.empty());
  CHECK_FALSE(detect_c2k(edgeless, 2, 1).cycle.has_value());
  CHECK(oracle::enumerate_cycles(edgeless, 2).empty());
}

TEST_CASE("k=4 listing uses the multi-word subset tables correctly") {
  // 2k = 8 colors means 256 subsets, four u64 words per bitset
  Graph c8 = cycle_graph(8);
  auto res = list_c2k(c8, config_for(4, 3));
  CHECK(res.cycles.size() == 1);
  CHECK(as_set(res.cycles) == oracle::enumerate_cycles(c8, 4));

  Graph k44 = complete_bipartite(4, 4);
  auto truth = oracle::enumerate_cycles(k44, 4);
  CHECK(truth.size() == 72);  // choose both sides whole: 4! * 3! / 2 octagons
  CHECK(oracle::enumerate_cycles_edge_anchored(k44, 4) == truth);
  CHECK(as_set(list_c2k(k44, config_for(4, 9)).cycles) == truth);
  CHECK(count_c2k_exact(k44, 4).cycles == truth.size());

  Graph g = random_graph(14, 34, 2026);
  CHECK(as_set(list_c2k(g, config_for(4, 5)).cycles) == oracle::enumerate_cycles(g, 4));
  auto det = detect_c2k(g, 4, 2);
  CHECK(det.cycle.has_value() == !oracle::enumerate_cycles(g, 4).empty());
}
