#include <doctest.h>

#include <queue>
#include <sstream>

#include "corpus.hpp"
#include "evencycle/graph.hpp"
#include "evencycle/oracle.hpp"

using namespace evencycle;

namespace {

Graph load_str(const std::string& text) {
  std::istringstream in(text);
  return Graph::load_edge_list(in);
}

// Independent plain BFS used as the oracle for the subgraph edge rule.
std::vector<u32> bfs_dist(const Graph& g, u32 source, const std::vector<bool>& allowed) {
  std::vector<u32> dist(g.n(), std::numeric_limits<u32>::max());
  std::queue<u32> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    u32 u = q.front();
    q.pop();
    for (u32 w : g.neighbors(u))
      if (allowed[w] && dist[w] == std::numeric_limits<u32>::max()) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

}  // namespace

TEST_CASE("edge list loading") {
  Graph tri = load_str("0 1\n1 2\n2 0\n");
  CHECK(tri.n() == 3);
  CHECK(tri.m() == 3);
  CHECK(tri.validate());

  CHECK_THROWS_AS(load_str("0 1\n1 0\n"), DuplicateEdgeError);
  CHECK_THROWS_AS(load_str("3 3\n"), SelfLoopError);
  CHECK_THROWS_AS(load_str("0 x\n"), ParseError);
  CHECK_THROWS_AS(load_str("1\n"), ParseError);
  CHECK_THROWS_AS(load_str("1 2 3\n"), ParseError);
  CHECK_THROWS_AS(load_str("-1 2\n"), ParseError);

  Graph empty = load_str("");
  CHECK(empty.n() == 0);
  CHECK(empty.m() == 0);
  CHECK(empty.validate());

  // first-line "# N M" header declares n (trailing isolated vertices) and m
  Graph with_header = load_str("# 5 1\n0 1\n");
  CHECK(with_header.n() == 5);
  CHECK(with_header.m() == 1);
  CHECK_THROWS_AS(load_str("# 2 1\n0 3\n"), ParseError);   // declared n too small
  CHECK_THROWS_AS(load_str("# 4 2\n0 1\n"), ParseError);   // declared m mismatch
  CHECK(load_str("# comment, not a header\n0 1\n").n() == 2);

  Graph commented = load_str("# c\n0 1\n\n  \n# more\n1 2\n");
  CHECK(commented.m() == 2);
}

TEST_CASE("save normalizes") {
  Graph g = load_str("2 0\n0 1\n# note\n1 2\n");
  CHECK(g.save_edge_list_string() == "0 1\n0 2\n1 2\n");
  // save/load round trip is idempotent, bit for bit
  std::string once = g.save_edge_list_string();
  CHECK(load_str(once).save_edge_list_string() == once);
}

TEST_CASE("degree order") {
  Graph tri = cycle_graph(3);
  DegreeOrder ord(tri);
  CHECK(ord.rank(0) == 0);  // ties broken by ascending id: 2 above 1 above 0
  CHECK(ord.rank(1) == 1);
  CHECK(ord.rank(2) == 2);

  Graph star = star_graph(3);
  DegreeOrder star_ord(star);
  CHECK(star_ord.rank(0) == star.n() - 1);  // the center is the unique maximum

  Graph path = path_graph(3);
  DegreeOrder path_ord(path);  // degrees 1,2,1: order is 1 above 2 above 0
  CHECK(path_ord.rank(1) == 2);
  CHECK(path_ord.rank(2) == 1);
  CHECK(path_ord.rank(0) == 0);
}

TEST_CASE("degree order is a total order refining degree") {
  for (std::size_t idx = 0; idx < 20; ++idx) {
    const Graph& g = corpus::oracle_corpus()[idx];
    DegreeOrder ord(g);
    std::vector<bool> seen(g.n(), false);
    for (u32 v = 0; v < g.n(); ++v) {
      CHECK(ord.vertex_at(ord.rank(v)) == v);
      CHECK_FALSE(seen[ord.rank(v)]);
      seen[ord.rank(v)] = true;
    }
    for (u32 u = 0; u < g.n(); ++u)
      for (u32 v = u + 1; v < g.n(); ++v) {
        if (g.degree(u) > g.degree(v)) CHECK(ord.rank(u) > ord.rank(v));
        if (g.degree(u) == g.degree(v)) CHECK((ord.rank(u) < ord.rank(v)) == (u < v));
      }
  }
}

TEST_CASE("restricted bfs subgraph examples") {
  Graph c6 = cycle_graph(6);
  std::vector<bool> all(6, true);
  Graph ball = restricted_bfs_subgraph(c6, 5, 3, all);
  CHECK(ball.m() == 6);  // every edge has an endpoint within distance 2 of 5

  Graph star = star_graph(4);
  std::vector<bool> star_all(star.n(), true);
  Graph star_ball = restricted_bfs_subgraph(star, 0, 1, star_all);
  CHECK(star_ball.m() == star.m());

  std::vector<bool> no2(6, true);
  no2[2] = false;
  Graph cut = restricted_bfs_subgraph(c6, 5, 3, no2);
  CHECK(cut.m() == 4);
  CHECK_FALSE(cut.has_edge(1, 2));
  CHECK_FALSE(cut.has_edge(2, 3));
  CHECK(cut.has_edge(0, 1));

  std::vector<bool> not_source(6, true);
  not_source[5] = false;
  CHECK_THROWS_AS(restricted_bfs_subgraph(c6, 5, 3, not_source), SourceNotAllowedError);
}

TEST_CASE("restricted bfs subgraph matches the plain-BFS edge rule") {
  for (std::size_t idx = 0; idx < 25; ++idx) {
    const Graph& g = corpus::oracle_corpus()[idx];
    if (g.n() == 0) continue;
    SplitMix64 rng(derive_stream(0xba11, idx));
    std::vector<bool> allowed(g.n());
    for (u32 v = 0; v < g.n(); ++v) allowed[v] = rng.below(4) != 0;
    u32 source = static_cast<u32>(rng.below(g.n()));
    allowed[source] = true;
    for (int k : {2, 3}) {
      Graph sub = restricted_bfs_subgraph(g, source, k, allowed);
      CHECK(sub.validate());
      auto dist = bfs_dist(g, source, allowed);
      for (u32 u = 0; u < g.n(); ++u)
        for (u32 w : g.neighbors(u)) {
          if (u > w) continue;
          bool expect = allowed[u] && allowed[w] &&
                        std::min(dist[u], dist[w]) <= static_cast<u32>(k - 1);
          CHECK(sub.has_edge(u, w) == expect);
        }
    }
  }
}

TEST_CASE("every cycle through the source survives the bfs restriction") {
  for (std::size_t idx = 0; idx < 30; ++idx) {
    const Graph& g = corpus::oracle_corpus()[idx];
    if (g.n() == 0) continue;
    std::vector<bool> all(g.n(), true);
    for (int k : {2, 3}) {
      auto cycles = oracle::enumerate_cycles(g, k);
      for (const auto& c : cycles) {
        u32 source = c.v.front();
        Graph sub = restricted_bfs_subgraph(g, source, k, all);
        CHECK(c.is_cycle_of(sub));
      }
    }
  }
}

TEST_CASE("vertex set pair caches e(A,B)") {
  Graph g = load_str("0 1\n1 2\n2 0\n2 3\n");
  auto disjoint = VertexSetPair::make(g, {0, 1}, {2, 3});
  CHECK(disjoint.edges_ab == 2);  // (0,2) and (1,2); (2,3) stays inside B
  auto overlapping = VertexSetPair::make(g, {0, 1, 2, 3}, {0, 1, 2, 3});
  CHECK(overlapping.edges_ab == g.m());
  auto dup = VertexSetPair::make(g, {1, 1, 0}, {2, 3, 3});
  CHECK(dup.a == std::vector<u32>{0, 1});
  CHECK(dup.edges_ab == 2);
}

TEST_CASE("random bipartite split") {
  Graph g = load_str("0 1\n1 2\n2 0\n2 3\n");
  auto pair = VertexSetPair::make(g, {0, 1}, {2, 3});
  auto split = random_bipartite_split(g, pair, 1);
  CHECK(split.left == std::vector<u32>{0, 1});
  CHECK(split.right == std::vector<u32>{2, 3});
  CHECK(split.h.m() == pair.edges_ab);  // disjoint parts keep every crossing edge
  CHECK(split.h.validate());

  // one shared edge: both coin outcomes appear across seeds
  Graph e = load_str("0 1\n");
  auto shared = VertexSetPair::make(e, {0, 1}, {0, 1});
  bool kept = false, dropped = false;
  for (u64 seed = 0; seed < 32; ++seed) {
    auto s = random_bipartite_split(e, shared, seed);
    (s.h.m() == 1 ? kept : dropped) = true;
  }
  CHECK(kept);
  CHECK(dropped);
}

TEST_CASE("random bipartite split keeps half the edges on average") {
  const Graph& g = corpus::oracle_corpus()[7];
  REQUIRE(g.m() >= 10);
  std::vector<u32> verts(g.n());
  for (u32 v = 0; v < g.n(); ++v) verts[v] = v;
  auto pair = VertexSetPair::make(g, verts, verts);
  CHECK(pair.edges_ab == g.m());
  double total = 0;
  u64 best = 0;
  for (u64 seed = 0; seed < 200; ++seed) {
    auto split = random_bipartite_split(g, pair, seed);
    if (seed < 64) total += static_cast<double>(split.h.m());
    best = std::max(best, split.h.m());
    for (u32 v : split.left)
      CHECK_FALSE(std::binary_search(split.right.begin(), split.right.end(), v));
  }
  double mean = total / 64.0;
  CHECK(mean >= 0.8 * (static_cast<double>(g.m()) / 2.0));
  CHECK(mean <= 1.2 * (static_cast<double>(g.m()) / 2.0));
  CHECK(best * 2 >= g.m());  // a probabilistic-method witness must exist
}

TEST_CASE("graph invariants hold across the corpus and extractions") {
  for (std::size_t idx = 0; idx < 40; ++idx) {
    const Graph& g = corpus::listing_corpus()[idx];
    CHECK(g.validate());
    if (g.n() == 0 || g.m() == 0) continue;
    std::vector<bool> all(g.n(), true);
    Graph sub = restricted_bfs_subgraph(g, 0, 2, all);
    CHECK(sub.validate());
    u64 deg_sum = 0;
    for (u32 v = 0; v < sub.n(); ++v) deg_sum += sub.degree(v);
    CHECK(deg_sum == 2 * sub.m());
  }
}
