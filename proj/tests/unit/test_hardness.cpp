#include "doctest.h"

#include "hgraph/generators.hpp"
#include "hgraph/hardness.hpp"
#include "hgraph/interval.hpp"
#include "hgraph/oracle.hpp"

using namespace hgraph;

TEST_CASE("two-track scan") {
  Graph one_edge(2, {{0, 1}});
  auto split = is_two_track_bruteforce(one_edge);
  REQUIRE(split.has_value());
  CHECK(split->track1.size() + split->track2.size() >= 1);

  // caterpillar forests are interval, so one track is enough
  Graph cat = path_graph(5);
  CHECK(is_two_track_bruteforce(cat).has_value());

  // the subdivided claw is a tree but not interval; a split is still found
  Graph spider(7);
  spider.add_edge(0, 1);
  spider.add_edge(0, 2);
  spider.add_edge(0, 3);
  spider.add_edge(1, 4);
  spider.add_edge(2, 5);
  spider.add_edge(3, 6);
  CHECK(!recognize_interval(spider).has_value());
  auto sp = is_two_track_bruteforce(spider);
  REQUIRE(sp.has_value());

  CHECK(is_two_track_bruteforce(cycle_graph(6)).has_value());
  CHECK_THROWS_AS(is_two_track_bruteforce(complete_graph(3)), ContractViolation);
}

TEST_CASE("splits really consist of interval tracks covering the edges") {
  for (int seed = 0; seed < 30; ++seed) {
    // random bipartite graph on 3+3
    Graph g(6);
    std::uint64_t bits = 0x9E3779B97F4A7C15ull * (seed + 1);
    for (int u = 0; u < 3; ++u)
      for (int v = 3; v < 6; ++v)
        if ((bits >>= 1) & 1) g.add_edge(u, v);
    auto split = is_two_track_bruteforce(g);
    if (!split) continue;
    Graph t1(g.n()), t2(g.n());
    for (auto [u, v] : split->track1) t1.add_edge(u, v);
    for (auto [u, v] : split->track2) t2.add_edge(u, v);
    CHECK(recognize_interval(t1).has_value());
    CHECK(recognize_interval(t2).has_value());
    for (auto [u, v] : g.edges())
      CHECK((t1.has_edge(u, v) || t2.has_edge(u, v)));
  }
}

TEST_CASE("butterfly gadget counts") {
  Graph one_edge(2, {{0, 1}});
  Graph gp = butterfly_gadget(one_edge);
  CHECK(gp.n() == 12);
  CHECK(gp.edge_count() == 27);

  Graph p3 = path_graph(3);
  Graph gp3 = butterfly_gadget(p3);
  CHECK(gp3.n() == 14);
  // each w vertex sees exactly one original vertex
  for (int e = 0; e < 2; ++e) {
    int w = 3 + e;
    int cnt = 0;
    for (int v = 0; v < 3; ++v)
      if (gp3.has_edge(w, v)) ++cnt;
    CHECK(cnt == 1);
  }

  // closed-form counts for C4
  Graph c4 = cycle_graph(4);
  Graph gc = butterfly_gadget(c4);
  int n = 4, m = 4;
  CHECK(gc.n() == n + m + 9);
  int expect_edges = n * (n - 1) / 2 + 8 + m * (n - 2) + 9 * n;
  CHECK(gc.edge_count() == expect_edges);

  // w-vertices form an independent set
  for (int e1 = 0; e1 < m; ++e1)
    for (int e2 = e1 + 1; e2 < m; ++e2) CHECK(!gc.has_edge(n + e1, n + e2));
}

TEST_CASE("butterfly model construction verifies") {
  Graph one_edge(2, {{0, 1}});
  auto s1 = is_two_track_bruteforce(one_edge);
  REQUIRE(s1.has_value());
  CHECK_NOTHROW(build_butterfly_model_from_tracks(one_edge, s1->track1, s1->track2));

  Graph p3 = path_graph(3);
  CHECK_NOTHROW(build_butterfly_model_from_tracks(p3, p3.edges(), {}));

  Graph c4 = cycle_graph(4);
  auto sc = is_two_track_bruteforce(c4);
  REQUIRE(sc.has_value());
  CHECK_NOTHROW(build_butterfly_model_from_tracks(c4, sc->track1, sc->track2));
}

TEST_CASE("two-cycle gadget") {
  Graph g = path_graph(3);

  // the butterfly host itself
  auto bf = general_two_cycle_gadget(butterfly_graph(), g);
  CHECK(bf.h_prime_n == 5 + 4 * 6);
  CHECK(verify_model(bf.x_graph, bf.x_model).ok);
  CHECK(bf.g_prime.n() == 3 + 2 + bf.h_prime_n);

  // two disjoint triangles joined by a path
  Graph h(7);
  h.add_edge(0, 1);
  h.add_edge(1, 2);
  h.add_edge(0, 2);
  h.add_edge(2, 3);
  h.add_edge(3, 4);
  h.add_edge(4, 5);
  h.add_edge(5, 6);
  h.add_edge(4, 6);
  auto tj = general_two_cycle_gadget(h, g);
  CHECK(tj.h_prime_n == h.n() + 4 * h.edge_count());
  CHECK(verify_model(tj.x_graph, tj.x_model).ok);

  // theta: two cycles sharing a path
  Graph theta(4);
  theta.add_edge(0, 1);
  theta.add_edge(1, 2);
  theta.add_edge(2, 3);
  theta.add_edge(3, 0);
  theta.add_edge(1, 3);
  auto th = general_two_cycle_gadget(theta, g);
  CHECK(verify_model(th.x_graph, th.x_model).ok);

  // a tree has no cycle pair
  CHECK_THROWS_AS(general_two_cycle_gadget(path_graph(4), g), ContractViolation);
}
