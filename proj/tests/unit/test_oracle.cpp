#include "doctest.h"

#include "hgraph/generators.hpp"
#include "hgraph/interval.hpp"
#include "hgraph/oracle.hpp"

using namespace hgraph;

TEST_CASE("subdivision enumeration counts") {
  CHECK(enumerate_subdivisions(complete_graph(2), 1).size() == 2);
  CHECK(enumerate_subdivisions(complete_graph(3), 0).size() == 1);
  CHECK(enumerate_subdivisions(lollipop_host(), 2).size() == 81);
}

TEST_CASE("hmodel brute force basics") {
  // K3 on a triangle
  CHECK(hmodel_bruteforce(complete_graph(3), cycle_graph(3), 1).has_value());

  // the 7-vertex spider is not interval
  Graph spider(7);
  spider.add_edge(0, 1);
  spider.add_edge(0, 2);
  spider.add_edge(0, 3);
  spider.add_edge(1, 4);
  spider.add_edge(2, 5);
  spider.add_edge(3, 6);
  CHECK(!hmodel_bruteforce(spider, complete_graph(2), 3).has_value());
  CHECK(!recognize_interval(spider).has_value());

  // C4 plus a pendant needs the lollipop
  Graph g = cycle_graph(4);
  Graph gp(5, g.edges());
  gp.add_edge(0, 4);
  CHECK(hmodel_bruteforce(gp, lollipop_host(), 2).has_value());
  // K3-host models are exactly circular-arc models; the two oracles agree
  CHECK(hmodel_bruteforce(gp, complete_graph(3), 2).has_value() ==
        ca_bruteforce(gp).has_value());
}

TEST_CASE("oracle models verify") {
  for (int seed = 0; seed < 10; ++seed) {
    Graph g = random_graph(5, 0.4, 606 + seed);
    auto m = hmodel_bruteforce(g, lollipop_host(), 1);
    if (m) CHECK(verify_model(g, *m).ok);
  }
}

TEST_CASE("subdivision monotonicity spot check") {
  for (int seed = 0; seed < 8; ++seed) {
    Graph g = random_graph(5, 0.45, 7100 + seed);
    bool cap1 = hmodel_bruteforce(g, lollipop_host(), 1).has_value();
    bool cap2 = hmodel_bruteforce(g, lollipop_host(), 2).has_value();
    if (cap1) CHECK(cap2);
  }
}

TEST_CASE("interval and ca oracles on small graphs") {
  CHECK(interval_bruteforce(path_graph(5)).has_value());
  CHECK(!interval_bruteforce(cycle_graph(4)).has_value());
  CHECK(ca_bruteforce(cycle_graph(4)).has_value());

  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : isomorphism_class_representatives(n, false)) {
      CHECK(interval_bruteforce(g).has_value() == recognize_interval(g).has_value());
    }
  }
}

TEST_CASE("host point constraints are honored") {
  // models of P3 on K2 with both ends of the middle vertex forced onto base 0
  Graph p3 = path_graph(3);
  std::vector<HostGraph> hosts = enumerate_subdivisions(complete_graph(2), 2);
  HostPointConstraint pc{0, set_to_bits({1})};
  auto m = hmodel_bruteforce_hosts(p3, hosts, {pc});
  REQUIRE(m.has_value());
  CHECK(m->phi[1].test(0));
}

TEST_CASE("budget exhaustion is reported as inconclusive") {
  Graph g = random_graph(6, 0.5, 12);
  CHECK_THROWS_AS(hmodel_bruteforce(g, lollipop_host(), 2, /*budget=*/5), SearchLimit);
}
