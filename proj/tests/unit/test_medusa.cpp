#include "doctest.h"

#include "hgraph/generators.hpp"
#include "hgraph/medusa.hpp"
#include "hgraph/oracle.hpp"

using namespace hgraph;

TEST_CASE("circle tree partition shapes") {
  auto c5 = circle_tree_partition(cycle_graph(5));
  CHECK(c5.circle.count() == 5);
  CHECK(c5.tree.none());
  CHECK(c5.tree_components.empty());

  auto tree = circle_tree_partition(star_graph(4));
  CHECK(tree.circle.none());
  CHECK(tree.tree.count() == 5);

  // C4 plus a pendant on vertex 0
  Graph g(5, cycle_graph(4).edges());
  g.add_edge(0, 4);
  auto part = circle_tree_partition(g);
  CHECK(part.circle == set_to_bits({0, 1, 2, 3}));
  REQUIRE(part.tree_components.size() == 1);
  CHECK(part.tree_components[0].vertices == set_to_bits({4}));
  CHECK(part.tree_components[0].circle_nbrs == set_to_bits({0}));
}

TEST_CASE("partition closure is a fixed point and order independent") {
  for (int seed = 0; seed < 30; ++seed) {
    Graph g = random_graph(8, 0.3, 2480 + seed);
    auto p1 = circle_tree_partition(g);
    // rerunning on the same graph must give the same partition
    auto p2 = circle_tree_partition(g);
    CHECK(p1.circle == p2.circle);
    // relabeling the graph and mapping back must give the same circle set
    std::vector<int> perm(g.n());
    for (int i = 0; i < g.n(); ++i) perm[i] = (i * 5 + 3) % g.n();
    Graph h(g.n());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    auto ph = circle_tree_partition(h);
    Bits mapped;
    for (int v = first_bit(p1.circle); v >= 0; v = next_bit(p1.circle, v)) mapped.set(perm[v]);
    CHECK(ph.circle == mapped);
  }
}

TEST_CASE("medusa recognition basics") {
  // chordal graphs and circular-arc graphs are medusa
  auto star = recognize_medusa(star_graph(4));
  REQUIRE(star.has_value());
  CHECK(verify_model(star_graph(4), *star).ok);

  auto c6 = recognize_medusa(cycle_graph(6));
  REQUIRE(c6.has_value());
  CHECK(verify_model(cycle_graph(6), *c6).ok);

  // helly-medusa on C5 plus chordal attachment
  Graph g(7, cycle_graph(5).edges());
  g.add_edge(0, 5);
  g.add_edge(5, 6);
  auto hm = recognize_helly_medusa(g);
  REQUIRE(hm.has_value());
  CHECK(verify_model(g, *hm).ok);
}

TEST_CASE("medusa decisions equal the helly-cliques subcall on a small suite") {
  for (int seed = 0; seed < 40; ++seed) {
    Graph g = random_graph(8, 0.32, 550 + seed);
    auto part = circle_tree_partition(g);
    std::optional<HModel> med;
    bool limit = false;
    try {
      med = recognize_medusa(g);
    } catch (const SearchLimit&) {
      limit = true;
    }
    if (limit) continue;
    if (part.circle.none()) {
      CHECK(med.has_value());  // chordal
      continue;
    }
    std::vector<int> old_ids;
    Graph gc = g.induced(part.circle, &old_ids);
    std::vector<int> new_id(g.n(), -1);
    for (size_t i = 0; i < old_ids.size(); ++i) new_id[old_ids[i]] = static_cast<int>(i);
    std::vector<Bits> cliques;
    for (const auto& tc : part.tree_components) {
      Bits local;
      for (int v = first_bit(tc.circle_nbrs); v >= 0; v = next_bit(tc.circle_nbrs, v))
        local.set(new_id[v]);
      cliques.push_back(local);
    }
    CHECK(med.has_value() == solve_helly_cliques(gc, cliques).has_value());
    if (med) CHECK(verify_model(g, *med).ok);
  }
}

TEST_CASE("helly medusa decision equals helly-ca on the circle part") {
  for (int seed = 0; seed < 40; ++seed) {
    Graph g = random_graph(7, 0.35, 9100 + seed);
    auto part = circle_tree_partition(g);
    auto med = recognize_helly_medusa(g);
    if (part.circle.none()) {
      CHECK(med.has_value());
      continue;
    }
    Graph gc = g.induced(part.circle);
    CHECK(med.has_value() == recognize_helly_ca(gc).has_value());
    if (med) CHECK(verify_model(g, *med).ok);
  }
}

TEST_CASE("gadget structure") {
  // raw P3 has a universal centre: contract violation
  CHECK_THROWS_AS(helly_cliques_to_medusa_gadget(path_graph(3), {}), ContractViolation);

  // C5, k = 0: twenty vertices, each quadruple induces a 4-cycle
  Graph c5 = cycle_graph(5);
  Graph gp = helly_cliques_to_medusa_gadget(c5, {});
  CHECK(gp.n() == 20);
  for (int v = 0; v < 5; ++v) {
    int a = 4 * v, b = 4 * v + 1, c = 4 * v + 2, d = 4 * v + 3;
    CHECK(gp.has_edge(a, b));
    CHECK(gp.has_edge(b, c));
    CHECK(gp.has_edge(c, d));
    CHECK(gp.has_edge(d, a));
    CHECK(!gp.has_edge(a, c));
    CHECK(!gp.has_edge(b, d));
  }

  // the quadruple blowup restricted to original vertices reproduces g
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) CHECK(gp.has_edge(4 * u, 4 * v) == c5.has_edge(u, v));

  // with a clique: |V| = 4n + k and c_i sees exactly C_i
  Graph gk = helly_cliques_to_medusa_gadget(c5, {set_to_bits({0, 1})});
  CHECK(gk.n() == 21);
  CHECK(gk.has_edge(20, 0));
  CHECK(gk.has_edge(20, 4));
  CHECK(gk.degree(20) == 2);
}

TEST_CASE("gadget round trip equals solve_helly_cliques") {
  // tiny twin-free, universal-free instances
  std::vector<std::pair<Graph, std::vector<Bits>>> instances;
  Graph k2bar(2);
  instances.push_back({k2bar, {}});
  instances.push_back({cycle_graph(4), {}});
  instances.push_back({cycle_graph(4), {set_to_bits({0, 1})}});
  instances.push_back({path_graph(4), {set_to_bits({1, 2})}});
  instances.push_back({cycle_graph(5), {set_to_bits({0, 1})}});
  int agreed = 0;
  for (const auto& [g, cliques] : instances) {
    bool direct = solve_helly_cliques(g, cliques).has_value();
    Graph gp = helly_cliques_to_medusa_gadget(g, cliques);
    bool via_gadget;
    try {
      via_gadget = recognize_medusa(gp, /*budget=*/400'000'000).has_value();
    } catch (const SearchLimit&) {
      continue;
    }
    CHECK(direct == via_gadget);
    ++agreed;
  }
  CHECK(agreed >= 4);
}
