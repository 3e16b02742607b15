#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "hgraph/generators.hpp"
#include "hgraph/interval.hpp"
#include "hgraph/oracle.hpp"

using namespace hgraph;

namespace {

// all consecutive orderings by filtering every permutation of the cliques
std::vector<std::vector<int>> dumb_consecutive_orderings(const Graph& g) {
  std::vector<Bits> cliques = interval_cliques(g);
  std::vector<int> perm(cliques.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (is_consecutive_clique_order(cliques, perm, g.n())) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("interval recognition basics") {
  CHECK(recognize_interval(path_graph(4)).has_value());
  CHECK(!recognize_interval(cycle_graph(4)).has_value());
  CHECK(recognize_interval(complete_graph(5)).has_value());
  // the subdivided claw is chordal but not interval (asteroidal triple)
  Graph spider(7);
  spider.add_edge(0, 1);
  spider.add_edge(0, 2);
  spider.add_edge(0, 3);
  spider.add_edge(1, 4);
  spider.add_edge(2, 5);
  spider.add_edge(3, 6);
  CHECK(is_chordal(spider));
  CHECK(!recognize_interval(spider).has_value());
}

TEST_CASE("interval recognition matches endpoint brute force on all n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : isomorphism_class_representatives(n, false)) {
      auto fast = recognize_interval(g);
      auto slow = interval_bruteforce(g);
      CHECK(fast.has_value() == slow.has_value());
      if (fast) CHECK(interval_model_realizes(g, *fast));
    }
  }
}

TEST_CASE("pq tree shapes") {
  // K2: one clique, single leaf
  PQTree t1 = build_pq_tree(complete_graph(2));
  CHECK(t1.num_leaves() == 1);
  CHECK(t1.enumerate_orderings(10).size() == 1);

  // P3: two cliques, both orders
  PQTree t2 = build_pq_tree(path_graph(3));
  CHECK(t2.num_leaves() == 2);
  CHECK(t2.enumerate_orderings(10).size() == 2);

  CHECK_THROWS_AS(build_pq_tree(cycle_graph(4)), ContractViolation);
}

TEST_CASE("pq tree frontier equals brute-force consecutive orderings") {
  int interval_count = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : isomorphism_class_representatives(n, false)) {
      if (!recognize_interval(g).has_value()) continue;
      ++interval_count;
      PQTree t = build_pq_tree(g);
      auto got = enumerate_consecutive_orderings(t, 1 << 20);
      auto want = dumb_consecutive_orderings(g);
      std::sort(want.begin(), want.end());
      CHECK(got == want);
    }
  }
  CHECK(interval_count > 100);
}

TEST_CASE("caterpillar example frontier") {
  // caterpillar: spine 0-1-2 with legs; three maximal cliques in a row
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 4);
  PQTree t = build_pq_tree(g);
  auto got = enumerate_consecutive_orderings(t, 1 << 20);
  auto want = dumb_consecutive_orderings(g);
  std::sort(want.begin(), want.end());
  CHECK(got == want);
}

TEST_CASE("enumeration cap") {
  PQTree t = build_pq_tree(Graph(6));  // six isolated cliques, 720 orders
  CHECK(t.count_orderings(10000) == 720);
  CHECK_THROWS_AS(t.enumerate_orderings(10), SearchLimit);
}

TEST_CASE("normalized sectors") {
  // K2 -> (empty, {0,1}, empty)
  Graph k2 = complete_graph(2);
  auto seq = normalized_sectors(k2, {0});
  REQUIRE(seq.sectors.size() == 3);
  CHECK(seq.sectors[0].clique.none());
  CHECK(seq.sectors[1].clique == set_to_bits({0, 1}));
  CHECK(seq.sectors[2].clique.none());

  // P3 -> 5 sectors, middle minimal sector {1}
  auto p3 = normalized_sectors(path_graph(3), {0, 1});
  REQUIRE(p3.sectors.size() == 5);
  CHECK(p3.sectors[2].clique == set_to_bits({1}));
  CHECK(p3.sectors[2].kind == SectorKind::kMinimal);

  CHECK_THROWS_AS(normalized_sectors(path_graph(4), {0, 2, 1}), ContractViolation);
}

TEST_CASE("normalized sector count is 2c+1 with alternating kinds") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : isomorphism_class_representatives(n, false)) {
      auto order = consecutive_clique_ordering(g);
      if (!order) continue;
      auto seq = normalized_sectors(g, *order);
      size_t c = interval_cliques(g).size();
      CHECK(seq.sectors.size() == 2 * c + 1);
      for (size_t i = 0; i < seq.sectors.size(); ++i) {
        CHECK(seq.sectors[i].kind ==
              (i % 2 == 0 ? SectorKind::kMinimal : SectorKind::kMaximal));
        if (i + 1 < seq.sectors.size())
          CHECK(seq.sectors[i].clique != seq.sectors[i + 1].clique);
      }
      CHECK(seq.sectors.front().clique.none());
      CHECK(seq.sectors.back().clique.none());
    }
  }
}

namespace {

// leftmost maximal sector clique of a brute-force interval model
Bits leftmost_maximal_clique_of(const Graph& g, const IntervalModel& m) {
  std::vector<int> xs;
  for (auto [a, b] : m.iv) {
    xs.push_back(a);
    xs.push_back(b);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (int x : xs) {
    Bits active;
    for (int v = 0; v < g.n(); ++v)
      if (m.iv[v].first <= x && x <= m.iv[v].second) active.set(v);
    if (is_maximal_clique(g, active)) return active;
  }
  return Bits();
}

bool dumb_leftmost_exists(const Graph& g, const Bits& c) {
  bool found = false;
  interval_bruteforce_all(g, kDefaultOracleBudget, [&](const IntervalModel& m) {
    if (!interval_model_realizes(g, m)) return false;
    if (leftmost_maximal_clique_of(g, m) == c) {
      found = true;
      return true;
    }
    return false;
  });
  return found;
}

}  // namespace

TEST_CASE("interval with leftmost clique, small cases") {
  Graph k3 = complete_graph(3);
  CHECK(interval_with_leftmost_clique(k3, set_to_bits({0, 1, 2})).has_value());
  CHECK(interval_with_leftmost_clique(path_graph(3), set_to_bits({0, 1})).has_value());
  // non-maximal cliques can never be a leftmost maximal sector
  CHECK(!interval_with_leftmost_clique(k3, set_to_bits({0, 1})).has_value());
}

TEST_CASE("interval with leftmost clique agrees with model enumeration") {
  int checked = 0;
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : isomorphism_class_representatives(n, false)) {
      for (const Bits& c : maximal_clique_masks(g)) {
        auto fast = interval_with_leftmost_clique(g, c);
        bool slow = dumb_leftmost_exists(g, c);
        CHECK(fast.has_value() == slow);
        ++checked;
        if (fast) {
          CHECK(interval_model_realizes(g, *fast));
          CHECK(leftmost_maximal_clique_of(g, *fast) == c);
        }
      }
    }
  }
  CHECK(checked > 100);
}
