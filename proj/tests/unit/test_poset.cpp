#include "doctest.h"

#include <random>

#include "hgraph/poset.hpp"

using namespace hgraph;

namespace {

Poset random_poset(int m, double p, std::uint64_t seed) {
  // random DAG over the identity order, then closure
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (coin(rng) < p) pairs.emplace_back(a, b);
  return poset_from_pairs(m, pairs);
}

int dumb_max_antichain(const Poset& p) {
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << p.size()); ++mask) {
    Bits s;
    for (int v = 0; v < p.size(); ++v)
      if (mask & (1u << v)) s.set(v);
    if (p.is_antichain(s)) best = std::max(best, static_cast<int>(s.count()));
  }
  return best;
}

bool dumb_chain_partition_exists(const Poset& p, int s,
                                 const std::vector<std::vector<int>>& lists) {
  std::vector<int> color(p.size(), -1);
  auto rec = [&](auto&& self, int idx) -> bool {
    if (idx == p.size()) return true;
    for (int c : lists[idx]) {
      color[idx] = c;
      bool ok = true;
      for (int j = 0; j < idx && ok; ++j)
        if (color[j] == c && !p.comparable(j, idx)) ok = false;
      if (ok && self(self, idx + 1)) return true;
    }
    color[idx] = -1;
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

TEST_CASE("poset construction and closure") {
  Poset p = poset_from_pairs(3, {{0, 1}, {1, 2}});
  CHECK(p.less(0, 1));
  CHECK(p.less(1, 2));
  CHECK(p.less(0, 2));  // transitivity

  Poset empty = poset_from_pairs(1, {});
  CHECK(empty.width() == 1);

  CHECK_THROWS_AS(poset_from_pairs(2, {{0, 1}, {1, 0}}), ContractViolation);
  CHECK_THROWS_AS(poset_from_pairs(2, {{0, 0}}), ContractViolation);
}

TEST_CASE("width, maximal elements, upsets and downsets") {
  Poset anti = poset_from_pairs(4, {});
  CHECK(anti.width() == 4);
  CHECK(anti.maximal_elements().count() == 4);
  CHECK(anti.upset(set_to_bits({0})).none());

  Poset chain = poset_from_pairs(3, {{0, 1}, {1, 2}});
  CHECK(chain.width() == 1);
  CHECK(bits_to_set(chain.upset(set_to_bits({0}))) == VertexSet{1, 2});
  CHECK(bits_to_set(chain.downset(set_to_bits({2}))) == VertexSet{0, 1});
}

TEST_CASE("width equals brute-force max antichain and Dilworth duality") {
  for (int seed = 0; seed < 40; ++seed) {
    Poset p = random_poset(10, 0.25, 7000 + seed);
    CHECK(p.width() == dumb_max_antichain(p));
  }
}

TEST_CASE("list chain partition basics") {
  std::vector<std::vector<int>> full3{{0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
  Poset anti3 = poset_from_pairs(3, {});
  auto r = list_chain_partition(anti3, 3, full3);
  REQUIRE(r.has_value());
  CHECK(chain_partition_valid(anti3, 3, full3, *r));
  // all three colors distinct on an antichain
  CHECK((r->assignment[0] != r->assignment[1] && r->assignment[1] != r->assignment[2] &&
         r->assignment[0] != r->assignment[2]));

  Poset anti4 = poset_from_pairs(4, {});
  std::vector<std::vector<int>> full4(4, {0, 1, 2});
  CHECK(!list_chain_partition(anti4, 3, full4).has_value());
}

TEST_CASE("list chain partition agrees with exhaustive search") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 120; ++trial) {
    int m = 1 + static_cast<int>(rng() % 9);
    Poset p = random_poset(m, 0.3, rng());
    std::vector<std::vector<int>> lists(m);
    for (int i = 0; i < m; ++i) {
      for (int c = 0; c < 3; ++c)
        if (rng() % 100 < 70) lists[i].push_back(c);
      if (lists[i].empty()) lists[i].push_back(static_cast<int>(rng() % 3));
    }
    auto got = list_chain_partition(p, 3, lists);
    CHECK(got.has_value() == dumb_chain_partition_exists(p, 3, lists));
    if (got) CHECK(chain_partition_valid(p, 3, lists, *got));
  }
}
