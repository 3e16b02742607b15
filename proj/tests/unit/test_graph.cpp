#include "doctest.h"

#include <algorithm>

#include "hgraph/generators.hpp"
#include "hgraph/graph.hpp"

using namespace hgraph;

TEST_CASE("edge list parsing") {
  Graph p3 = load_edge_list_string("n 3\ne 0 1\ne 1 2");
  CHECK(p3.n() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(p3.has_edge(0, 1));
  CHECK(p3.has_edge(1, 2));
  CHECK(!p3.has_edge(0, 2));

  Graph k1 = load_edge_list_string("n 1");
  CHECK(k1.n() == 1);
  CHECK(k1.edge_count() == 0);

  CHECK_THROWS_AS(load_edge_list_string("n 2\ne 0 2"), ParseError);
  CHECK_THROWS_AS(load_edge_list_string("n 2\ne 0 0"), ParseError);
  CHECK_THROWS_AS(load_edge_list_string("n 2\ne 0 1\ne 1 0"), ParseError);
  CHECK_THROWS_AS(load_edge_list_string("e 0 1"), ParseError);
  CHECK_THROWS_AS(load_edge_list_string("n 2\nz 1 2"), ParseError);

  // comments and round trip
  Graph g = load_edge_list_string("# header\nn 4 # count\ne 0 1\ne 2 3\n");
  CHECK(g.edge_count() == 2);
  CHECK(load_edge_list_string(to_edge_list(g)) == g);
}

TEST_CASE("connected components") {
  CHECK(connected_components(cycle_graph(4)).size() == 1);
  Graph two(2);
  auto comps = connected_components(two);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet{0});
  CHECK(comps[1] == VertexSet{1});
}

namespace {

// independent union-find recomputation
std::vector<int> uf_labels(const Graph& g) {
  std::vector<int> parent(g.n());
  for (int i = 0; i < g.n(); ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : g.edges()) parent[find(u)] = find(v);
  std::vector<int> out(g.n());
  for (int i = 0; i < g.n(); ++i) out[i] = find(i);
  return out;
}

}  // namespace

TEST_CASE("components match union-find oracle") {
  Graph g = random_graph(8, 0.2, 20260810);
  auto labels = uf_labels(g);
  for (const auto& comp : connected_components(g)) {
    for (int v : comp) CHECK(labels[v] == labels[comp[0]]);
    for (int v = 0; v < g.n(); ++v)
      if (labels[v] == labels[comp[0]])
        CHECK(std::find(comp.begin(), comp.end(), v) != comp.end());
  }
}

TEST_CASE("maximal cliques") {
  auto k3 = maximal_cliques(complete_graph(3));
  REQUIRE(k3.size() == 1);
  CHECK(k3[0] == VertexSet{0, 1, 2});

  auto p3 = maximal_cliques(path_graph(3));
  REQUIRE(p3.size() == 2);
  CHECK(p3[0] == VertexSet{0, 1});
  CHECK(p3[1] == VertexSet{1, 2});

  auto c5 = maximal_cliques(cycle_graph(5));
  CHECK(c5.size() == 5);
  for (const auto& c : c5) CHECK(c.size() == 2);
}

namespace {

std::vector<VertexSet> dumb_maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 1; mask < (1u << g.n()); ++mask) {
    Bits s;
    for (int v = 0; v < g.n(); ++v)
      if (mask & (1u << v)) s.set(v);
    if (is_maximal_clique(g, s)) out.push_back(bits_to_set(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("maximal cliques agree with subset brute force") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : isomorphism_class_representatives(n, false))
      CHECK(maximal_cliques(g) == dumb_maximal_cliques(g));
  for (int seed = 0; seed < 20; ++seed) {
    Graph g = random_graph(8, 0.4, 900 + seed);
    CHECK(maximal_cliques(g) == dumb_maximal_cliques(g));
  }
}

TEST_CASE("holes and chordality") {
  auto hole = find_hole(cycle_graph(4));
  REQUIRE(hole.has_value());
  CHECK(hole->size() == 4);

  CHECK(!find_hole(star_graph(3)).has_value());
  CHECK(!find_hole(path_graph(5)).has_value());

  Graph c4_chord = cycle_graph(4);
  c4_chord.add_edge(0, 2);
  CHECK(!find_hole(c4_chord).has_value());

  CHECK(is_chordal(complete_graph(4)));
  CHECK(!is_chordal(cycle_graph(5)));
}

TEST_CASE("is_chordal agrees with find_hole exhaustively") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : isomorphism_class_representatives(n, false))
      CHECK(is_chordal(g) == !find_hole(g).has_value());
  for (int seed = 0; seed < 30; ++seed) {
    Graph g = random_graph(9, 0.3, 4711 + seed);
    auto hole = find_hole(g);
    CHECK(is_chordal(g) == !hole.has_value());
    if (hole) {
      REQUIRE(hole->size() >= 4);
      for (size_t i = 0; i < hole->size(); ++i)
        for (size_t j = i + 1; j < hole->size(); ++j) {
          bool consecutive = j == i + 1 || (i == 0 && j + 1 == hole->size());
          CHECK(g.has_edge((*hole)[i], (*hole)[j]) == consecutive);
        }
    }
  }
}

TEST_CASE("twin and universal reduction") {
  auto r = reduce_twins_universal(complete_graph(3));
  CHECK(r.reduced.n() == 1);

  // P3's centre is universal, so it goes and two isolated vertices remain
  auto p3 = reduce_twins_universal(path_graph(3));
  CHECK(p3.reduced.n() == 2);
  CHECK(p3.reduced.edge_count() == 0);
  CHECK(p3.removed_universal == std::vector<int>{1});

  // P4 really is untouched
  auto p4 = reduce_twins_universal(path_graph(4));
  CHECK(p4.reduced == path_graph(4));

  // star: leaves are non-adjacent, hence not twins; only the centre goes
  auto star = reduce_twins_universal(star_graph(3));
  CHECK(star.reduced.n() == 3);
  CHECK(star.reduced.edge_count() == 0);
  CHECK(star.removed_universal == std::vector<int>{0});
}

TEST_CASE("reduction is a fixed point of itself") {
  for (int seed = 0; seed < 25; ++seed) {
    Graph g = random_graph(7, 0.5, 31337 + seed);
    auto r1 = reduce_twins_universal(g);
    auto r2 = reduce_twins_universal(r1.reduced);
    CHECK(r2.reduced == r1.reduced);
    CHECK(r2.removed_universal.empty());
    CHECK(r2.merged_twins.empty());
  }
}

TEST_CASE("host graphs realize subdivisions") {
  HostGraph h(complete_graph(2), {2});
  CHECK(h.realized().n() == 4);
  CHECK(h.realized().has_edge(0, 2));
  CHECK(h.realized().has_edge(2, 3));
  CHECK(h.realized().has_edge(3, 1));
  CHECK(h.edge_path(0) == std::vector<int>{0, 2, 3, 1});
  CHECK(h.first_inserted(0) == 2);
}

TEST_CASE("verify_model examples") {
  Graph k3 = complete_graph(3);
  HostGraph host(cycle_graph(3), {0, 0, 0});
  HModel good{host, {set_to_bits({0, 1}), set_to_bits({1, 2}), set_to_bits({0, 2})}};
  CHECK(verify_model(k3, good).ok);

  HModel bad{host, {set_to_bits({0}), set_to_bits({1}), set_to_bits({2})}};
  auto report = verify_model(k3, bad);
  CHECK(!report.ok);
  int missing = 0;
  for (const auto& v : report.violations)
    if (v.kind == ViolationKind::kMissingEdge) ++missing;
  CHECK(missing == 3);

  // P4 as consecutive intervals on a twice-subdivided K2
  Graph p4 = path_graph(4);
  HostGraph path_host(complete_graph(2), {2});  // path 0-2-3-1
  HModel ivm{path_host,
             {set_to_bits({0}), set_to_bits({0, 2}), set_to_bits({2, 3}), set_to_bits({3, 1})}};
  CHECK(verify_model(p4, ivm).ok);

  CHECK(realized_intersection_graph(good) == k3);
}

TEST_CASE("representative counts are the known values") {
  CHECK(isomorphism_class_representatives(4, false).size() == 11);
  CHECK(isomorphism_class_representatives(5, false).size() == 34);
  CHECK(isomorphism_class_representatives(6, false).size() == 156);
  CHECK(isomorphism_class_representatives(6, true).size() == 112);
}
