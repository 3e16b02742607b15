#include "hgraph/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

namespace hgraph {

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) g.add_edge(u, v);
  return g;
}

namespace {

std::uint64_t edge_mask(const Graph& g, const std::vector<int>& perm,
                        const std::vector<int>& dense) {
  std::uint64_t mask = 0;
  int n = g.n();
  for (auto [u, v] : g.edges()) {
    int a = perm[u], b = perm[v];
    if (a > b) std::swap(a, b);
    mask |= 1ull << dense[a * n + b];
  }
  return mask;
}

}  // namespace

std::uint64_t canonical_edge_mask(const Graph& g) {
  if (g.n() > 8) throw ContractViolation("canonical_edge_mask: n <= 8 only");
  int n = g.n();
  std::vector<int> dense(n * n, -1);
  int next = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) dense[u * n + v] = next++;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~0ull;
  do {
    best = std::min(best, edge_mask(g, perm, dense));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Graph> isomorphism_class_representatives(int n, bool connected_only) {
  if (n > 7) throw ContractViolation("representative enumeration: n <= 7 only");
  int pairs = n * (n - 1) / 2;
  std::vector<Edge> all_pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
  std::unordered_set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
    Graph g(n);
    for (int i = 0; i < pairs; ++i)
      if (mask & (1ull << i)) g.add_edge(all_pairs[i].first, all_pairs[i].second);
    if (connected_only && connected_components(g).size() != 1) continue;
    std::uint64_t canon = canonical_edge_mask(g);
    if (seen.insert(canon).second) out.push_back(g);
  }
  return out;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(0, n - 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph lollipop_host() {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(2, 3);
  return g;
}

}  // namespace hgraph
