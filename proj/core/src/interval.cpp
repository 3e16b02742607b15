#include "hgraph/interval.hpp"

#include <algorithm>

namespace hgraph {

bool interval_model_realizes(const Graph& g, const IntervalModel& m) {
  if (static_cast<int>(m.iv.size()) != g.n()) return false;
  for (int u = 0; u < g.n(); ++u) {
    if (m.iv[u].first > m.iv[u].second) return false;
    for (int v = u + 1; v < g.n(); ++v)
      if (m.intersects(u, v) != g.has_edge(u, v)) return false;
  }
  return true;
}

std::vector<Bits> interval_cliques(const Graph& g) { return maximal_clique_masks(g); }

bool is_consecutive_clique_order(const std::vector<Bits>& cliques, const std::vector<int>& order,
                                 int n) {
  for (int v = 0; v < n; ++v) {
    int first = -1, last = -1, count = 0;
    for (size_t i = 0; i < order.size(); ++i) {
      if (cliques[order[i]].test(v)) {
        if (first < 0) first = static_cast<int>(i);
        last = static_cast<int>(i);
        ++count;
      }
    }
    if (count > 0 && last - first + 1 != count) return false;
  }
  return true;
}

std::optional<std::vector<int>> consecutive_clique_ordering(const Graph& g) {
  if (g.n() == 0) return std::vector<int>{};
  if (!is_chordal(g)) return std::nullopt;
  std::vector<Bits> cliques = interval_cliques(g);
  std::vector<Bits> constraints;
  for (int v = 0; v < g.n(); ++v) {
    Bits cl;
    for (size_t i = 0; i < cliques.size(); ++i)
      if (cliques[i].test(v)) cl.set(static_cast<int>(i));
    constraints.push_back(cl);
  }
  auto t = PQTree::build(static_cast<int>(cliques.size()), constraints);
  if (!t) return std::nullopt;
  return t->frontier();
}

std::optional<IntervalModel> recognize_interval(const Graph& g) {
  auto order = consecutive_clique_ordering(g);
  if (!order) return std::nullopt;
  IntervalModel m = model_from_clique_order(g, interval_cliques(g), *order);
  if (!interval_model_realizes(g, m)) throw InternalError("interval model fails realization");
  return m;
}

PQTree build_pq_tree(const Graph& g) {
  if (!is_chordal(g)) throw ContractViolation("build_pq_tree: graph is not interval");
  std::vector<Bits> cliques = interval_cliques(g);
  std::vector<Bits> constraints;
  for (int v = 0; v < g.n(); ++v) {
    Bits cl;
    for (size_t i = 0; i < cliques.size(); ++i)
      if (cliques[i].test(v)) cl.set(static_cast<int>(i));
    constraints.push_back(cl);
  }
  auto t = PQTree::build(std::max<int>(1, static_cast<int>(cliques.size())), constraints);
  if (!t) throw ContractViolation("build_pq_tree: graph is not interval");
  return *t;
}

std::vector<std::vector<int>> enumerate_consecutive_orderings(const PQTree& t, std::uint64_t cap) {
  return t.enumerate_orderings(cap);
}

SectorSequence normalized_sectors(const Graph& g, const std::vector<int>& ordering) {
  std::vector<Bits> cliques = interval_cliques(g);
  if (!is_consecutive_clique_order(cliques, ordering, g.n()))
    throw ContractViolation("normalized_sectors: ordering is not consecutive");
  SectorSequence seq;
  seq.sectors.push_back({Bits(), SectorKind::kMinimal});
  for (size_t i = 0; i < ordering.size(); ++i) {
    seq.sectors.push_back({cliques[ordering[i]], SectorKind::kMaximal});
    Bits next = i + 1 < ordering.size() ? cliques[ordering[i + 1]] : Bits();
    seq.sectors.push_back({cliques[ordering[i]] & next, SectorKind::kMinimal});
  }
  return seq;
}

IntervalModel model_from_clique_order(const Graph& g, const std::vector<Bits>& cliques,
                                      const std::vector<int>& ordering) {
  IntervalModel m;
  m.iv.assign(g.n(), {0, 0});
  std::vector<int> first(g.n(), -1), last(g.n(), -1);
  for (size_t i = 0; i < ordering.size(); ++i) {
    const Bits& c = cliques[ordering[i]];
    for (int v = first_bit(c); v >= 0; v = next_bit(c, v)) {
      if (first[v] < 0) first[v] = static_cast<int>(i);
      last[v] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < g.n(); ++v) {
    if (first[v] < 0) throw InternalError("vertex in no maximal clique");
    // maximal sector i sits at coordinate 2(i+1)
    m.iv[v] = {2 * (first[v] + 1), 2 * (last[v] + 1)};
  }
  return m;
}

std::optional<std::vector<int>> ordering_with_leaf_first(const PQTree& t, int target) {
  if (!t.leaf_can_be_first(target)) return std::nullopt;
  // rotate every node on the root->target path so the path child comes first;
  // other children keep stored order
  std::vector<int> out;
  auto rec = [&](auto&& self, int id) -> void {
    const auto& nd = t.node(id);
    if (nd.kind == PQTree::Kind::kLeaf) {
      out.push_back(nd.leaf_id);
      return;
    }
    std::vector<int> ch = nd.children;
    auto on_path = [&](int c) { return t.leaves_below(c).test(target); };
    auto it = std::find_if(ch.begin(), ch.end(), on_path);
    if (it != ch.end()) {
      if (nd.kind == PQTree::Kind::kQ) {
        // target child is endmost (guaranteed); reverse when it is last
        if (*it != ch.front()) std::reverse(ch.begin(), ch.end());
      } else {
        std::rotate(ch.begin(), it, it + 1);
      }
    }
    for (int c : ch) self(self, c);
  };
  rec(rec, t.root());
  return out;
}

std::optional<IntervalModel> interval_with_leftmost_clique(const Graph& g, const Bits& c) {
  if (!is_clique(g, c) || c.none())
    throw ContractViolation("interval_with_leftmost_clique: C must be a non-empty clique");
  if (!is_maximal_clique(g, c)) return std::nullopt;
  if (g.n() + 1 > kMaxVertices) throw ContractViolation("graph too large");
  // pendant reduction: x adjacent exactly to C; C can be leftmost iff g+x is
  // interval and the unique maximal clique containing x sits at an end
  Graph aug(g.n() + 1);
  for (auto [u, v] : g.edges()) aug.add_edge(u, v);
  int x = g.n();
  for (int v = first_bit(c); v >= 0; v = next_bit(c, v)) aug.add_edge(v, x);
  if (!is_chordal(aug)) return std::nullopt;
  std::vector<Bits> cliques = interval_cliques(aug);
  Bits cx = c;
  cx.set(x);
  int target = -1;
  for (size_t i = 0; i < cliques.size(); ++i)
    if (cliques[i] == cx) target = static_cast<int>(i);
  if (target < 0) throw InternalError("pendant clique not found");
  std::optional<PQTree> t;
  {
    std::vector<Bits> constraints;
    for (int v = 0; v < aug.n(); ++v) {
      Bits cl;
      for (size_t i = 0; i < cliques.size(); ++i)
        if (cliques[i].test(v)) cl.set(static_cast<int>(i));
      constraints.push_back(cl);
    }
    t = PQTree::build(static_cast<int>(cliques.size()), constraints);
  }
  if (!t) return std::nullopt;
  auto order = ordering_with_leaf_first(*t, target);
  if (!order) return std::nullopt;
  // drop x: C|x becomes C, every other clique of aug is a clique of g
  std::vector<Bits> gcliques = interval_cliques(g);
  std::vector<int> gorder;
  for (int idx : *order) {
    Bits cl = cliques[idx];
    cl.reset(x);
    if (idx == target) cl = c;
    int pos = -1;
    for (size_t i = 0; i < gcliques.size(); ++i)
      if (gcliques[i] == cl) pos = static_cast<int>(i);
    if (pos < 0) throw InternalError("clique mismatch after pendant removal");
    gorder.push_back(pos);
  }
  IntervalModel m = model_from_clique_order(g, gcliques, gorder);
  if (!interval_model_realizes(g, m)) throw InternalError("leftmost model fails realization");
  return m;
}

}  // namespace hgraph
