#include "hgraph/medusa.hpp"

#include <algorithm>
#include <tuple>

namespace hgraph {

namespace {

// vertices lying on some hole of g
Bits hole_vertices(const Graph& g) {
  Bits out;
  for (int v = 0; v < g.n(); ++v) {
    // a hole through v: non-adjacent x,y in N(v) joined by an induced path
    // avoiding N[v]
    VertexSet nb = bits_to_set(g.neighbors(v));
    bool found = false;
    for (size_t i = 0; i < nb.size() && !found; ++i) {
      for (size_t j = i + 1; j < nb.size() && !found; ++j) {
        int x = nb[i], y = nb[j];
        if (g.has_edge(x, y)) continue;
        Bits allowed = g.all_vertices() & ~g.closed_neighborhood(v);
        allowed.set(x);
        allowed.set(y);
        std::vector<int> prev(g.n(), -2);
        std::vector<int> queue{x};
        prev[x] = -1;
        for (size_t qi = 0; qi < queue.size() && prev[y] == -2; ++qi) {
          int w = queue[qi];
          for (int u = first_bit(g.neighbors(w)); u >= 0; u = next_bit(g.neighbors(w), u)) {
            if (!allowed.test(u) || prev[u] != -2) continue;
            prev[u] = w;
            queue.push_back(u);
          }
        }
        if (prev[y] != -2) found = true;
      }
    }
    if (found) out.set(v);
  }
  return out;
}

// vertices on some induced path between non-adjacent u and v
void collect_induced_path_vertices(const Graph& g, int u, int v, Bits& into) {
  std::vector<int> path{u};
  Bits on_path;
  on_path.set(u);
  auto rec = [&](auto&& self, int last) -> void {
    for (int w = first_bit(g.neighbors(last)); w >= 0; w = next_bit(g.neighbors(last), w)) {
      if (on_path.test(w)) continue;
      bool induced = true;
      for (int x : path)
        if (x != last && g.has_edge(x, w)) {
          induced = false;
          break;
        }
      if (!induced) continue;
      if (w == v) {
        for (int x : path) into.set(x);
        into.set(v);
        continue;
      }
      path.push_back(w);
      on_path.set(w);
      self(self, w);
      on_path.reset(w);
      path.pop_back();
    }
  };
  rec(rec, u);
}

}  // namespace

CircleTreePartition circle_tree_partition(const Graph& g) {
  CircleTreePartition out;
  out.circle = hole_vertices(g);
  bool changed = true;
  while (changed) {
    changed = false;
    VertexSet vc = bits_to_set(out.circle);
    Bits add;
    for (size_t i = 0; i < vc.size(); ++i)
      for (size_t j = i + 1; j < vc.size(); ++j)
        if (!g.has_edge(vc[i], vc[j])) collect_induced_path_vertices(g, vc[i], vc[j], add);
    if ((add & ~out.circle).any()) {
      out.circle |= add;
      changed = true;
    }
  }
  out.tree = g.all_vertices() & ~out.circle;
  std::vector<int> tree_ids = bits_to_set(out.tree);
  for (const Bits& comp : connected_component_masks(g.induced(out.tree))) {
    Bits orig;
    for (int idx = first_bit(comp); idx >= 0; idx = next_bit(comp, idx)) orig.set(tree_ids[idx]);
    TreeComponent tc;
    tc.vertices = orig;
    tc.circle_nbrs = g.neighbors_of_set(orig) & out.circle;
    out.tree_components.push_back(tc);
  }
  // the lemma guarantees both properties unconditionally
  for (const TreeComponent& tc : out.tree_components) {
    if (!is_clique(g, tc.circle_nbrs))
      throw InternalError("tree-part attachment set is not a clique");
    if (!is_chordal(g.induced(tc.vertices | tc.circle_nbrs)))
      throw InternalError("tree piece is not chordal");
  }
  return out;
}

namespace {

// clique tree of a chordal graph: maximum-weight spanning forest over clique
// intersections; connected chordal inputs yield a single tree
struct CliqueTree {
  std::vector<Bits> cliques;
  std::vector<std::pair<int, int>> edges;
};

CliqueTree build_clique_tree(const Graph& piece) {
  CliqueTree t;
  t.cliques = maximal_clique_masks(piece);
  int m = static_cast<int>(t.cliques.size());
  std::vector<std::tuple<int, int, int>> cands;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      cands.emplace_back(-static_cast<int>((t.cliques[a] & t.cliques[b]).count()), a, b);
  std::sort(cands.begin(), cands.end());
  std::vector<int> parent(m);
  for (int i = 0; i < m; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [w, a, b] : cands) {
    if (w == 0) continue;  // never join disjoint cliques
    if (find(a) == find(b)) continue;
    parent[find(a)] = find(b);
    t.edges.emplace_back(a, b);
  }
  return t;
}

std::vector<int> forest_component_reps(int m, const std::vector<std::pair<int, int>>& edges) {
  Graph forest(m);
  for (auto [a, b] : edges) forest.add_edge(a, b);
  std::vector<int> reps;
  for (const Bits& comp : connected_component_masks(forest)) reps.push_back(first_bit(comp));
  return reps;
}

}  // namespace

HModel build_medusa_model(const Graph& g, const CircleTreePartition& partition,
                          const ArcModel& circle_model) {
  std::vector<int> vc = bits_to_set(partition.circle);
  if (static_cast<int>(vc.size()) != circle_model.n)
    throw ContractViolation("circle model size mismatch");
  int positions = static_cast<int>(circle_model.order.size());
  if (positions < 3) throw ContractViolation("circle too small for a cycle host");

  std::vector<int> new_id(g.n(), -1);
  for (size_t i = 0; i < vc.size(); ++i) new_id[vc[i]] = static_cast<int>(i);

  // a helly point for every attachment clique
  std::vector<int> attach_pos;
  for (const TreeComponent& tc : partition.tree_components) {
    Bits clique_local;
    for (int v = first_bit(tc.circle_nbrs); v >= 0; v = next_bit(tc.circle_nbrs, v))
      clique_local.set(new_id[v]);
    if (clique_local.none()) {
      attach_pos.push_back(0);
      continue;
    }
    int y = -1;
    for (int p = 0; p < positions && y < 0; ++p) {
      bool all = true;
      for (int w = first_bit(clique_local); w >= 0 && all; w = next_bit(clique_local, w))
        if (!circle_model.arc_covers_position(w, p)) all = false;
      if (all) y = p;
    }
    if (y < 0) throw ContractViolation("attachment clique has no common point in the model");
    attach_pos.push_back(y);
  }

  struct Piece {
    std::vector<int> old_ids;
    CliqueTree tree;
    int x_node;
    int host_base;
  };
  std::vector<Piece> pieces;
  int host_n = positions;
  for (const TreeComponent& tc : partition.tree_components) {
    Piece p;
    Graph piece_graph = g.induced(tc.vertices | tc.circle_nbrs, &p.old_ids);
    p.tree = build_clique_tree(piece_graph);
    Bits attach;
    for (int v = first_bit(tc.circle_nbrs); v >= 0; v = next_bit(tc.circle_nbrs, v))
      attach.set(static_cast<int>(std::find(p.old_ids.begin(), p.old_ids.end(), v) -
                                  p.old_ids.begin()));
    p.x_node = -1;
    for (size_t a = 0; a < p.tree.cliques.size() && p.x_node < 0; ++a)
      if (is_subset(attach, p.tree.cliques[a])) p.x_node = static_cast<int>(a);
    if (p.x_node < 0) throw InternalError("no clique contains the attachment set");
    p.host_base = host_n;
    host_n += static_cast<int>(p.tree.cliques.size());
    pieces.push_back(std::move(p));
  }

  Graph base(host_n);
  for (int i = 0; i < positions; ++i) base.add_edge(i, (i + 1) % positions);
  for (size_t t = 0; t < pieces.size(); ++t) {
    const Piece& p = pieces[t];
    for (auto [a, b] : p.tree.edges) base.add_edge(p.host_base + a, p.host_base + b);
    // the piece is connected, so the x-node's tree spans it; the attachment
    // edge is x_i -- y_i exactly as in the constructive proof
    for (int rep : forest_component_reps(static_cast<int>(p.tree.cliques.size()), p.tree.edges)) {
      Graph forest(static_cast<int>(p.tree.cliques.size()));
      for (auto [a, b] : p.tree.edges) forest.add_edge(a, b);
      // hang the component containing x_node by x_node itself
      Bits comp;
      comp.set(rep);
      Bits frontier = comp;
      while (frontier.any()) {
        Bits next;
        for (int x = first_bit(frontier); x >= 0; x = next_bit(frontier, x))
          next |= forest.neighbors(x);
        frontier = next & ~comp;
        comp |= frontier;
      }
      int hang = comp.test(p.x_node) ? p.x_node : rep;
      base.add_edge(attach_pos[t], p.host_base + hang);
    }
  }

  HModel model;
  model.host = HostGraph(base, std::vector<int>(base.edge_count(), 0));
  model.phi.assign(g.n(), Bits());
  for (size_t i = 0; i < vc.size(); ++i) model.phi[vc[i]] |= circle_model.arc_positions(static_cast<int>(i));
  for (const Piece& p : pieces)
    for (size_t a = 0; a < p.tree.cliques.size(); ++a)
      for (int local = first_bit(p.tree.cliques[a]); local >= 0;
           local = next_bit(p.tree.cliques[a], local))
        model.phi[p.old_ids[local]].set(p.host_base + static_cast<int>(a));

  auto report = verify_model(g, model);
  if (!report.ok) throw InternalError("medusa model failed verification");
  return model;
}

HModel build_chordal_medusa_model(const Graph& g) {
  if (!is_chordal(g)) throw ContractViolation("chordal assembly needs a chordal graph");
  CliqueTree t = build_clique_tree(g);
  int m = static_cast<int>(t.cliques.size());
  Graph base(3 + m);
  base.add_edge(0, 1);
  base.add_edge(1, 2);
  base.add_edge(0, 2);
  for (auto [a, b] : t.edges) base.add_edge(3 + a, 3 + b);
  for (int rep : forest_component_reps(m, t.edges)) base.add_edge(0, 3 + rep);
  HModel model;
  model.host = HostGraph(base, std::vector<int>(base.edge_count(), 0));
  model.phi.assign(g.n(), Bits());
  for (int a = 0; a < m; ++a)
    for (int v = first_bit(t.cliques[a]); v >= 0; v = next_bit(t.cliques[a], v))
      model.phi[v].set(3 + a);
  auto report = verify_model(g, model);
  if (!report.ok) throw InternalError("chordal medusa model failed verification");
  return model;
}

std::optional<HModel> recognize_medusa(const Graph& g, std::uint64_t budget) {
  CircleTreePartition part = circle_tree_partition(g);
  if (part.circle.none()) return build_chordal_medusa_model(g);

  std::vector<int> old_ids;
  Graph gc = g.induced(part.circle, &old_ids);
  std::vector<int> new_id(g.n(), -1);
  for (size_t i = 0; i < old_ids.size(); ++i) new_id[old_ids[i]] = static_cast<int>(i);
  std::vector<Bits> cliques;
  for (const TreeComponent& tc : part.tree_components) {
    Bits local;
    for (int v = first_bit(tc.circle_nbrs); v >= 0; v = next_bit(tc.circle_nbrs, v))
      local.set(new_id[v]);
    cliques.push_back(local);
  }
  auto m = solve_helly_cliques(gc, cliques, budget, /*max_n=*/24);
  if (!m) return std::nullopt;
  // hand a normalized model to the assembly when the preconditions allow;
  // extension-only normalization keeps every helly point
  bool reduced_free = reduce_twins_universal(gc).reduced.n() == gc.n();
  if (reduced_free && gc.n() >= 2) *m = normalize_arc_model(gc, *m);
  return build_medusa_model(g, part, *m);
}

std::optional<HModel> recognize_helly_medusa(const Graph& g, std::uint64_t budget) {
  CircleTreePartition part = circle_tree_partition(g);
  if (part.circle.none()) return build_chordal_medusa_model(g);
  std::vector<int> old_ids;
  Graph gc = g.induced(part.circle, &old_ids);
  auto m = recognize_helly_ca(gc, budget, /*max_n=*/24);
  if (!m) return std::nullopt;
  return build_medusa_model(g, part, *m);
}

Graph helly_cliques_to_medusa_gadget(const Graph& g, const std::vector<Bits>& cliques) {
  for (int v = 0; v < g.n(); ++v)
    if (g.n() >= 2 && g.degree(v) == g.n() - 1)
      throw ContractViolation("gadget input has a universal vertex");
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.has_edge(u, v) && g.closed_neighborhood(u) == g.closed_neighborhood(v))
        throw ContractViolation("gadget input has twins");
  for (const Bits& c : cliques)
    if (!is_clique(g, c)) throw ContractViolation("gadget cliques must be cliques");

  int n = g.n();
  int k = static_cast<int>(cliques.size());
  Graph out(4 * n + k);
  auto q = [&](int v, int j) { return 4 * v + j; };  // j: 0=v, 1=v1, 2=v2, 3=v3
  for (int v = 0; v < n; ++v) {
    out.add_edge(q(v, 0), q(v, 1));
    out.add_edge(q(v, 1), q(v, 2));
    out.add_edge(q(v, 2), q(v, 3));
    out.add_edge(q(v, 3), q(v, 0));
  }
  for (int i = 0; i < k; ++i)
    for (int v = first_bit(cliques[i]); v >= 0; v = next_bit(cliques[i], v))
      out.add_edge(q(v, 0), 4 * n + i);

  // X_v = {v, v3}, Y_v = {v1, v2}; cross edges by the normalized pair kind
  const int X[2] = {0, 3};
  const int Y[2] = {1, 2};
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      PairKind kind = classify_vertex_pair(g, u, v);
      auto join_sets = [&](const int* a, const int* b) {
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j)
            if (!out.has_edge(q(u, a[i]), q(v, b[j]))) out.add_edge(q(u, a[i]), q(v, b[j]));
      };
      switch (kind) {
        case PairKind::kOverlap:
          join_sets(X, X);
          join_sets(X, Y);
          join_sets(Y, X);
          join_sets(Y, Y);
          break;
        case PairKind::kDisjoint:
          join_sets(X, Y);
          join_sets(Y, X);
          join_sets(Y, Y);
          break;
        case PairKind::kCoverCircle:
          join_sets(X, X);
          join_sets(X, Y);
          join_sets(Y, X);
          break;
        case PairKind::kContained:  // u's arc inside v's: all but X_u - Y_v
          join_sets(X, X);
          join_sets(Y, X);
          join_sets(Y, Y);
          break;
        case PairKind::kContains:  // v's arc inside u's: all but Y_u - X_v
          join_sets(X, X);
          join_sets(X, Y);
          join_sets(Y, Y);
          break;
      }
    }
  }
  return out;
}

}  // namespace hgraph
