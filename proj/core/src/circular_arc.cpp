#include "hgraph/circular_arc.hpp"

#include <algorithm>
#include <numeric>

namespace hgraph {

std::vector<int> ArcModel::positions() const {
  std::vector<int> pos(symbol_count(), -1);
  for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  return pos;
}

Bits ArcModel::arc_positions(int v) const {
  std::vector<int> pos = positions();
  int s = pos[2 * v], e = pos[2 * v + 1];
  Bits out;
  int len = static_cast<int>(order.size());
  for (int i = s;; i = (i + 1) % len) {
    out.set(i);
    if (i == e) break;
  }
  return out;
}

bool ArcModel::arcs_intersect(int u, int v) const {
  return (arc_positions(u) & arc_positions(v)).any();
}

bool ArcModel::arc_covers_position(int v, int position) const {
  return arc_positions(v).test(position);
}

int ArcModel::point_position(int i) const {
  std::vector<int> pos = positions();
  return pos[2 * n + i];
}

bool arc_model_realizes(const Graph& g, const ArcModel& m) {
  if (m.n != g.n()) return false;
  if (static_cast<int>(m.order.size()) != m.symbol_count()) return false;
  std::vector<int> pos = m.positions();
  for (int s = 0; s < m.symbol_count(); ++s)
    if (pos[s] < 0) return false;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (m.arcs_intersect(u, v) != g.has_edge(u, v)) return false;
  return true;
}

PairKind classify_vertex_pair(const Graph& g, int u, int v) {
  if (u == v) throw ContractViolation("classify_vertex_pair: u != v required");
  for (int w = 0; w < g.n(); ++w) {
    if (g.degree(w) == g.n() - 1 && g.n() >= 2)
      throw ContractViolation("classify_vertex_pair: universal vertex present");
    for (int x = w + 1; x < g.n(); ++x)
      if (g.has_edge(w, x) && g.closed_neighborhood(w) == g.closed_neighborhood(x))
        throw ContractViolation("classify_vertex_pair: twins present");
  }
  if (!g.has_edge(u, v)) return PairKind::kDisjoint;
  Bits nu = g.closed_neighborhood(u), nv = g.closed_neighborhood(v);
  if (is_subset(nu, nv) && nu != nv) return PairKind::kContained;
  if (is_subset(nv, nu) && nv != nu) return PairKind::kContains;
  if ((nu | nv) == g.all_vertices()) {
    bool side = true;
    Bits only_v = nv & ~nu;
    for (int w = first_bit(only_v); w >= 0 && side; w = next_bit(only_v, w)) {
      Bits nw = g.closed_neighborhood(w);
      if (!(is_subset(nw, nv) && nw != nv)) side = false;
    }
    Bits only_u = nu & ~nv;
    for (int w = first_bit(only_u); w >= 0 && side; w = next_bit(only_u, w)) {
      Bits nw = g.closed_neighborhood(w);
      if (!(is_subset(nw, nu) && nw != nu)) side = false;
    }
    if (side) return PairKind::kCoverCircle;
  }
  return PairKind::kOverlap;
}

PairKind geometric_pair_kind(const ArcModel& m, int u, int v) {
  Bits a = m.arc_positions(u), b = m.arc_positions(v);
  if ((a & b).none()) return PairKind::kDisjoint;
  Bits all;
  for (size_t i = 0; i < m.order.size(); ++i) all.set(i);
  bool a_in_b = is_subset(a, b), b_in_a = is_subset(b, a);
  if (b_in_a && !a_in_b) return PairKind::kContains;
  if (a_in_b && !b_in_a) return PairKind::kContained;
  if ((a | b) == all && !a_in_b && !b_in_a) return PairKind::kCoverCircle;
  return PairKind::kOverlap;
}

// ---------------------------------------------------------------------------
// backtracking search

namespace {

struct CaSearch {
  const Graph& g;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  // cliques whose Helly property must hold, as vertex bitsets
  const std::vector<Bits>* constraints = nullptr;

  std::vector<int> vertex_order;
  std::vector<int> seq;                   // symbols placed so far
  std::vector<char> placed;
  std::optional<std::vector<int>> found;  // completed symbol sequence

  explicit CaSearch(const Graph& g, std::uint64_t budget) : g(g), budget(budget) {
    placed.assign(g.n(), 0);
    // greedy order: most placed neighbours first, ties by degree then index
    std::vector<char> chosen(g.n(), 0);
    for (int step = 0; step < g.n(); ++step) {
      int best = -1, best_adj = -1, best_deg = -1;
      for (int v = 0; v < g.n(); ++v) {
        if (chosen[v]) continue;
        int adj = 0;
        for (int u = 0; u < g.n(); ++u)
          if (chosen[u] && g.has_edge(u, v)) ++adj;
        if (adj > best_adj || (adj == best_adj && g.degree(v) > best_deg)) {
          best = v;
          best_adj = adj;
          best_deg = g.degree(v);
        }
      }
      chosen[best] = 1;
      vertex_order.push_back(best);
    }
  }

  bool arcs_ok(int v) const {
    // v and all placed u must intersect exactly per adjacency
    int len = static_cast<int>(seq.size());
    std::vector<int> pos(2 * g.n(), -1);
    for (int i = 0; i < len; ++i) pos[seq[i]] = i;
    auto covers = [&](int w, int p) {
      int s = pos[2 * w], e = pos[2 * w + 1];
      if (s <= e) return s <= p && p <= e;
      return p >= s || p <= e;
    };
    auto meet = [&](int a, int b) {
      return covers(a, pos[2 * b]) || covers(a, pos[2 * b + 1]) || covers(b, pos[2 * a]);
    };
    for (int u = 0; u < g.n(); ++u) {
      if (!placed[u] || u == v) continue;
      if (meet(u, v) != g.has_edge(u, v)) return false;
    }
    return true;
  }

  // every unplaced vertex must still fit: its arc has to live inside one
  // contiguous gap of its placed non-neighbours' arcs while reaching every
  // placed neighbour's arc
  bool future_ok() const {
    int len = static_cast<int>(seq.size());
    std::vector<int> pos(2 * g.n(), -1);
    for (int i = 0; i < len; ++i) pos[seq[i]] = i;
    std::vector<Bits> range(g.n());
    Bits any_placed;
    for (int u = 0; u < g.n(); ++u) {
      if (!placed[u]) continue;
      int s = pos[2 * u], e = pos[2 * u + 1];
      for (int i = s;; i = (i + 1) % len) {
        range[u].set(i);
        if (i == e) break;
      }
      any_placed.set(u);
    }
    for (int u = 0; u < g.n(); ++u) {
      if (placed[u]) continue;
      Bits banned;
      Bits nbr_arcs_needed;
      int placed_nbrs = 0;
      for (int w = first_bit(any_placed); w >= 0; w = next_bit(any_placed, w)) {
        if (g.has_edge(u, w)) {
          ++placed_nbrs;
        } else {
          banned |= range[w];
        }
      }
      (void)nbr_arcs_needed;
      if (placed_nbrs == 0) {
        // still needs an insertion slot outside every banned position pair;
        // a fully banned circle leaves no room for a disjoint arc
        bool free_slot = false;
        for (int p = 0; p < len && !free_slot; ++p)
          if (!banned.test(p) || !banned.test((p + 1) % len)) free_slot = true;
        // between two positions both covered only by banned arcs there can
        // still be a slot usable when the covering arcs differ; keep this
        // prune conservative
        if (len > 0 && !free_slot && banned.count() == static_cast<size_t>(len)) {
          // check a slot between two banned arcs that do not overlap across it
          bool slot = false;
          for (int p = 0; p < len && !slot; ++p) {
            int q = (p + 1) % len;
            bool crossed = false;
            for (int w = first_bit(any_placed); w >= 0 && !crossed;
                 w = next_bit(any_placed, w))
              if (!g.has_edge(u, w) && range[w].test(p) && range[w].test(q) &&
                  !(pos[2 * w + 1] == p))
                crossed = true;
            if (!crossed) slot = true;
          }
          if (!slot) return false;
        }
        continue;
      }
      // gaps of the banned set; u's arc must sit inside one of them
      bool feasible = false;
      if (banned.none()) {
        feasible = true;
      } else {
        for (int p = 0; p < len && !feasible; ++p) {
          if (banned.test(p) || !banned.test((p + len - 1) % len)) continue;
          // gap starts at p; walk to its end
          Bits gap;
          for (int i = p; !banned.test(i); i = (i + 1) % len) {
            gap.set(i);
            if (gap.count() > static_cast<size_t>(len)) break;
          }
          bool all_nbrs = true;
          for (int w = first_bit(any_placed); w >= 0 && all_nbrs;
               w = next_bit(any_placed, w))
            if (g.has_edge(u, w) && (range[w] & gap).none()) all_nbrs = false;
          if (all_nbrs) feasible = true;
        }
      }
      if (!feasible) return false;
    }
    return true;
  }

  bool helly_ok(int v) const {
    if (!constraints) return true;
    int len = static_cast<int>(seq.size());
    std::vector<int> pos(2 * g.n(), -1);
    for (int i = 0; i < len; ++i) pos[seq[i]] = i;
    auto covers = [&](int w, int p) {
      int s = pos[2 * w], e = pos[2 * w + 1];
      if (s <= e) return s <= p && p <= e;
      return p >= s || p <= e;
    };
    for (const Bits& c : *constraints) {
      if (!c.test(v)) continue;
      bool complete = true;
      for (int w = first_bit(c); w >= 0; w = next_bit(c, w))
        if (!placed[w]) {
          complete = false;
          break;
        }
      if (!complete) continue;
      bool common = c.none();
      for (int p = 0; p < len && !common; ++p) {
        common = true;
        for (int w = first_bit(c); w >= 0 && common; w = next_bit(c, w))
          if (!covers(w, p)) common = false;
      }
      if (!common) return false;
    }
    return true;
  }

  bool rec(size_t idx) {
    if (idx == vertex_order.size()) {
      found = seq;
      return true;
    }
    int v = vertex_order[idx];
    if (idx == 0) {
      seq = {2 * v, 2 * v + 1};
      placed[v] = 1;
      if (arcs_ok(v) && helly_ok(v) && rec(idx + 1)) return true;
      placed[v] = 0;
      seq.clear();
      return false;
    }
    int len = static_cast<int>(seq.size());
    for (int i = 1; i <= len; ++i) {
      seq.insert(seq.begin() + i, 2 * v);
      for (int j = 1; j <= len + 1; ++j) {
        if (++nodes > budget) throw SearchLimit("circular-arc search budget exhausted");
        seq.insert(seq.begin() + j, 2 * v + 1);
        placed[v] = 1;
        if (arcs_ok(v) && helly_ok(v)) {
          if (rec(idx + 1)) return true;
        }
        placed[v] = 0;
        seq.erase(seq.begin() + j);
      }
      seq.erase(seq.begin() + i);
    }
    return false;
  }
};

std::optional<ArcModel> run_ca_search(const Graph& g, const std::vector<Bits>* constraints,
                                      std::uint64_t budget, int max_n) {
  if (g.n() > max_n)
    throw SearchLimit("circular-arc search size cap exceeded (n = " + std::to_string(g.n()) + ")");
  if (g.n() == 0) return ArcModel{0, 0, {}};
  CaSearch search(g, budget);
  search.constraints = constraints;
  if (!search.rec(0)) return std::nullopt;
  ArcModel m;
  m.n = g.n();
  m.order = *search.found;
  return m;
}

}  // namespace

std::optional<ArcModel> recognize_ca(const Graph& g, std::uint64_t budget, int max_n) {
  auto m = run_ca_search(g, nullptr, budget, max_n);
  if (m && !arc_model_realizes(g, *m)) throw InternalError("arc model fails realization");
  return m;
}

bool helly_check(const ArcModel& m, const Bits& clique) {
  if (clique.count() <= 1) return true;
  int len = static_cast<int>(m.order.size());
  for (int p = 0; p < len; ++p) {
    bool common = true;
    for (int w = first_bit(clique); w >= 0 && common; w = next_bit(clique, w))
      if (!m.arc_covers_position(w, p)) common = false;
    if (common) return true;
  }
  return false;
}

std::optional<ArcModel> recognize_helly_ca(const Graph& g, std::uint64_t budget, int max_n) {
  std::vector<Bits> cliques = maximal_clique_masks(g);
  auto m = run_ca_search(g, &cliques, budget, max_n);
  if (m && !arc_model_realizes(g, *m)) throw InternalError("arc model fails realization");
  return m;
}

std::optional<ArcModel> solve_helly_cliques(const Graph& g, const std::vector<Bits>& cliques,
                                            std::uint64_t budget, int max_n) {
  for (const Bits& c : cliques)
    if (!is_clique(g, c)) throw ContractViolation("solve_helly_cliques: C_i must be a clique");
  auto m = run_ca_search(g, &cliques, budget, max_n);
  if (m && !arc_model_realizes(g, *m)) throw InternalError("arc model fails realization");
  return m;
}

std::optional<ArcModel> solve_helly_cliques_points(const Graph& g,
                                                   const std::vector<Bits>& cliques,
                                                   std::uint64_t budget, int max_n) {
  for (const Bits& c : cliques)
    if (!is_clique(g, c)) throw ContractViolation("solve_helly_cliques_points: C_i not a clique");
  auto base = run_ca_search(g, &cliques, budget, max_n);
  if (!base) return std::nullopt;

  // Insert the marked points: point i needs a slot strictly inside every arc
  // of C_i, and the points must land in cyclic order.  A helly-satisfying
  // layout always admits such slots (a non-empty intersection of arcs spans
  // at least two consecutive endpoint positions).
  int k = static_cast<int>(cliques.size());
  if (k == 0) return base;
  int len = static_cast<int>(base->order.size());
  if (len == 0) {
    // no arcs at all (n == 0): points go on a bare circle
    ArcModel m = *base;
    m.num_points = k;
    for (int i = 0; i < k; ++i) m.order.push_back(2 * m.n + i);
    return m;
  }

  // feasible slots per point: slot s = between order[s] and order[s+1 mod]
  std::vector<Bits> feasible(k);
  for (int i = 0; i < k; ++i) {
    if (cliques[i].none()) {
      for (int s = 0; s < len; ++s) feasible[i].set(s);
      continue;
    }
    Bits common;
    common.set();
    for (int w = first_bit(cliques[i]); w >= 0; w = next_bit(cliques[i], w))
      common &= base->arc_positions(w);
    for (int s = 0; s < len; ++s)
      if (common.test(s) && common.test((s + 1) % len)) feasible[i].set(s);
    if (feasible[i].none()) return std::nullopt;
  }

  // choose slots q_0 <= q_1 <= ... cyclically; try each anchor for point 0
  for (int anchor = 0; anchor < len; ++anchor) {
    if (!feasible[0].test(anchor)) continue;
    std::vector<int> slot(k, -1);
    slot[0] = anchor;
    bool ok = true;
    int cur = anchor;
    int steps_used = 0;  // how far we advanced past the anchor
    for (int i = 1; i < k && ok; ++i) {
      // next feasible slot at or after cur, without wrapping past anchor
      int advance = -1;
      for (int d = 0; d < len - steps_used; ++d) {
        int s = (cur + d) % len;
        if (feasible[i].test(s)) {
          advance = d;
          break;
        }
      }
      if (advance < 0) {
        ok = false;
        break;
      }
      cur = (cur + advance) % len;
      steps_used += advance;
      slot[i] = cur;
    }
    if (!ok) continue;
    ArcModel m = *base;
    m.num_points = k;
    // insert point symbols after their slot's left endpoint, keeping order
    std::vector<std::vector<int>> at_slot(len);
    for (int i = 0; i < k; ++i) at_slot[slot[i]].push_back(2 * m.n + i);
    std::vector<int> out;
    for (int s = 0; s < len; ++s) {
      out.push_back(base->order[s]);
      for (int sym : at_slot[s]) out.push_back(sym);
    }
    m.order = std::move(out);
    return m;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// normalization

namespace {

struct MutableModel {
  std::vector<int> order;
  int n;

  std::vector<int> positions() const {
    std::vector<int> pos(2 * n, -1);
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    return pos;
  }

  Bits range(int v) const {
    std::vector<int> pos = positions();
    Bits out;
    int len = static_cast<int>(order.size());
    for (int i = pos[2 * v];; i = (i + 1) % len) {
      out.set(i);
      if (i == pos[2 * v + 1]) break;
    }
    return out;
  }

  // move symbol so it lands immediately after `after_symbol` clockwise
  void move_after(int symbol, int after_symbol) {
    order.erase(std::find(order.begin(), order.end(), symbol));
    auto it = std::find(order.begin(), order.end(), after_symbol);
    order.insert(it + 1, symbol);
  }

  // move symbol so it lands immediately before `before_symbol`
  void move_before(int symbol, int before_symbol) {
    order.erase(std::find(order.begin(), order.end(), symbol));
    auto it = std::find(order.begin(), order.end(), before_symbol);
    order.insert(it, symbol);
  }
};

PairKind geometric_kind(const MutableModel& m, int u, int v) {
  ArcModel am{m.n, 0, m.order};
  return geometric_pair_kind(am, u, v);
}

// grow u's arc so it contains v's arc (closed containment, minimal reach);
// each move only ever enlarges u's coverage
void extend_to_contain(MutableModel& m, int u, int v) {
  std::vector<int> pos = m.positions();
  if (!m.range(u).test(pos[2 * v + 1])) m.move_after(2 * u + 1, 2 * v + 1);
  pos = m.positions();
  if (!m.range(u).test(pos[2 * v])) m.move_before(2 * u, 2 * v);
}

// grow u's arc so u and v together cover the whole circle
void extend_to_cover(MutableModel& m, int u, int v) {
  int len = static_cast<int>(m.order.size());
  Bits uni = m.range(u) | m.range(v);
  Bits all;
  for (int i = 0; i < len; ++i) all.set(i);
  if (uni == all) return;
  // the uncovered gap is contiguous; stretch the arc bordering its start
  std::vector<int> pos = m.positions();
  int gap_start = -1;
  for (int i = 0; i < len; ++i)
    if (!uni.test(i) && uni.test((i + len - 1) % len)) gap_start = i;
  int before = (gap_start + len - 1) % len;
  int stretch = m.range(u).test(before) ? u : v;
  int gap_end = gap_start;
  while (!uni.test((gap_end + 1) % len)) gap_end = (gap_end + 1) % len;
  m.move_after(2 * stretch + 1, m.order[gap_end]);
}

}  // namespace

ArcModel normalize_arc_model(const Graph& g, const ArcModel& m) {
  if (!arc_model_realizes(g, m))
    throw ContractViolation("normalize_arc_model: model does not realize g");
  std::vector<std::pair<int, int>> pairs;
  std::vector<PairKind> want;
  for (int u = 0; u < g.n(); ++u)
    for (int v = 0; v < g.n(); ++v)
      if (u != v) {
        pairs.emplace_back(u, v);
        want.push_back(classify_vertex_pair(g, u, v));  // also checks the precondition
      }
  MutableModel work{m.order, m.n};
  int rounds_cap = g.n() * g.n() + 4;
  for (int round = 0; round < rounds_cap; ++round) {
    bool mismatch = false;
    // containments first, then circle covers
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (want[i] != PairKind::kContains) continue;
      auto [u, v] = pairs[i];
      if (geometric_kind(work, u, v) != PairKind::kContains) {
        extend_to_contain(work, u, v);
        mismatch = true;
      }
    }
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (want[i] != PairKind::kCoverCircle) continue;
      auto [u, v] = pairs[i];
      if (geometric_kind(work, u, v) != PairKind::kCoverCircle) {
        extend_to_cover(work, u, v);
        mismatch = true;
      }
    }
    if (!mismatch) break;
  }
  ArcModel out{m.n, 0, work.order};
  if (!arc_model_realizes(g, out))
    throw InternalError("normalization broke the realization");
  for (size_t i = 0; i < pairs.size(); ++i) {
    auto [u, v] = pairs[i];
    if (geometric_pair_kind(out, u, v) != want[i])
      throw InternalError("normalization failed to converge");
  }
  return out;
}

}  // namespace hgraph
