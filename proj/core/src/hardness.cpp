#include "hgraph/hardness.hpp"

#include <algorithm>
#include <bit>

#include "hgraph/interval.hpp"

namespace hgraph {

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> queue{s};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int u = first_bit(g.neighbors(v)); u >= 0; u = next_bit(g.neighbors(v), u)) {
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<TrackSplit> is_two_track_bruteforce(const Graph& g) {
  if (!is_bipartite(g)) throw ContractViolation("2-track test needs a bipartite graph");
  int m = g.edge_count();
  if (m > 16) throw SearchLimit("2-track scan capped at 16 edges");
  std::uint32_t full = m == 32 ? ~0u : (1u << m) - 1;

  auto subgraph = [&](std::uint32_t mask) {
    Graph sg(g.n());
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) sg.add_edge(g.edges()[i].first, g.edges()[i].second);
    return sg;
  };
  // memoized intervality per edge subset
  std::vector<char> interval_memo(full + 1, -1);
  auto is_interval_mask = [&](std::uint32_t mask) {
    if (interval_memo[mask] < 0)
      interval_memo[mask] = recognize_interval(subgraph(mask)).has_value() ? 1 : 0;
    return interval_memo[mask] == 1;
  };
  // has_super[mask]: some interval superset of mask exists; witness kept
  std::vector<char> has_super(full + 1, 0);
  std::vector<std::uint32_t> witness(full + 1, 0);
  std::vector<std::uint32_t> by_popcount(full + 1);
  for (std::uint32_t x = 0; x <= full; ++x) by_popcount[x] = x;
  std::stable_sort(by_popcount.begin(), by_popcount.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) > std::popcount(b);
  });
  for (std::uint32_t mask : by_popcount) {
    if (is_interval_mask(mask)) {
      has_super[mask] = 1;
      witness[mask] = mask;
      continue;
    }
    for (int i = 0; i < m; ++i) {
      std::uint32_t sup = mask | (1u << i);
      if (sup != mask && has_super[sup]) {
        has_super[mask] = 1;
        witness[mask] = witness[sup];
        break;
      }
    }
  }
  for (std::uint32_t a = 0; a <= full; ++a) {
    if (!is_interval_mask(a)) continue;
    std::uint32_t rest = full & ~a;
    if (!has_super[rest]) continue;
    TrackSplit split;
    for (int i = 0; i < m; ++i) {
      if (a & (1u << i)) split.track1.push_back(g.edges()[i]);
      if (witness[rest] & (1u << i)) split.track2.push_back(g.edges()[i]);
    }
    return split;
  }
  return std::nullopt;
}

Graph butterfly_graph() {
  Graph b(5);
  b.add_edge(0, 1);
  b.add_edge(0, 2);
  b.add_edge(1, 2);
  b.add_edge(2, 3);
  b.add_edge(2, 4);
  b.add_edge(3, 4);
  return b;
}

Graph butterfly_gadget(const Graph& g) {
  if (!is_bipartite(g)) throw ContractViolation("butterfly gadget needs a bipartite graph");
  int n = g.n(), m = g.edge_count();
  // layout: V(g), then one w per edge, then S = centre, 4 mids, 4 leaves
  int base = n + m;
  Graph out(base + 9);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) out.add_edge(u, v);
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edges()[e];
    for (int x = 0; x < n; ++x)
      if (x != u && x != v) out.add_edge(n + e, x);
  }
  int centre = base;
  for (int i = 0; i < 4; ++i) {
    out.add_edge(centre, base + 1 + i);          // centre - mid_i
    out.add_edge(base + 1 + i, base + 5 + i);    // mid_i - leaf_i
  }
  for (int x = 0; x < n; ++x)
    for (int s = 0; s < 9; ++s) out.add_edge(x, base + s);
  return out;
}

namespace {

struct GridPath {
  int lo = 0, hi = -1;  // grid span actually used
};

// interval model of (V, track) normalized onto 0..span-1
std::vector<std::pair<int, int>> track_intervals(const Graph& g, const std::vector<Edge>& track,
                                                 int* span) {
  Graph tg(g.n());
  for (auto [u, v] : track) tg.add_edge(u, v);
  auto m = recognize_interval(tg);
  if (!m) throw ContractViolation("track is not an interval graph");
  int lo = m->iv[0].first, hi = m->iv[0].second;
  for (auto [a, b] : m->iv) {
    lo = std::min(lo, a);
    hi = std::max(hi, b);
  }
  std::vector<std::pair<int, int>> out;
  for (auto [a, b] : m->iv) out.emplace_back(a - lo, b - lo);
  *span = hi - lo + 1;
  return out;
}

}  // namespace

HModel build_butterfly_model_from_tracks(const Graph& g, const std::vector<Edge>& track1,
                                         const std::vector<Edge>& track2) {
  if (!is_bipartite(g)) throw ContractViolation("butterfly model needs a bipartite graph");
  // the union must cover E(g)
  for (auto [u, v] : g.edges()) {
    bool covered = std::find(track1.begin(), track1.end(), Edge{u, v}) != track1.end() ||
                   std::find(track2.begin(), track2.end(), Edge{u, v}) != track2.end();
    if (!covered) throw ContractViolation("tracks do not cover the edge set");
  }
  int span1 = 0, span2 = 0;
  auto iv1 = track_intervals(g, track1, &span1);
  auto iv2 = track_intervals(g, track2, &span2);

  int n = g.n(), m = g.edge_count();

  // host: butterfly with 0=lam1, 1=lam2, 2=centre x0, 3=lam3, 4=lam4;
  // canonical edges (0,1) (0,2) (1,2) (2,3) (2,4) (3,4)
  HostGraph host(butterfly_graph(), {span1, 1, 1, 1, 1, span2});
  int p1_base = host.first_inserted(0);  // interior of P_1, lam1 side first
  int mu1 = host.first_inserted(1);
  int mu2 = host.first_inserted(2);
  int mu3 = host.first_inserted(3);
  int mu4 = host.first_inserted(4);
  int p2_base = host.first_inserted(5);

  const int lam[4] = {0, 1, 3, 4};
  const int mu[4] = {mu1, mu2, mu3, mu4};

  Bits x_all;  // V(X): centre, mids, leaves
  x_all.set(2);
  for (int i = 0; i < 4; ++i) {
    x_all.set(lam[i]);
    x_all.set(mu[i]);
  }

  auto p1_cover = [&](std::pair<int, int> iv) {
    Bits b;
    for (int x = iv.first; x <= iv.second; ++x) b.set(p1_base + x);
    return b;
  };
  auto p2_cover = [&](std::pair<int, int> iv) {
    Bits b;
    for (int x = iv.first; x <= iv.second; ++x) b.set(p2_base + x);
    return b;
  };

  Bits everything;
  for (int x = 0; x < host.realized().n(); ++x) everything.set(x);

  HModel model;
  model.host = host;
  model.phi.assign(n + m + 9, Bits());

  // original vertices: the negative of their two track intervals
  for (int v = 0; v < n; ++v)
    model.phi[v] = everything & ~(p1_cover(iv1[v]) | p2_cover(iv2[v]));

  // edge vertices: the track intersection on a witnessing track
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edges()[e];
    bool on1 = std::find(track1.begin(), track1.end(), Edge{u, v}) != track1.end();
    Bits w;
    if (on1) {
      std::pair<int, int> meet{std::max(iv1[u].first, iv1[v].first),
                               std::min(iv1[u].second, iv1[v].second)};
      if (meet.first > meet.second) throw ContractViolation("track-1 models do not meet");
      w = p1_cover(meet);
    } else {
      std::pair<int, int> meet{std::max(iv2[u].first, iv2[v].first),
                               std::min(iv2[u].second, iv2[v].second)};
      if (meet.first > meet.second) throw ContractViolation("track-2 models do not meet");
      w = p2_cover(meet);
    }
    model.phi[n + e] = w;
  }

  // S onto X: centre covers x0 and the mids, mid_i its own mu and leaf,
  // leaf_i just its lambda
  int sbase = n + m;
  Bits centre_set;
  centre_set.set(2);
  for (int i = 0; i < 4; ++i) centre_set.set(mu[i]);
  model.phi[sbase] = centre_set;
  for (int i = 0; i < 4; ++i) {
    Bits mid;
    mid.set(mu[i]);
    mid.set(lam[i]);
    model.phi[sbase + 1 + i] = mid;
    Bits leaf;
    leaf.set(lam[i]);
    model.phi[sbase + 5 + i] = leaf;
  }

  auto report = verify_model(butterfly_gadget(g), model);
  if (!report.ok) throw InternalError("butterfly model failed verification");
  return model;
}

namespace {

// all simple cycles (as vertex sets with their edge sets), tiny graphs only
struct Cycle {
  std::vector<int> verts;  // in cycle order
  std::vector<Edge> edges;
};

std::vector<Cycle> all_cycles(const Graph& g) {
  std::vector<Cycle> out;
  std::vector<int> path;
  Bits on_path;
  auto rec = [&](auto&& self, int start, int last) -> void {
    for (int w = first_bit(g.neighbors(last)); w >= 0; w = next_bit(g.neighbors(last), w)) {
      if (w == start && path.size() >= 3) {
        // canonical: start is minimal, second < last vertex
        if (path[1] < path.back()) {
          Cycle c;
          c.verts = path;
          for (size_t i = 0; i < path.size(); ++i) {
            int a = path[i], b = path[(i + 1) % path.size()];
            c.edges.emplace_back(std::min(a, b), std::max(a, b));
          }
          std::sort(c.edges.begin(), c.edges.end());
          out.push_back(c);
        }
        continue;
      }
      if (w <= start || on_path.test(w)) continue;
      path.push_back(w);
      on_path.set(w);
      self(self, start, w);
      on_path.reset(w);
      path.pop_back();
    }
  };
  for (int s = 0; s < g.n(); ++s) {
    path = {s};
    on_path.reset();
    on_path.set(s);
    rec(rec, s, s);
  }
  return out;
}

// do the two cycles share nothing or exactly a path?
bool shares_path_or_disjoint(const Graph& g, const Cycle& a, const Cycle& b) {
  Bits va = set_to_bits(a.verts), vb = set_to_bits(b.verts);
  Bits shared = va & vb;
  if (shared.none()) return true;
  std::vector<Edge> shared_edges;
  for (const Edge& e : a.edges)
    if (std::find(b.edges.begin(), b.edges.end(), e) != b.edges.end()) shared_edges.push_back(e);
  // the shared vertices with shared edges must form one path
  Graph sg(g.n());
  for (auto [u, v] : shared_edges) sg.add_edge(u, v);
  if (shared_edges.size() + 1 != shared.count()) return false;  // path has |V|-1 edges
  Bits seen;
  int start = first_bit(shared);
  // walk the shared subgraph; every vertex degree <= 2, exactly 2 ends
  int deg_sum = 0, ends = 0;
  for (int v = first_bit(shared); v >= 0; v = next_bit(shared, v)) {
    int d = static_cast<int>((sg.neighbors(v) & shared).count());
    if (d > 2) return false;
    if (d <= 1) ++ends;
    deg_sum += d;
  }
  (void)start;
  (void)seen;
  if (shared.count() == 1) return true;
  return ends == 2 && is_connected_subset(sg, shared);
}

}  // namespace

TwoCycleGadget general_two_cycle_gadget(const Graph& h, const Graph& g) {
  if (!is_bipartite(g)) throw ContractViolation("two-cycle gadget needs a bipartite graph");
  auto cycles = all_cycles(h);
  int c1 = -1, c2 = -1;
  Edge e1{-1, -1}, e2{-1, -1};
  for (size_t i = 0; i < cycles.size() && c1 < 0; ++i) {
    for (size_t j = i + 1; j < cycles.size() && c1 < 0; ++j) {
      if (!shares_path_or_disjoint(h, cycles[i], cycles[j])) continue;
      Edge f1{-1, -1}, f2{-1, -1};
      for (const Edge& e : cycles[i].edges)
        if (std::find(cycles[j].edges.begin(), cycles[j].edges.end(), e) == cycles[j].edges.end())
          f1 = e;
      for (const Edge& e : cycles[j].edges)
        if (std::find(cycles[i].edges.begin(), cycles[i].edges.end(), e) == cycles[i].edges.end())
          f2 = e;
      if (f1.first >= 0 && f2.first >= 0) {
        c1 = static_cast<int>(i);
        c2 = static_cast<int>(j);
        e1 = f1;
        e2 = f2;
      }
    }
  }
  if (c1 < 0) throw ContractViolation("host has no usable pair of cycles");

  TwoCycleGadget out;

  // H' = H subdivided four times per edge
  HostGraph hp(h, std::vector<int>(h.edge_count(), 4));
  out.h_prime_n = hp.realized().n();
  auto edge_index = [&](const Edge& e) {
    return static_cast<int>(std::find(h.edges().begin(), h.edges().end(), e) - h.edges().begin());
  };
  // middle edge of a 4-subdivided edge joins inserted vertices 1 and 2
  auto middle_edge = [&](const Edge& e) {
    int fi = hp.first_inserted(edge_index(e));
    return Edge{fi + 1, fi + 2};
  };
  Edge mid1 = middle_edge(e1), mid2 = middle_edge(e2);
  Graph x(out.h_prime_n);
  for (auto [u, v] : hp.realized().edges())
    if (Edge{u, v} != mid1 && Edge{u, v} != mid2) x.add_edge(u, v);
  out.x_graph = x;

  // realized vertices of the two cycles
  Bits cyc_verts;
  for (int ci : {c1, c2}) {
    for (int v : cycles[ci].verts) cyc_verts.set(v);
    for (const Edge& e : cycles[ci].edges) {
      int fi = hp.first_inserted(edge_index(e));
      for (int k = 0; k < 4; ++k) cyc_verts.set(fi + k);
    }
  }

  // G' = clique on V(g) + edge vertices + X
  int n = g.n(), m = g.edge_count();
  int xbase = n + m;
  Graph gp(xbase + out.h_prime_n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) gp.add_edge(u, v);
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edges()[e];
    for (int w = 0; w < n; ++w)
      if (w != u && w != v) gp.add_edge(n + e, w);
  }
  for (auto [u, v] : x.edges()) gp.add_edge(xbase + u, xbase + v);
  for (int v = 0; v < n; ++v)
    for (int w = first_bit(cyc_verts); w >= 0; w = next_bit(cyc_verts, w))
      gp.add_edge(v, xbase + w);
  out.g_prime = gp;

  // explicit model of X on a subdivision of H: each X-edge gets its own
  // midpoint, so subdivide every base edge nine times
  HostGraph xhost(h, std::vector<int>(h.edge_count(), 9));
  out.x_model.host = xhost;
  out.x_model.phi.assign(out.h_prime_n, Bits());
  // base vertices sit at themselves plus the first midpoint of each incident
  // edge side; H'-inserted vertex j of edge e sits at host inserted 2j+1 with
  // midpoints 2j and 2j+2
  for (int e = 0; e < h.edge_count(); ++e) {
    auto [u, v] = h.edges()[e];
    int hp_fi = hp.first_inserted(e);
    int xh_fi = xhost.first_inserted(e);
    bool u_side_deleted = false, v_side_deleted = false;
    (void)u_side_deleted;
    (void)v_side_deleted;
    Edge mid = middle_edge(h.edges()[e]);
    // five X-edges along this base edge unless one is deleted
    auto x_has = [&](int a, int b) { return x.has_edge(a, b); };
    if (x_has(u, hp_fi + 0)) {
      out.x_model.phi[u].set(xh_fi + 0);
      out.x_model.phi[hp_fi + 0].set(xh_fi + 0);
    }
    for (int j = 0; j < 4; ++j) out.x_model.phi[hp_fi + j].set(xh_fi + 2 * j + 1);
    for (int j = 0; j + 1 < 4; ++j)
      if (x_has(hp_fi + j, hp_fi + j + 1)) {
        out.x_model.phi[hp_fi + j].set(xh_fi + 2 * j + 2);
        out.x_model.phi[hp_fi + j + 1].set(xh_fi + 2 * j + 2);
      }
    if (x_has(hp_fi + 3, v)) {
      out.x_model.phi[hp_fi + 3].set(xh_fi + 8);
      out.x_model.phi[v].set(xh_fi + 8);
    }
    (void)mid;
  }
  for (int v = 0; v < h.n(); ++v) out.x_model.phi[v].set(v);
  auto report = verify_model(out.x_graph, out.x_model);
  if (!report.ok) throw InternalError("X model failed verification");
  return out;
}

}  // namespace hgraph
