#include "hgraph/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace hgraph {

std::vector<HostGraph> enumerate_subdivisions(const Graph& h, int cap_per_edge) {
  std::vector<HostGraph> out;
  int m = h.edge_count();
  std::vector<int> counts(m, 0);
  for (;;) {
    out.emplace_back(h, counts);
    int i = 0;
    while (i < m && counts[i] == cap_per_edge) counts[i++] = 0;
    if (i == m) break;
    ++counts[i];
  }
  return out;
}

std::vector<Bits> connected_subsets(const Graph& g) {
  int n = g.n();
  if (n > 24) throw ContractViolation("connected_subsets: graph too large");
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  std::vector<Bits> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::uint32_t comp = mask & (~mask + 1);  // lowest bit
    for (;;) {
      std::uint32_t nb = 0;
      for (std::uint32_t m2 = comp; m2; m2 &= m2 - 1) nb |= adj[std::countr_zero(m2)];
      std::uint32_t grown = (comp | nb) & mask;
      if (grown == comp) break;
      comp = grown;
    }
    if (comp != mask) continue;
    Bits b;
    for (std::uint32_t m2 = mask; m2; m2 &= m2 - 1) b.set(std::countr_zero(m2));
    out.push_back(b);
  }
  // candidate subsets by increasing size, then lexicographically
  std::stable_sort(out.begin(), out.end(), [](const Bits& a, const Bits& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return bits_to_set(a) < bits_to_set(b);
  });
  return out;
}

namespace {

struct HostSearch {
  const Graph& g;
  const Graph& host;
  const std::vector<Bits>& candidates;
  const std::vector<Bits>& must_contain;  // per g-vertex, host vertices forced into phi(v)
  std::uint64_t& nodes;
  std::uint64_t budget;
  std::vector<int> vorder;
  std::vector<Bits> phi;

  HostSearch(const Graph& g, const Graph& host, const std::vector<Bits>& candidates,
             const std::vector<Bits>& must, std::uint64_t& nodes, std::uint64_t budget)
      : g(g), host(host), candidates(candidates), must_contain(must), nodes(nodes),
        budget(budget) {
    phi.assign(g.n(), Bits());
    vorder.resize(g.n());
    std::iota(vorder.begin(), vorder.end(), 0);
    std::stable_sort(vorder.begin(), vorder.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
  }

  bool rec(size_t idx) {
    if (idx == vorder.size()) return true;
    int v = vorder[idx];
    Bits forbidden;  // union of placed non-neighbour images
    for (size_t j = 0; j < idx; ++j) {
      int u = vorder[j];
      if (!g.has_edge(u, v)) forbidden |= phi[u];
    }
    for (const Bits& s : candidates) {
      if (++nodes > budget) throw SearchLimit("host-model search budget exhausted");
      if ((s & forbidden).any()) continue;
      if ((must_contain[v] & ~s).any()) continue;
      bool ok = true;
      for (size_t j = 0; j < idx && ok; ++j) {
        int u = vorder[j];
        if (g.has_edge(u, v) && (s & phi[u]).none()) ok = false;
      }
      if (!ok) continue;
      phi[v] = s;
      if (rec(idx + 1)) return true;
      phi[v].reset();
    }
    return false;
  }
};

// automorphisms of a small base graph, as vertex permutations
std::vector<std::vector<int>> graph_automorphisms(const Graph& g) {
  std::vector<std::vector<int>> out;
  if (g.n() > 8) return out;  // callers only dedup tiny hosts
  std::vector<int> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if (!g.has_edge(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

std::optional<HModel> hmodel_bruteforce_hosts(const Graph& g, const std::vector<HostGraph>& hosts,
                                              const std::vector<HostPointConstraint>& constraints,
                                              std::uint64_t budget) {
  std::uint64_t nodes = 0;
  for (const HostGraph& host : hosts) {
    std::vector<Bits> must(g.n());
    for (const auto& pc : constraints)
      for (int v = first_bit(pc.clique); v >= 0; v = next_bit(pc.clique, v))
        must[v].set(pc.base_vertex);
    std::vector<Bits> candidates = connected_subsets(host.realized());
    HostSearch search(g, host.realized(), candidates, must, nodes, budget);
    if (search.rec(0)) {
      HModel m{host, search.phi};
      if (!verify_model(g, m).ok) throw InternalError("oracle model fails verification");
      return m;
    }
  }
  return std::nullopt;
}

std::optional<HModel> hmodel_bruteforce(const Graph& g, const Graph& h, int cap_per_edge,
                                        std::uint64_t budget) {
  if (g.n() > 10) throw SearchLimit("host-model search size cap exceeded");
  std::vector<HostGraph> hosts = enumerate_subdivisions(h, cap_per_edge);
  // dedup subdivision profiles under base automorphisms
  auto autos = graph_automorphisms(h);
  if (autos.size() > 1) {
    auto edge_index = [&](int u, int v) {
      if (u > v) std::swap(u, v);
      const auto& es = h.edges();
      return static_cast<int>(std::find(es.begin(), es.end(), Edge{u, v}) - es.begin());
    };
    std::vector<std::vector<int>> seen;
    std::vector<HostGraph> kept;
    for (const HostGraph& host : hosts) {
      std::vector<int> canon = host.subdivision();
      for (const auto& perm : autos) {
        std::vector<int> mapped(host.subdivision().size());
        for (int e = 0; e < h.edge_count(); ++e) {
          auto [u, v] = h.edges()[e];
          mapped[edge_index(perm[u], perm[v])] = host.subdivision()[e];
        }
        canon = std::min(canon, mapped);
      }
      if (std::find(seen.begin(), seen.end(), canon) == seen.end()) {
        seen.push_back(canon);
        kept.push_back(host);
      }
    }
    hosts = std::move(kept);
  }
  return hmodel_bruteforce_hosts(g, hosts, {}, budget);
}

// ---------------------------------------------------------------------------
// endpoint-sequence oracles

void interval_bruteforce_all(const Graph& g, std::uint64_t budget,
                             const std::function<bool(const IntervalModel&)>& visit) {
  int n = g.n();
  if (n == 0) {
    visit(IntervalModel{});
    return;
  }
  std::uint64_t nodes = 0;
  std::vector<int> start(n, -1), end(n, -1);
  Bits open, done;
  // place 2n endpoint events left to right; simultaneous openness forces
  // intersection, so adjacency is checked eagerly
  auto rec = [&](auto&& self, int position) -> bool {
    if (position == 2 * n) {
      IntervalModel m;
      m.iv.resize(n);
      for (int v = 0; v < n; ++v) m.iv[v] = {start[v], end[v]};
      return visit(m);
    }
    if (++nodes > budget) throw SearchLimit("interval oracle budget exhausted");
    for (int v = 0; v < n; ++v) {
      if (start[v] < 0) {
        // opening v: it will meet every currently open u
        bool ok = true;
        for (int u = first_bit(open); u >= 0 && ok; u = next_bit(open, u))
          if (!g.has_edge(u, v)) ok = false;
        // and it can no longer meet the finished ones
        for (int u = first_bit(done); u >= 0 && ok; u = next_bit(done, u))
          if (g.has_edge(u, v)) ok = false;
        if (!ok) continue;
        start[v] = position;
        open.set(v);
        if (self(self, position + 1)) return true;
        open.reset(v);
        start[v] = -1;
      } else if (end[v] < 0) {
        end[v] = position;
        open.reset(v);
        done.set(v);
        if (self(self, position + 1)) return true;
        done.reset(v);
        open.set(v);
        end[v] = -1;
      }
    }
    return false;
  };
  rec(rec, 0);
}

std::optional<IntervalModel> interval_bruteforce(const Graph& g, std::uint64_t budget) {
  if (g.n() > 9) throw SearchLimit("interval oracle size cap exceeded");
  std::optional<IntervalModel> out;
  interval_bruteforce_all(g, budget, [&](const IntervalModel& m) {
    out = m;
    return true;
  });
  if (out && !interval_model_realizes(g, *out))
    throw InternalError("interval oracle produced a bad model");
  return out;
}

void ca_bruteforce_all(const Graph& g, std::uint64_t budget,
                       const std::function<bool(const ArcModel&)>& visit) {
  int n = g.n();
  if (n == 0) {
    visit(ArcModel{0, 0, {}});
    return;
  }
  std::uint64_t nodes = 0;
  int len = 2 * n;
  std::vector<int> seq(len, -1);
  std::vector<int> pos(len, -1);  // per symbol
  auto covers = [&](int v, int p) {
    int s = pos[2 * v], e = pos[2 * v + 1];
    if (s <= e) return s <= p && p <= e;
    return p >= s || p <= e;
  };
  auto rec = [&](auto&& self, int position) -> bool {
    if (position == len) {
      ArcModel m{n, 0, seq};
      if (!arc_model_realizes(g, m)) return false;
      return visit(m);
    }
    if (++nodes > budget) throw SearchLimit("circular-arc oracle budget exhausted");
    for (int sym = position == 0 ? 0 : 1; sym < len; ++sym) {
      // canonical form: vertex 0's start occupies position 0
      if (position == 0 && sym != 0) break;
      if (pos[sym] >= 0) continue;
      int v = sym / 2;
      pos[sym] = position;
      seq[position] = sym;
      bool ok = true;
      bool v_complete = pos[2 * v] >= 0 && pos[2 * v + 1] >= 0;
      for (int u = 0; u < n && ok; ++u) {
        if (u == v) continue;
        bool u_complete = pos[2 * u] >= 0 && pos[2 * u + 1] >= 0;
        if (u_complete && covers(u, position) && !g.has_edge(u, v)) ok = false;
        if (ok && v_complete && u_complete) {
          bool meet = covers(u, pos[2 * v]) || covers(u, pos[2 * v + 1]) || covers(v, pos[2 * u]);
          if (meet != g.has_edge(u, v)) ok = false;
        }
        if (ok && v_complete && !u_complete && pos[2 * u] >= 0 && covers(v, pos[2 * u]) &&
            !g.has_edge(u, v))
          ok = false;
        if (ok && v_complete && !u_complete && pos[2 * u + 1] >= 0 &&
            covers(v, pos[2 * u + 1]) && !g.has_edge(u, v))
          ok = false;
      }
      if (ok && self(self, position + 1)) return true;
      pos[sym] = -1;
      seq[position] = -1;
    }
    return false;
  };
  rec(rec, 0);
}

std::optional<ArcModel> ca_bruteforce(const Graph& g, std::uint64_t budget) {
  if (g.n() > 8) throw SearchLimit("circular-arc oracle size cap exceeded");
  std::optional<ArcModel> out;
  ca_bruteforce_all(g, budget, [&](const ArcModel& m) {
    out = m;
    return true;
  });
  return out;
}

}  // namespace hgraph
