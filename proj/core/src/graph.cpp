#include "hgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace hgraph {

VertexSet bits_to_set(const Bits& b) {
  VertexSet out;
  for (int v = first_bit(b); v >= 0; v = next_bit(b, v)) out.push_back(v);
  return out;
}

Bits set_to_bits(const VertexSet& s) {
  Bits b;
  for (int v : s) b.set(v);
  return b;
}

int first_bit(const Bits& b) {
  std::size_t i = b._Find_first();
  return i == b.size() ? -1 : static_cast<int>(i);
}

int next_bit(const Bits& b, int prev) {
  std::size_t i = b._Find_next(static_cast<std::size_t>(prev));
  return i == b.size() ? -1 : static_cast<int>(i);
}

bool is_subset(const Bits& a, const Bits& b) { return (a & ~b).none(); }

std::string format_vertex_set(const Bits& b) {
  std::string out = "{";
  bool sep = false;
  for (int v = first_bit(b); v >= 0; v = next_bit(b, v)) {
    if (sep) out += ",";
    out += std::to_string(v);
    sep = true;
  }
  return out + "}";
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw ContractViolation("graph size out of range");
  adj_.assign(n_, Bits());
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw ContractViolation("self-loop");
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw ContractViolation("edge endpoint out of range");
  if (u > v) std::swap(u, v);
  if (adj_[u].test(v)) throw ContractViolation("duplicate edge");
  adj_[u].set(v);
  adj_[v].set(u);
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v}), Edge{u, v});
}

Bits Graph::closed_neighborhood(int v) const {
  Bits b = adj_[v];
  b.set(v);
  return b;
}

Bits Graph::neighbors_of_set(const Bits& u) const {
  Bits out;
  for (int v = first_bit(u); v >= 0; v = next_bit(u, v)) out |= adj_[v];
  return out & ~u;
}

Bits Graph::all_vertices() const {
  Bits b;
  for (int v = 0; v < n_; ++v) b.set(v);
  return b;
}

Graph Graph::induced(const Bits& keep, std::vector<int>* old_of_new) const {
  std::vector<int> old_ids = bits_to_set(keep);
  std::vector<int> new_id(n_, -1);
  for (size_t i = 0; i < old_ids.size(); ++i) new_id[old_ids[i]] = static_cast<int>(i);
  Graph out(static_cast<int>(old_ids.size()));
  for (auto [u, v] : edges_)
    if (new_id[u] >= 0 && new_id[v] >= 0) out.add_edge(new_id[u], new_id[v]);
  if (old_of_new) *old_of_new = std::move(old_ids);
  return out;
}

Graph load_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "n") {
      if (n >= 0) fail("repeated n line");
      if (!(ls >> n) || n < 0 || n > kMaxVertices) fail("bad vertex count");
    } else if (tag == "e") {
      if (n < 0) fail("edge before n line");
      int u, v;
      if (!(ls >> u >> v)) fail("malformed edge line");
      if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex out of range");
      if (u == v) fail("self-loop");
      Edge e{std::min(u, v), std::max(u, v)};
      if (std::find(edges.begin(), edges.end(), e) != edges.end()) fail("duplicate edge");
      edges.push_back(e);
    } else if (tag == "cycle") {
      // consumed by the host-spec loader; plain graphs ignore it
      continue;
    } else {
      fail("unknown line tag '" + tag + "'");
    }
    std::string extra;
    if (tag != "cycle" && (ls >> extra)) fail("trailing tokens");
  }
  if (n < 0) throw ParseError("missing n line");
  return Graph(n, edges);
}

Graph load_edge_list_string(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.n() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
  return out.str();
}

std::vector<Bits> connected_component_masks(const Graph& g) {
  std::vector<Bits> comps;
  Bits seen;
  for (int s = 0; s < g.n(); ++s) {
    if (seen.test(s)) continue;
    Bits comp;
    comp.set(s);
    Bits frontier = comp;
    while (frontier.any()) {
      Bits next;
      for (int v = first_bit(frontier); v >= 0; v = next_bit(frontier, v)) next |= g.neighbors(v);
      frontier = next & ~comp;
      comp |= frontier;
    }
    comps.push_back(comp);
    seen |= comp;
  }
  return comps;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  for (const Bits& c : connected_component_masks(g)) out.push_back(bits_to_set(c));
  return out;
}

bool is_connected_subset(const Graph& g, const Bits& s) {
  int start = first_bit(s);
  if (start < 0) return false;
  Bits comp;
  comp.set(start);
  Bits frontier = comp;
  while (frontier.any()) {
    Bits next;
    for (int v = first_bit(frontier); v >= 0; v = next_bit(frontier, v)) next |= g.neighbors(v);
    frontier = next & s & ~comp;
    comp |= frontier;
  }
  return comp == s;
}

namespace {

void bron_kerbosch(const Graph& g, Bits r, Bits p, Bits x, std::vector<Bits>& out) {
  if (p.none() && x.none()) {
    out.push_back(r);
    return;
  }
  // pivot: vertex of p|x with most neighbours in p
  Bits px = p | x;
  int pivot = -1, best = -1;
  for (int v = first_bit(px); v >= 0; v = next_bit(px, v)) {
    int cnt = static_cast<int>((p & g.neighbors(v)).count());
    if (cnt > best) {
      best = cnt;
      pivot = v;
    }
  }
  Bits cand = p & ~g.neighbors(pivot);
  for (int v = first_bit(cand); v >= 0; v = next_bit(cand, v)) {
    Bits rv = r;
    rv.set(v);
    bron_kerbosch(g, rv, p & g.neighbors(v), x & g.neighbors(v), out);
    p.reset(v);
    x.set(v);
  }
}

}  // namespace

std::vector<Bits> maximal_clique_masks(const Graph& g) {
  std::vector<Bits> out;
  if (g.n() == 0) return out;
  bron_kerbosch(g, Bits(), g.all_vertices(), Bits(), out);
  std::sort(out.begin(), out.end(), [](const Bits& a, const Bits& b) {
    return bits_to_set(a) < bits_to_set(b);
  });
  return out;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  for (const Bits& c : maximal_clique_masks(g)) out.push_back(bits_to_set(c));
  return out;
}

bool is_clique(const Graph& g, const Bits& s) {
  for (int u = first_bit(s); u >= 0; u = next_bit(s, u))
    if (!is_subset(s & ~Bits().set(u), g.neighbors(u))) return false;
  return true;
}

bool is_maximal_clique(const Graph& g, const Bits& s) {
  if (!is_clique(g, s)) return false;
  for (int v = 0; v < g.n(); ++v) {
    if (s.test(v)) continue;
    if (is_subset(s, g.neighbors(v))) return false;
  }
  return s.any();
}

std::vector<int> lex_bfs_order(const Graph& g) {
  // partition refinement, O(n^2) is fine here
  std::vector<int> order;
  std::deque<std::vector<int>> parts;
  std::vector<int> all(g.n());
  for (int i = 0; i < g.n(); ++i) all[i] = i;
  if (!all.empty()) parts.push_back(all);
  while (!parts.empty()) {
    int v = parts.front().front();
    parts.front().erase(parts.front().begin());
    if (parts.front().empty()) parts.pop_front();
    order.push_back(v);
    std::deque<std::vector<int>> next;
    for (auto& part : parts) {
      std::vector<int> in, outp;
      for (int u : part) (g.has_edge(u, v) ? in : outp).push_back(u);
      if (!in.empty()) next.push_back(in);
      if (!outp.empty()) next.push_back(outp);
    }
    parts = std::move(next);
  }
  return order;
}

bool is_chordal(const Graph& g) {
  std::vector<int> order = lex_bfs_order(g);
  std::reverse(order.begin(), order.end());  // elimination order
  std::vector<int> pos(g.n());
  for (int i = 0; i < g.n(); ++i) pos[order[i]] = i;
  for (int i = 0; i < g.n(); ++i) {
    int v = order[i];
    // later neighbours of v in elimination order
    Bits later;
    for (int u = first_bit(g.neighbors(v)); u >= 0; u = next_bit(g.neighbors(v), u))
      if (pos[u] > i) later.set(u);
    int p = -1, pbest = g.n() + 1;
    for (int u = first_bit(later); u >= 0; u = next_bit(later, u))
      if (pos[u] < pbest) {
        pbest = pos[u];
        p = u;
      }
    if (p < 0) continue;
    Bits rest = later;
    rest.reset(p);
    if (!is_subset(rest, g.neighbors(p))) return false;
  }
  return true;
}

namespace {

// shortest induced path from x to y inside `allowed`, returned without x,y
std::optional<std::vector<int>> shortest_path_within(const Graph& g, int x, int y,
                                                     const Bits& allowed) {
  std::vector<int> prev(g.n(), -2);
  std::deque<int> q;
  q.push_back(x);
  prev[x] = -1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int u = first_bit(g.neighbors(v)); u >= 0; u = next_bit(g.neighbors(v), u)) {
      if (u != y && !allowed.test(u)) continue;
      if (prev[u] != -2) continue;
      prev[u] = v;
      if (u == y) {
        std::vector<int> path;
        for (int w = y; w != -1; w = prev[w]) path.push_back(w);
        std::reverse(path.begin(), path.end());
        return path;
      }
      q.push_back(u);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<VertexSet> find_hole(const Graph& g) {
  // For every vertex v and non-adjacent pair x,y of its neighbours, look for
  // an induced x-y path avoiding N[v]; v plus the path is a hole.
  for (int v = 0; v < g.n(); ++v) {
    VertexSet nb = bits_to_set(g.neighbors(v));
    for (size_t i = 0; i < nb.size(); ++i) {
      for (size_t j = i + 1; j < nb.size(); ++j) {
        int x = nb[i], y = nb[j];
        if (g.has_edge(x, y)) continue;
        Bits allowed = g.all_vertices() & ~g.closed_neighborhood(v);
        allowed.set(x);
        allowed.set(y);
        auto path = shortest_path_within(g, x, y, allowed);
        if (!path) continue;
        // shortest paths are induced; every interior vertex avoids N[v]
        VertexSet hole;
        hole.push_back(v);
        for (int w : *path) hole.push_back(w);
        if (hole.size() >= 4) return hole;
      }
    }
  }
  return std::nullopt;
}

TwinReduction reduce_twins_universal(const Graph& g) {
  TwinReduction res;
  std::vector<int> alive;  // original ids still present
  for (int v = 0; v < g.n(); ++v) alive.push_back(v);
  std::vector<int> rep(g.n());
  for (int v = 0; v < g.n(); ++v) rep[v] = v;

  // work on a mutable adjacency over original ids
  std::vector<Bits> adj(g.n());
  for (int v = 0; v < g.n(); ++v) adj[v] = g.neighbors(v);

  auto remove_vertex = [&](int v) {
    for (int u : alive)
      if (u != v) adj[u].reset(v);
    alive.erase(std::find(alive.begin(), alive.end(), v));
  };

  bool changed = true;
  while (changed) {
    changed = false;
    // twins first: adjacent pair with equal closed neighbourhoods
    for (size_t i = 0; i < alive.size() && !changed; ++i) {
      for (size_t j = i + 1; j < alive.size() && !changed; ++j) {
        int u = alive[i], v = alive[j];
        if (!adj[u].test(v)) continue;
        Bits cu = adj[u];
        cu.set(u);
        Bits cv = adj[v];
        cv.set(v);
        if (cu == cv) {
          res.merged_twins.emplace_back(u, v);
          remove_vertex(v);
          rep[v] = u;
          changed = true;
        }
      }
    }
    if (changed) continue;
    // then a universal vertex (never empty the graph entirely)
    if (alive.size() >= 2) {
      for (int v : alive) {
        Bits others;
        for (int u : alive)
          if (u != v) others.set(u);
        if (adj[v] == others) {
          res.removed_universal.push_back(v);
          remove_vertex(v);
          rep[v] = -1;
          changed = true;
          break;
        }
      }
    }
  }

  // compress representative chains
  auto find_rep = [&](int v) {
    while (v >= 0 && rep[v] != v) v = rep[v];
    return v;
  };

  std::vector<int> new_id(g.n(), -1);
  for (size_t i = 0; i < alive.size(); ++i) new_id[alive[i]] = static_cast<int>(i);
  res.reduced = Graph(static_cast<int>(alive.size()));
  for (size_t i = 0; i < alive.size(); ++i)
    for (size_t j = i + 1; j < alive.size(); ++j)
      if (adj[alive[i]].test(alive[j]))
        res.reduced.add_edge(static_cast<int>(i), static_cast<int>(j));
  res.origin_to_reduced.assign(g.n(), -1);
  for (int v = 0; v < g.n(); ++v) {
    int r = find_rep(v);
    res.origin_to_reduced[v] = r < 0 ? -1 : new_id[r];
  }
  return res;
}

HostGraph::HostGraph(Graph base, std::vector<int> subdivision)
    : base_(std::move(base)), subdivision_(std::move(subdivision)) {
  if (static_cast<int>(subdivision_.size()) != base_.edge_count())
    throw ContractViolation("subdivision count per base edge required");
  int total = base_.n();
  for (int c : subdivision_) {
    if (c < 0) throw ContractViolation("negative subdivision count");
    total += c;
  }
  if (total > kMaxVertices) throw ContractViolation("realized host too large");
  realized_ = Graph(total);
  int next = base_.n();
  for (int e = 0; e < base_.edge_count(); ++e) {
    auto [u, v] = base_.edges()[e];
    int prev = u;
    for (int k = 0; k < subdivision_[e]; ++k) {
      realized_.add_edge(prev, next);
      prev = next++;
    }
    realized_.add_edge(prev, v);
  }
}

std::vector<int> HostGraph::edge_path(int edge_index) const {
  auto [u, v] = base_.edges()[edge_index];
  std::vector<int> path;
  path.push_back(u);
  int offset = base_.n();
  for (int e = 0; e < edge_index; ++e) offset += subdivision_[e];
  for (int k = 0; k < subdivision_[edge_index]; ++k) path.push_back(offset + k);
  path.push_back(v);
  return path;
}

int HostGraph::first_inserted(int edge_index) const {
  if (subdivision_[edge_index] == 0) return -1;
  int offset = base_.n();
  for (int e = 0; e < edge_index; ++e) offset += subdivision_[e];
  return offset;
}

ModelCheckReport verify_model(const Graph& g, const HModel& m) {
  ModelCheckReport report;
  if (static_cast<int>(m.phi.size()) != g.n())
    throw ContractViolation("phi must be defined on every vertex");
  const Graph& host = m.host.realized();
  for (int v = 0; v < g.n(); ++v) {
    if (m.phi[v].none()) {
      report.violations.push_back({ViolationKind::kEmptySet, v, -1});
      continue;
    }
    for (int x = first_bit(m.phi[v]); x >= 0; x = next_bit(m.phi[v], x))
      if (x >= host.n()) throw ContractViolation("phi uses a vertex outside the host");
    if (!is_connected_subset(host, m.phi[v]))
      report.violations.push_back({ViolationKind::kDisconnected, v, -1});
  }
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      bool meet = (m.phi[u] & m.phi[v]).any();
      if (meet && !g.has_edge(u, v))
        report.violations.push_back({ViolationKind::kExtraEdge, u, v});
      if (!meet && g.has_edge(u, v))
        report.violations.push_back({ViolationKind::kMissingEdge, u, v});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

Graph realized_intersection_graph(const HModel& m) {
  int n = static_cast<int>(m.phi.size());
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((m.phi[u] & m.phi[v]).any()) g.add_edge(u, v);
  return g;
}

}  // namespace hgraph
