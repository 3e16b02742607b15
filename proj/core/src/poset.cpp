#include "hgraph/poset.hpp"

#include <algorithm>
#include <numeric>

namespace hgraph {

Poset poset_from_pairs(int m, const std::vector<std::pair<int, int>>& pairs) {
  if (m < 0 || m > kMaxVertices) throw ContractViolation("poset size out of range");
  Poset p(m);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= m || b >= m) throw ContractViolation("poset pair out of range");
    if (a == b) throw ContractViolation("irreflexivity violated");
    p.below_[b].set(a);
  }
  // transitive closure
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < m; ++x) {
      Bits grown = p.below_[x];
      for (int y = first_bit(p.below_[x]); y >= 0; y = next_bit(p.below_[x], y)) grown |= p.below_[y];
      if (grown != p.below_[x]) {
        p.below_[x] = grown;
        changed = true;
      }
    }
  }
  for (int x = 0; x < m; ++x) {
    if (p.below_[x].test(x)) throw ContractViolation("cycle detected: not a partial order");
    for (int y = first_bit(p.below_[x]); y >= 0; y = next_bit(p.below_[x], y)) {
      if (p.below_[y].test(x)) throw ContractViolation("antisymmetry violated");
      p.above_[y].set(x);
    }
  }
  return p;
}

Bits Poset::upset(const Bits& a) const {
  Bits out;
  for (int x = first_bit(a); x >= 0; x = next_bit(a, x)) out |= above_[x];
  return out;
}

Bits Poset::downset(const Bits& a) const {
  Bits out;
  for (int x = first_bit(a); x >= 0; x = next_bit(a, x)) out |= below_[x];
  return out;
}

Bits Poset::maximal_elements() const {
  Bits out;
  for (int x = 0; x < m_; ++x)
    if (above_[x].none()) out.set(x);
  return out;
}

Bits Poset::minimal_elements() const {
  Bits out;
  for (int x = 0; x < m_; ++x)
    if (below_[x].none()) out.set(x);
  return out;
}

bool Poset::is_chain(const Bits& s) const {
  for (int a = first_bit(s); a >= 0; a = next_bit(s, a))
    for (int b = next_bit(s, a); b >= 0; b = next_bit(s, b))
      if (!comparable(a, b)) return false;
  return true;
}

bool Poset::is_antichain(const Bits& s) const {
  for (int a = first_bit(s); a >= 0; a = next_bit(s, a))
    for (int b = next_bit(s, a); b >= 0; b = next_bit(s, b))
      if (comparable(a, b)) return false;
  return true;
}

std::vector<int> Poset::chain_sorted(const Bits& chain) const {
  std::vector<int> out = bits_to_set(chain);
  std::sort(out.begin(), out.end(), [&](int a, int b) { return less(a, b); });
  return out;
}

int Poset::chain_min(const Bits& chain) const {
  auto v = chain_sorted(chain);
  return v.empty() ? -1 : v.front();
}

int Poset::chain_max(const Bits& chain) const {
  auto v = chain_sorted(chain);
  return v.empty() ? -1 : v.back();
}

namespace {

// simple augmenting-path bipartite matching
struct Matching {
  int n;
  const std::vector<Bits>& right_of_left;
  std::vector<int> match_left, match_right;

  explicit Matching(int n, const std::vector<Bits>& adj)
      : n(n), right_of_left(adj), match_left(n, -1), match_right(n, -1) {}

  bool augment(int u, Bits& visited) {
    for (int v = first_bit(right_of_left[u]); v >= 0; v = next_bit(right_of_left[u], v)) {
      if (visited.test(v)) continue;
      visited.set(v);
      if (match_right[v] < 0 || augment(match_right[v], visited)) {
        match_left[u] = v;
        match_right[v] = u;
        return true;
      }
    }
    return false;
  }

  int run() {
    int size = 0;
    for (int u = 0; u < n; ++u) {
      Bits visited;
      if (augment(u, visited)) ++size;
    }
    return size;
  }
};

}  // namespace

int Poset::width() const {
  // Dilworth: width = minimum chain cover = m - max matching in the DAG's
  // comparability bipartite graph.
  std::vector<Bits> adj(m_);
  for (int x = 0; x < m_; ++x) adj[x] = above_[x];
  Matching m(m_, adj);
  return m_ - m.run();
}

Poset Poset::restrict(const Bits& keep) const {
  Poset out(m_);
  for (int x = first_bit(keep); x >= 0; x = next_bit(keep, x)) {
    out.below_[x] = below_[x] & keep;
    out.above_[x] = above_[x] & keep;
  }
  out.m_ = m_;
  return out;
}

std::vector<int> Poset::linear_extension() const {
  std::vector<int> order(m_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return below_[a].count() < below_[b].count(); });
  return order;
}

std::optional<ChainPartition> list_chain_partition(const Poset& p, int s,
                                                   const std::vector<std::vector<int>>& lists) {
  if (static_cast<int>(lists.size()) != p.size())
    throw ContractViolation("one list per element required");
  std::vector<int> order = p.linear_extension();
  std::vector<int> color(p.size(), -1);
  std::vector<Bits> cls(s);  // elements per color so far

  // comparable[x]: everything comparable with x (chain feasibility test)
  std::vector<Bits> comparable(p.size());
  for (int x = 0; x < p.size(); ++x) {
    comparable[x] = p.strictly_below(x) | p.strictly_above(x);
    comparable[x].set(x);
  }

  auto rec = [&](auto&& self, size_t idx) -> bool {
    if (idx == order.size()) return true;
    int x = order[idx];
    for (int c : lists[x]) {
      if (c < 0 || c >= s) throw ContractViolation("list color out of range");
      if (!is_subset(cls[c], comparable[x])) continue;
      cls[c].set(x);
      color[x] = c;
      if (self(self, idx + 1)) return true;
      cls[c].reset(x);
      color[x] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return ChainPartition{color};
}

bool chain_partition_valid(const Poset& p, int s, const std::vector<std::vector<int>>& lists,
                           const ChainPartition& cp) {
  if (static_cast<int>(cp.assignment.size()) != p.size()) return false;
  std::vector<Bits> cls(s);
  for (int x = 0; x < p.size(); ++x) {
    int c = cp.assignment[x];
    if (c < 0 || c >= s) return false;
    if (std::find(lists[x].begin(), lists[x].end(), c) == lists[x].end()) return false;
    cls[c].set(x);
  }
  for (int c = 0; c < s; ++c)
    if (!p.is_chain(cls[c])) return false;
  return true;
}

}  // namespace hgraph
