#include "hgraph/pqtree.hpp"

#include <algorithm>
#include <numeric>

namespace hgraph {

namespace {
constexpr std::uint64_t kSatCap = ~0ull;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  if (a == 0 || b == 0) return 0;
  if (a > cap / b) return cap;
  std::uint64_t r = a * b;
  return r > cap ? cap : r;
}
}  // namespace

std::optional<PQTree> PQTree::build(int num_leaves, const std::vector<Bits>& constraints) {
  if (num_leaves <= 0) throw ContractViolation("PQ-tree needs at least one leaf");
  PQTree t;
  t.num_leaves_ = num_leaves;
  for (int i = 0; i < num_leaves; ++i) t.nodes_.push_back({Kind::kLeaf, i, {}});
  if (num_leaves == 1) {
    t.root_ = 0;
  } else {
    Node root{Kind::kP, -1, {}};
    for (int i = 0; i < num_leaves; ++i) root.children.push_back(i);
    t.nodes_.push_back(root);
    t.root_ = num_leaves;
  }
  Bits all;
  for (int i = 0; i < num_leaves; ++i) all.set(i);
  for (const Bits& s : constraints) {
    if (s.count() <= 1 || s == all) continue;
    if (!t.reduce(s)) return std::nullopt;
    t.canonicalize();
  }
  t.rebuild_parents();
  return t;
}

Bits PQTree::leaves_below(int id) const {
  const Node& nd = nodes_[id];
  if (nd.kind == Kind::kLeaf) {
    Bits b;
    b.set(nd.leaf_id);
    return b;
  }
  Bits b;
  for (int c : nd.children) b |= leaves_below(c);
  return b;
}

bool PQTree::reduce(const Bits& full) {
  // pertinent root: deepest node whose leaf set contains all full leaves
  int pr = root_;
  for (;;) {
    const Node& nd = nodes_[pr];
    if (nd.kind == Kind::kLeaf) break;
    int next = -1;
    for (int c : nd.children)
      if (is_subset(full, leaves_below(c))) {
        next = c;
        break;
      }
    if (next < 0) break;
    pr = next;
  }
  bool ok = true;
  process(pr, full, /*is_root=*/true, ok);
  return ok;
}

int PQTree::wrap_p(std::vector<int> children) {
  if (children.size() == 1) return children[0];
  nodes_.push_back({Kind::kP, -1, std::move(children)});
  return static_cast<int>(nodes_.size()) - 1;
}

// Processes the pertinent subtree bottom-up.  A node returned as kPartial has
// been rewritten as a Q-node whose children run empty-side first, full-side
// last.  At the pertinent root the full block only needs to be consecutive.
PQTree::Label PQTree::process(int id, const Bits& full, bool is_root, bool& ok) {
  if (!ok) return Label::kEmpty;
  if (nodes_[id].kind == Kind::kLeaf)
    return full.test(nodes_[id].leaf_id) ? Label::kFull : Label::kEmpty;

  const std::vector<int> child_ids = nodes_[id].children;  // copy: recursion reallocates
  std::vector<Label> labels(child_ids.size());
  for (size_t i = 0; i < child_ids.size(); ++i) {
    Bits below = leaves_below(child_ids[i]);
    if ((below & full).none())
      labels[i] = Label::kEmpty;
    else if (is_subset(below, full))
      labels[i] = Label::kFull;
    else
      labels[i] = process(child_ids[i], full, false, ok);
    if (!ok) return Label::kEmpty;
  }

  // NB: wrap_p reallocates nodes_; never hold a Node reference across it
  if (nodes_[id].kind == Kind::kP) {
    std::vector<int> empt, fulls, partials;
    {
      const std::vector<int>& ch = nodes_[id].children;
      for (size_t i = 0; i < ch.size(); ++i) {
        if (labels[i] == Label::kEmpty) empt.push_back(ch[i]);
        else if (labels[i] == Label::kFull) fulls.push_back(ch[i]);
        else partials.push_back(ch[i]);
      }
    }
    if (partials.empty() && fulls.empty()) return Label::kEmpty;
    if (partials.empty() && empt.empty()) return Label::kFull;
    if (partials.size() + (is_root ? 0u : 1u) > 2u) {
      ok = false;
      return Label::kEmpty;
    }
    if (partials.empty()) {
      if (is_root) {
        // group the full children so they stay consecutive
        std::vector<int> ch = empt;
        ch.push_back(wrap_p(fulls));
        nodes_[id].children = std::move(ch);
        return Label::kFull;  // label is irrelevant at the root
      }
      int e = wrap_p(empt);
      int f = wrap_p(fulls);
      nodes_[id].kind = Kind::kQ;
      nodes_[id].children = {e, f};
      return Label::kPartial;
    }
    if (partials.size() == 1) {
      int q = partials[0];
      if (is_root) {
        if (!fulls.empty()) {
          int f = wrap_p(fulls);
          nodes_[q].children.push_back(f);
        }
        std::vector<int> ch = empt;
        ch.push_back(q);
        nodes_[id].children = std::move(ch);
        return Label::kFull;
      }
      std::vector<int> merged;
      if (!empt.empty()) merged.push_back(wrap_p(empt));
      for (int c : nodes_[q].children) merged.push_back(c);
      if (!fulls.empty()) merged.push_back(wrap_p(fulls));
      nodes_[id].kind = Kind::kQ;
      nodes_[id].children = std::move(merged);
      // q's shell is absorbed; it becomes garbage (canonicalize ignores it)
      return Label::kPartial;
    }
    // two partials, root only
    int q1 = partials[0], q2 = partials[1];
    std::vector<int> merged = nodes_[q1].children;
    if (!fulls.empty()) merged.push_back(wrap_p(fulls));
    for (auto it = nodes_[q2].children.rbegin(); it != nodes_[q2].children.rend(); ++it)
      merged.push_back(*it);
    nodes_.push_back({Kind::kQ, -1, std::move(merged)});
    int big = static_cast<int>(nodes_.size()) - 1;
    std::vector<int> ch = empt;
    ch.push_back(big);
    nodes_[id].children = std::move(ch);
    return Label::kFull;
  }

  // Q-node (no allocations below; child_ids is the stored order)
  int k = static_cast<int>(child_ids.size());
  auto lab = [&](int i) { return labels[i]; };
  int first_non_empty = -1, last_non_empty = -1;
  for (int i = 0; i < k; ++i)
    if (lab(i) != Label::kEmpty) {
      if (first_non_empty < 0) first_non_empty = i;
      last_non_empty = i;
    }
  if (first_non_empty < 0) return Label::kEmpty;
  bool all_full = true;
  for (int i = 0; i < k; ++i)
    if (lab(i) != Label::kFull) all_full = false;
  if (all_full) return Label::kFull;

  // the non-empty children must form one window, partial only at its edges
  for (int i = first_non_empty; i <= last_non_empty; ++i) {
    if (lab(i) == Label::kEmpty) {
      ok = false;
      return Label::kEmpty;
    }
    if (lab(i) == Label::kPartial && i != first_non_empty && i != last_non_empty) {
      ok = false;
      return Label::kEmpty;
    }
  }
  int partial_count = 0;
  for (int i = 0; i < k; ++i)
    if (lab(i) == Label::kPartial) ++partial_count;

  if (is_root) {
    // splice partial edges inward, full ends toward the full block
    std::vector<int> merged;
    for (int i = 0; i < k; ++i) {
      if (lab(i) != Label::kPartial) {
        merged.push_back(child_ids[i]);
        continue;
      }
      const std::vector<int>& sub = nodes_[child_ids[i]].children;
      if (i == first_non_empty) {
        for (int c : sub) merged.push_back(c);  // empty..full, full meets block
      } else {
        for (auto it = sub.rbegin(); it != sub.rend(); ++it) merged.push_back(*it);
      }
    }
    nodes_[id].children = std::move(merged);
    return Label::kFull;
  }

  if (partial_count > 1) {
    ok = false;
    return Label::kEmpty;
  }
  // non-root: after an optional flip the pattern must be exactly E* P? F*
  auto matches = [&](const std::vector<Label>& ls) {
    int i = 0;
    while (i < k && ls[i] == Label::kEmpty) ++i;
    if (i < k && ls[i] == Label::kPartial) ++i;
    while (i < k && ls[i] == Label::kFull) ++i;
    return i == k;
  };
  std::vector<int> seq = child_ids;
  std::vector<Label> ls = labels;
  if (!matches(ls)) {
    std::reverse(seq.begin(), seq.end());
    std::reverse(ls.begin(), ls.end());
    if (!matches(ls)) {
      ok = false;
      return Label::kEmpty;
    }
  }
  std::vector<int> merged;
  for (int i = 0; i < k; ++i) {
    if (ls[i] == Label::kPartial) {
      for (int c : nodes_[seq[i]].children) merged.push_back(c);
    } else {
      merged.push_back(seq[i]);
    }
  }
  nodes_[id].children = std::move(merged);
  return Label::kPartial;
}

void PQTree::canonicalize() {
  root_ = canonicalize_rec(root_);
  rebuild_parents();
}

int PQTree::canonicalize_rec(int id) {
  Node& nd = nodes_[id];
  if (nd.kind == Kind::kLeaf) return id;
  std::vector<int> ch;
  for (int c : nd.children) ch.push_back(canonicalize_rec(c));
  if (ch.size() == 1) return ch[0];
  nd.children = std::move(ch);
  if (nd.kind == Kind::kQ && nd.children.size() == 2) nd.kind = Kind::kP;
  return id;
}

void PQTree::rebuild_parents() {
  parent_.assign(nodes_.size(), -1);
  // reachable nodes only; garbage shells keep parent -1
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    for (int c : nodes_[id].children) {
      parent_[c] = id;
      stack.push_back(c);
    }
  }
}

std::vector<int> PQTree::frontier() const {
  std::vector<int> out;
  std::vector<int> stack{root_};
  // iterative post-order preserving child order
  std::vector<std::pair<int, size_t>> walk{{root_, 0}};
  out.clear();
  while (!walk.empty()) {
    auto& [id, idx] = walk.back();
    const Node& nd = nodes_[id];
    if (nd.kind == Kind::kLeaf) {
      out.push_back(nd.leaf_id);
      walk.pop_back();
      continue;
    }
    if (idx == nd.children.size()) {
      walk.pop_back();
      continue;
    }
    walk.push_back({nd.children[idx++], 0});
  }
  return out;
}

std::uint64_t PQTree::count_orderings(std::uint64_t cap) const {
  std::uint64_t total = 1;
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    const Node& nd = nodes_[id];
    if (nd.kind == Kind::kLeaf) continue;
    std::uint64_t k = nd.children.size();
    if (nd.kind == Kind::kP) {
      for (std::uint64_t i = 2; i <= k; ++i) total = sat_mul(total, i, cap);
    } else {
      total = sat_mul(total, 2, cap);
    }
    for (int c : nd.children) stack.push_back(c);
    if (total >= cap) return cap;
  }
  return total;
}

namespace {

void enum_rec(const PQTree& t, int id, std::vector<std::vector<int>>& out) {
  const auto& nd = t.node(id);
  if (nd.kind == PQTree::Kind::kLeaf) {
    out = {{nd.leaf_id}};
    return;
  }
  std::vector<std::vector<std::vector<int>>> per_child;
  for (int c : nd.children) {
    std::vector<std::vector<int>> sub;
    enum_rec(t, c, sub);
    per_child.push_back(std::move(sub));
  }
  std::vector<std::vector<int>> results;
  int k = static_cast<int>(nd.children.size());
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  auto expand = [&](const std::vector<int>& order) {
    std::vector<std::vector<int>> acc{{}};
    for (int ci : order) {
      std::vector<std::vector<int>> next;
      for (const auto& prefix : acc)
        for (const auto& tail : per_child[ci]) {
          auto row = prefix;
          row.insert(row.end(), tail.begin(), tail.end());
          next.push_back(std::move(row));
        }
      acc = std::move(next);
    }
    for (auto& row : acc) results.push_back(std::move(row));
  };
  if (nd.kind == PQTree::Kind::kP) {
    std::sort(perm.begin(), perm.end());
    do {
      expand(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    expand(perm);
    std::reverse(perm.begin(), perm.end());
    expand(perm);
  }
  out = std::move(results);
}

}  // namespace

std::vector<std::vector<int>> PQTree::enumerate_orderings(std::uint64_t cap) const {
  if (count_orderings(cap == kSatCap ? kSatCap : cap + 1) > cap)
    throw SearchLimit("PQ-tree ordering enumeration exceeds cap");
  std::vector<std::vector<int>> out;
  enum_rec(*this, root_, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool PQTree::admits_order(const std::vector<int>& leaf_order) const {
  if (static_cast<int>(leaf_order.size()) != num_leaves_) return false;
  std::vector<int> pos(num_leaves_, -1);
  for (size_t i = 0; i < leaf_order.size(); ++i) {
    if (leaf_order[i] < 0 || leaf_order[i] >= num_leaves_) return false;
    if (pos[leaf_order[i]] >= 0) return false;
    pos[leaf_order[i]] = static_cast<int>(i);
  }
  // every node's leaves must form an interval; Q children in stored or
  // reversed block order
  bool ok = true;
  auto rec = [&](auto&& self, int id) -> std::pair<int, int> {  // [min,max] positions
    const Node& nd = nodes_[id];
    if (nd.kind == Kind::kLeaf) return {pos[nd.leaf_id], pos[nd.leaf_id]};
    std::vector<std::pair<int, int>> spans;
    int lo = num_leaves_, hi = -1, total = 0;
    for (int c : nd.children) {
      auto s = self(self, c);
      spans.push_back(s);
      lo = std::min(lo, s.first);
      hi = std::max(hi, s.second);
      total += s.second - s.first + 1;
    }
    if (hi - lo + 1 != total) ok = false;
    if (nd.kind == Kind::kQ && ok) {
      std::vector<size_t> idx(spans.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(),
                [&](size_t a, size_t b) { return spans[a].first < spans[b].first; });
      bool fwd = true, rev = true;
      for (size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] != i) fwd = false;
        if (idx[i] != idx.size() - 1 - i) rev = false;
      }
      if (!fwd && !rev) ok = false;
    }
    return {lo, hi};
  };
  rec(rec, root_);
  return ok;
}

bool PQTree::leaf_can_be_first(int leaf) const {
  // walk from leaf to root; at every Q-node the incoming child must be
  // endmost
  int id = leaf;
  while (parent_[id] >= 0) {
    int p = parent_[id];
    const Node& nd = nodes_[p];
    if (nd.kind == Kind::kQ) {
      if (nd.children.front() != id && nd.children.back() != id) return false;
    }
    id = p;
  }
  return true;
}

std::vector<std::pair<int, int>> PQTree::adjacent_leaf_pairs() const {
  // a can precede b immediately iff at their LCA the two child subtrees can
  // be made adjacent, a can be rightmost in its subtree and b leftmost in its
  auto endmost_up_to = [&](int leaf, int stop) {
    int id = leaf;
    while (parent_[id] != stop) {
      int p = parent_[id];
      const Node& nd = nodes_[p];
      if (nd.kind == Kind::kQ && nd.children.front() != id && nd.children.back() != id)
        return false;
      id = p;
    }
    return true;
  };
  auto child_on_path = [&](int leaf, int anc) {
    int id = leaf;
    while (parent_[id] != anc) id = parent_[id];
    return id;
  };
  auto lca = [&](int a, int b) {
    std::vector<char> mark(nodes_.size(), 0);
    for (int id = a; id >= 0; id = parent_[id]) mark[id] = 1;
    for (int id = b; id >= 0; id = parent_[id])
      if (mark[id]) return id;
    return root_;
  };
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < num_leaves_; ++a) {
    for (int b = a + 1; b < num_leaves_; ++b) {
      if (num_leaves_ == 1) break;
      int l = lca(a, b);
      int ca = child_on_path(a, l), cb = child_on_path(b, l);
      const Node& nd = nodes_[l];
      bool blocks_adjacent = true;
      if (nd.kind == Kind::kQ) {
        int ia = -1, ib = -1;
        for (size_t i = 0; i < nd.children.size(); ++i) {
          if (nd.children[i] == ca) ia = static_cast<int>(i);
          if (nd.children[i] == cb) ib = static_cast<int>(i);
        }
        blocks_adjacent = std::abs(ia - ib) == 1;
      }
      if (blocks_adjacent && endmost_up_to(a, l) && endmost_up_to(b, l))
        out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace hgraph
