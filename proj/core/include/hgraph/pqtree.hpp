#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hgraph/graph.hpp"

namespace hgraph {

// PQ-tree over leaves {0..num_leaves-1}.  P-nodes permute their children
// freely, Q-nodes fix the child order up to reversal.  Built by incremental
// consecutive-ones reduction; not the linear-time variant.
class PQTree {
 public:
  enum class Kind { kLeaf, kP, kQ };

  struct Node {
    Kind kind;
    int leaf_id = -1;            // for leaves
    std::vector<int> children;   // for inner nodes, in stored order
  };

  // Tree over `num_leaves` leaves whose frontier language is all orderings in
  // which every constraint set is consecutive; nullopt when unsatisfiable.
  static std::optional<PQTree> build(int num_leaves, const std::vector<Bits>& constraints);

  int root() const { return root_; }
  int num_leaves() const { return num_leaves_; }
  const Node& node(int id) const { return nodes_[id]; }
  int node_count() const { return static_cast<int>(nodes_.size()); }

  // Leaves below a node, as a bitset of leaf ids.
  Bits leaves_below(int id) const;
  // Current left-to-right leaf order.
  std::vector<int> frontier() const;

  // Number of admissible leaf orderings; saturates at cap.
  std::uint64_t count_orderings(std::uint64_t cap) const;
  // All admissible orderings; throws SearchLimit when the count exceeds cap.
  std::vector<std::vector<int>> enumerate_orderings(std::uint64_t cap) const;

  // Does some admissible ordering realize this exact leaf sequence?
  bool admits_order(const std::vector<int>& leaf_order) const;
  // Can this leaf be the first leaf of some admissible ordering?
  bool leaf_can_be_first(int leaf) const;
  // Pairs of leaves that are adjacent in at least one admissible ordering.
  std::vector<std::pair<int, int>> adjacent_leaf_pairs() const;

  // Leaf ids in subtree order under one fixed admissible ordering where the
  // children of `q_node` appear reversed; used by DP callers that must try
  // both admissible Q-orders.
  std::vector<int> children_of(int id) const { return nodes_[id].children; }
  int parent_of(int id) const { return parent_[id]; }

 private:
  enum class Label { kEmpty, kFull, kPartial };

  bool reduce(const Bits& full_leaves);
  Label process(int id, const Bits& full, bool is_root, bool& ok);
  int wrap_p(std::vector<int> children);
  void canonicalize();
  int canonicalize_rec(int id);
  void rebuild_parents();

  std::vector<Node> nodes_;
  std::vector<int> parent_;
  int root_ = -1;
  int num_leaves_ = 0;
};

}  // namespace hgraph
