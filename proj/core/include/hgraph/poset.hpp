#pragma once

#include <optional>
#include <vector>

#include "hgraph/graph.hpp"

namespace hgraph {

// Finite strict partial order over elements {0..m-1}.  Construction takes the
// transitive closure and rejects anything that is not a partial order.
class Poset {
 public:
  Poset() = default;
  explicit Poset(int m) : m_(m), below_(m), above_(m) {}

  int size() const { return m_; }
  bool less(int a, int b) const { return below_[b].test(a); }
  bool comparable(int a, int b) const { return a == b || less(a, b) || less(b, a); }
  const Bits& strictly_below(int a) const { return below_[a]; }
  const Bits& strictly_above(int a) const { return above_[a]; }

  Bits upset(const Bits& a) const;    // elements strictly above some member
  Bits downset(const Bits& a) const;  // elements strictly below some member
  Bits maximal_elements() const;
  Bits minimal_elements() const;

  bool is_chain(const Bits& s) const;
  bool is_antichain(const Bits& s) const;
  // Elements of a chain sorted ascending by the order.
  std::vector<int> chain_sorted(const Bits& chain) const;
  int chain_min(const Bits& chain) const;
  int chain_max(const Bits& chain) const;

  // Maximum antichain size, via Dilworth: elements minus a maximum matching
  // of the comparability DAG.
  int width() const;

  // Restriction to the elements of `keep` (element ids preserved).
  Poset restrict(const Bits& keep) const;

  std::vector<int> linear_extension() const;

  friend Poset poset_from_pairs(int m, const std::vector<std::pair<int, int>>& pairs);

 private:
  int m_ = 0;
  std::vector<Bits> below_;  // below_[x] = {y : y < x}
  std::vector<Bits> above_;  // above_[x] = {y : x < y}
};

// Builds the poset generated by `pairs` (a < b per pair); throws
// ContractViolation if the closure violates irreflexivity or antisymmetry.
Poset poset_from_pairs(int m, const std::vector<std::pair<int, int>>& pairs);

struct ChainPartition {
  // color assigned to each element, values in [0, s)
  std::vector<int> assignment;
};

// s-list chain partitioning: assign each element a color from its list so
// every color class is a chain.  Backtracking over a linear extension with
// chain-feasibility pruning; all call sites have s <= 3 and desk-scale posets.
// Deterministic: lowest color index first along a fixed linear extension.
std::optional<ChainPartition> list_chain_partition(const Poset& p, int s,
                                                   const std::vector<std::vector<int>>& lists);

// Validates a claimed partition (per-color chain check plus list membership).
bool chain_partition_valid(const Poset& p, int s, const std::vector<std::vector<int>>& lists,
                           const ChainPartition& cp);

}  // namespace hgraph
