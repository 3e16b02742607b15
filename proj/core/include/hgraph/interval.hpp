#pragma once

#include <optional>
#include <vector>

#include "hgraph/graph.hpp"
#include "hgraph/pqtree.hpp"

namespace hgraph {

// Closed intervals with integer endpoints on the grid 2 * (sector index).
struct IntervalModel {
  std::vector<std::pair<int, int>> iv;  // per vertex

  bool intersects(int u, int v) const {
    return iv[u].first <= iv[v].second && iv[v].first <= iv[u].second;
  }
};

bool interval_model_realizes(const Graph& g, const IntervalModel& m);

enum class SectorKind { kMinimal, kMaximal, kOther };

struct Sector {
  Bits clique;
  SectorKind kind;
};

struct SectorSequence {
  std::vector<Sector> sectors;
};

// Maximal cliques of g in a canonical order, shared by all interval ops.
std::vector<Bits> interval_cliques(const Graph& g);

// Is `order` (indices into `cliques`) consecutive: every vertex's cliques
// form a contiguous run?
bool is_consecutive_clique_order(const std::vector<Bits>& cliques, const std::vector<int>& order,
                                 int n);

// Interval recognition: chordality via lex-BFS, then consecutive-ones over
// the maximal-clique matrix via PQ-tree reduction.
std::optional<IntervalModel> recognize_interval(const Graph& g);

// Some consecutive ordering of interval_cliques(g), if one exists.
std::optional<std::vector<int>> consecutive_clique_ordering(const Graph& g);

// PQ-tree whose leaves are interval_cliques(g); throws ContractViolation when
// g is not interval.
PQTree build_pq_tree(const Graph& g);

// Admissible-frontier orderings of the tree, as clique-index sequences.
std::vector<std::vector<int>> enumerate_consecutive_orderings(const PQTree& t, std::uint64_t cap);

// Normalized-model sector structure for a given consecutive ordering:
// empty, C_1, C_1&C_2, C_2, ..., C_c, empty -- exactly 2c+1 sectors.
SectorSequence normalized_sectors(const Graph& g, const std::vector<int>& ordering);

// Normalized model on the integer grid for a consecutive ordering.
IntervalModel model_from_clique_order(const Graph& g, const std::vector<Bits>& cliques,
                                      const std::vector<int>& ordering);

// Does g have an interval model whose leftmost maximal sector clique is
// exactly C?  Decided by the pendant-vertex reduction.  Returns a witnessing
// model with C leftmost.
std::optional<IntervalModel> interval_with_leftmost_clique(const Graph& g, const Bits& c);

// Consecutive ordering with clique-index `target` first, if some admissible
// frontier starts with it.
std::optional<std::vector<int>> ordering_with_leaf_first(const PQTree& t, int target);

}  // namespace hgraph
