#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hgraph/circular_arc.hpp"
#include "hgraph/graph.hpp"
#include "hgraph/interval.hpp"

namespace hgraph {

constexpr std::uint64_t kDefaultOracleBudget = 400'000'000;

// All subdivisions of H with at most cap inserted vertices per edge, each
// exactly once (3^|E| hosts for cap 2).
std::vector<HostGraph> enumerate_subdivisions(const Graph& h, int cap_per_edge);

// Containment constraint for host-model search: every vertex of `clique`
// must cover the host base vertex `base_vertex`.
struct HostPointConstraint {
  int base_vertex;
  Bits clique;
};

// Ground-truth H-model search: backtracking assignment of connected host
// subsets to vertices with incremental intersection pruning.  A NO answer is
// certified only up to cap_per_edge.  Throws SearchLimit when the node budget
// runs out (inconclusive, distinct from NO).
std::optional<HModel> hmodel_bruteforce(const Graph& g, const Graph& h, int cap_per_edge,
                                        std::uint64_t budget = kDefaultOracleBudget);

// Same search restricted to the listed hosts and honoring point constraints.
std::optional<HModel> hmodel_bruteforce_hosts(const Graph& g, const std::vector<HostGraph>& hosts,
                                              const std::vector<HostPointConstraint>& constraints,
                                              std::uint64_t budget = kDefaultOracleBudget);

// Endpoint-sequence brute force for interval models, independent of the
// PQ-tree recognizer.  `visit` sees every realizing model until it returns
// true; the single-shot variant returns the first model found.
void interval_bruteforce_all(const Graph& g, std::uint64_t budget,
                             const std::function<bool(const IntervalModel&)>& visit);
std::optional<IntervalModel> interval_bruteforce(const Graph& g,
                                                 std::uint64_t budget = kDefaultOracleBudget);

// Cyclic endpoint-sequence brute force for circular-arc models, independent
// of the insertion-based recognizer.
void ca_bruteforce_all(const Graph& g, std::uint64_t budget,
                       const std::function<bool(const ArcModel&)>& visit);
std::optional<ArcModel> ca_bruteforce(const Graph& g,
                                      std::uint64_t budget = kDefaultOracleBudget);

// All connected subsets of a graph's vertex set (helper shared with tests).
std::vector<Bits> connected_subsets(const Graph& g);

}  // namespace hgraph
