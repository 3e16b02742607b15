#pragma once

#include <optional>
#include <vector>

#include "hgraph/circular_arc.hpp"
#include "hgraph/graph.hpp"

namespace hgraph {

struct TreeComponent {
  Bits vertices;      // T_i
  Bits circle_nbrs;   // N_C(T_i), a clique of G[V_C]
};

struct CircleTreePartition {
  Bits circle;  // V_C
  Bits tree;    // V_T
  std::vector<TreeComponent> tree_components;
};

// Closure: hole vertices, then induced paths joining non-adjacent circle
// vertices, iterated to a fixed point.
CircleTreePartition circle_tree_partition(const Graph& g);

// Medusa recognition: V_C empty reduces to chordality, otherwise the Helly
// Cliques instance (G[V_C], N_C(T_1), ..., N_C(T_k)).  Accepted graphs get a
// unicyclic-host certificate.
std::optional<HModel> recognize_medusa(const Graph& g, std::uint64_t budget = kDefaultCaBudget);

// Helly-medusa recognition: Helly circular-arc test on G[V_C].
std::optional<HModel> recognize_helly_medusa(const Graph& g,
                                             std::uint64_t budget = kDefaultCaBudget);

// Assembles the unicyclic-host model from an arc model of G[V_C] in which
// every attachment clique N_C(T_i) has a common point: the circle plus one
// clique tree per T_i hung at its Helly point.
HModel build_medusa_model(const Graph& g, const CircleTreePartition& partition,
                          const ArcModel& circle_model);

// Chordal-only assembly used when V_C is empty: clique forests attached to an
// unused triangle so the host stays unicyclic.
HModel build_chordal_medusa_model(const Graph& g);

// The Helly Cliques -> medusa reduction gadget, steps (1)-(8): one c_i per
// clique, a 4-cycle v,v1,v2,v3 per vertex, cross edges per the pair kind.
// Pre: g has no universal vertices and no twins.
Graph helly_cliques_to_medusa_gadget(const Graph& g, const std::vector<Bits>& cliques);

}  // namespace hgraph
