#pragma once

#include <cstdint>
#include <vector>

#include "hgraph/graph.hpp"

namespace hgraph {

// Seeded Erdos-Renyi graph; deterministic for a fixed (n, p, seed).
Graph random_graph(int n, double p, std::uint64_t seed);

// Canonical form: the lexicographically smallest edge mask over all vertex
// relabelings.  Desk scale (n <= 8).
std::uint64_t canonical_edge_mask(const Graph& g);

// One representative per isomorphism class of graphs on exactly n vertices
// (connected_only filters to connected ones).  Deterministic order.
std::vector<Graph> isomorphism_class_representatives(int n, bool connected_only);

// Convenience graphs used all over the tests.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
// The lollipop host: triangle {0,1,2} plus the pendant edge 2-3.
Graph lollipop_host();

}  // namespace hgraph
