#pragma once

#include <optional>
#include <vector>

#include "hgraph/graph.hpp"

namespace hgraph {

struct TrackSplit {
  std::vector<Edge> track1;
  std::vector<Edge> track2;
};

bool is_bipartite(const Graph& g);

// 2-track test: edges covered by two interval-graph edge sets on the same
// vertices.  Scans ordered covers (track 1, track 2, or both per edge) with
// memoized intervality lookups; |E| <= 16.
std::optional<TrackSplit> is_two_track_bruteforce(const Graph& g);

// Butterfly-hardness gadget: V(G') = V(g) + one edge-vertex per edge + a
// 9-vertex once-subdivided K_{1,4}; V(g) becomes a clique, edge-vertices see
// V(g) minus their own endpoints, everything in V(g) sees all of S.
Graph butterfly_gadget(const Graph& g);

// The butterfly host (two triangles joined on a node).
Graph butterfly_graph();

// Forward direction of the reduction: a butterfly model of butterfly_gadget(g)
// assembled from interval models of the two tracks; passes verify_model.
HModel build_butterfly_model_from_tracks(const Graph& g, const std::vector<Edge>& track1,
                                         const std::vector<Edge>& track2);

struct TwoCycleGadget {
  Graph x_graph;    // H' minus the two middle edges; itself an H-graph
  Graph g_prime;    // the reduction output
  int h_prime_n;    // |V(H')| = |V(H)| + 4|E(H)|
  // the explicit H-model of x_graph on a subdivision of H
  HModel x_model;
};

// Generalized construction for any H with two distinct cycles: subdivide H
// four times, delete the middle edges of one cycle-only edge from each cycle,
// and run the butterfly construction with X in place of S (original vertices
// see exactly V(C'_1) u V(C'_2) inside X).
TwoCycleGadget general_two_cycle_gadget(const Graph& h, const Graph& g);

}  // namespace hgraph
