#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hgraph/graph.hpp"

namespace hgraph {

// Circular-arc model as a cyclic order of endpoint symbols.  Symbol 2v is the
// start of vertex v's arc, 2v+1 its end; the arc runs clockwise from start to
// end, endpoints included.  Symbols 2n..2n+num_points-1 are marked circle
// points (used by the given-intersection-points solver).
struct ArcModel {
  int n = 0;
  int num_points = 0;
  std::vector<int> order;

  int symbol_count() const { return 2 * n + num_points; }
  std::vector<int> positions() const;  // positions()[symbol] = index in order

  // positions covered by v's arc, as a bitset over order indices
  Bits arc_positions(int v) const;
  bool arcs_intersect(int u, int v) const;
  bool arc_covers_position(int v, int position) const;
  int point_position(int i) const;  // position of marked point i
};

bool arc_model_realizes(const Graph& g, const ArcModel& m);

enum class PairKind { kDisjoint, kContains, kContained, kCoverCircle, kOverlap };

// Relation of psi(u) with respect to psi(v) forced in every normalized model,
// read off the neighborhoods (conditions applied in written order).
// Pre: g has no universal vertices and no twins.
PairKind classify_vertex_pair(const Graph& g, int u, int v);

// The geometric relation the arcs of u and v exhibit in m.
PairKind geometric_pair_kind(const ArcModel& m, int u, int v);

constexpr std::uint64_t kDefaultCaBudget = 80'000'000;
constexpr int kDefaultCaMaxN = 14;

// Exact recognition by backtracking over canonical cyclic endpoint
// sequences; vertex 0's start is pinned to position 0.  Throws SearchLimit on
// budget/size-cap exhaustion.
std::optional<ArcModel> recognize_ca(const Graph& g, std::uint64_t budget = kDefaultCaBudget,
                                     int max_n = kDefaultCaMaxN);

// True iff some circle point lies inside every arc of C.
bool helly_check(const ArcModel& m, const Bits& clique);

// Model in which every maximal clique has the Helly property, or nullopt.
std::optional<ArcModel> recognize_helly_ca(const Graph& g,
                                           std::uint64_t budget = kDefaultCaBudget,
                                           int max_n = kDefaultCaMaxN);

// Model in which each given clique has the Helly property, or nullopt.
std::optional<ArcModel> solve_helly_cliques(const Graph& g, const std::vector<Bits>& cliques,
                                            std::uint64_t budget = kDefaultCaBudget,
                                            int max_n = kDefaultCaMaxN);

// Model with marked points P_1..P_k (in this cyclic order) such that P_i lies
// in the intersection of the arcs of C_i.
std::optional<ArcModel> solve_helly_cliques_points(const Graph& g,
                                                   const std::vector<Bits>& cliques,
                                                   std::uint64_t budget = kDefaultCaBudget,
                                                   int max_n = kDefaultCaMaxN);

// Hsu-style normalization by arc extension only: afterwards every pair's
// geometric relation equals classify_vertex_pair.  Pre: no universal
// vertices, no twins, m realizes g.
ArcModel normalize_arc_model(const Graph& g, const ArcModel& m);

}  // namespace hgraph
