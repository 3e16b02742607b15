#pragma once

#include <bitset>
#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hgraph {

// Everything in this library runs at desk scale; 128 vertices is enough for
// every graph we ever touch (inputs, gadgets, and subdivided hosts).
constexpr int kMaxVertices = 128;
using Bits = std::bitset<kMaxVertices>;

using VertexSet = std::vector<int>;          // always kept sorted ascending
using Edge = std::pair<int, int>;            // always u < v

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct ContractViolation : std::logic_error {
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// A search or enumeration hit its size cap or node budget.  Distinct from a
// NO answer: callers that see this must report "inconclusive".
struct SearchLimit : std::runtime_error {
  explicit SearchLimit(const std::string& what) : std::runtime_error(what) {}
};

struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

VertexSet bits_to_set(const Bits& b);
Bits set_to_bits(const VertexSet& s);
int first_bit(const Bits& b);
int next_bit(const Bits& b, int prev);

// Simple undirected graph on vertices {0..n-1}.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const { return u != v && adj_[u].test(v); }
  void add_edge(int u, int v);
  const Bits& neighbors(int v) const { return adj_[v]; }
  Bits closed_neighborhood(int v) const;
  int degree(int v) const { return static_cast<int>(adj_[v].count()); }

  // N(U) = vertices outside U adjacent to some vertex of U.
  Bits neighbors_of_set(const Bits& u) const;

  Bits all_vertices() const;
  Graph induced(const Bits& keep, std::vector<int>* old_of_new = nullptr) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;   // sorted, canonical
  std::vector<Bits> adj_;
};

// --- basic structure queries ---------------------------------------------

Graph load_edge_list(std::istream& in);
Graph load_edge_list_string(const std::string& text);
std::string to_edge_list(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g);
std::vector<Bits> connected_component_masks(const Graph& g);
bool is_connected_subset(const Graph& g, const Bits& s);

// All inclusion-maximal cliques, canonically sorted.  Pivoted Bron-Kerbosch;
// meant for desk-scale graphs.
std::vector<VertexSet> maximal_cliques(const Graph& g);
std::vector<Bits> maximal_clique_masks(const Graph& g);
bool is_clique(const Graph& g, const Bits& s);
bool is_maximal_clique(const Graph& g, const Bits& s);

// An induced cycle on >= 4 vertices, if one exists.
std::optional<VertexSet> find_hole(const Graph& g);

// Perfect-elimination-ordering test (lexicographic BFS); independent of
// find_hole so the two can cross-check each other.
bool is_chordal(const Graph& g);

// Lex-BFS order, last vertex first is a perfect elimination ordering iff the
// graph is chordal.
std::vector<int> lex_bfs_order(const Graph& g);

struct TwinReduction {
  Graph reduced;
  // origin_to_reduced[v] is the vertex of `reduced` representing v, or -1 if
  // v was removed as a universal vertex.
  std::vector<int> origin_to_reduced;
  std::vector<int> removed_universal;          // original ids
  std::vector<std::pair<int, int>> merged_twins;  // (kept, removed) original ids
};

// Removes universal vertices and merges twins (adjacent vertices with equal
// closed neighborhoods) until neither exists.  Idempotent on its own output.
TwinReduction reduce_twins_universal(const Graph& g);

// --- host graphs and models -----------------------------------------------

// A subdivision of a fixed base graph.  Realized vertex ids: base vertices
// 0..base.n()-1 first, then the inserted vertices of each base edge in
// canonical edge order, walking the path from the smaller endpoint.
class HostGraph {
 public:
  HostGraph() = default;
  HostGraph(Graph base, std::vector<int> subdivision);

  const Graph& base() const { return base_; }
  const std::vector<int>& subdivision() const { return subdivision_; }
  const Graph& realized() const { return realized_; }

  // Realized ids of the path replacing base edge `e`, endpoints included.
  std::vector<int> edge_path(int edge_index) const;
  // First realized inserted vertex of base edge e (closest to the smaller
  // endpoint), or -1 when the edge is not subdivided.
  int first_inserted(int edge_index) const;

 private:
  Graph base_;
  std::vector<int> subdivision_;
  Graph realized_;
};

struct HModel {
  HostGraph host;
  std::vector<Bits> phi;  // per graph vertex, subset of host.realized() vertices
};

enum class ViolationKind { kDisconnected, kMissingEdge, kExtraEdge, kEmptySet };

struct ModelViolation {
  ViolationKind kind;
  int u = -1;
  int v = -1;
};

struct ModelCheckReport {
  bool ok = true;
  std::vector<ModelViolation> violations;
};

ModelCheckReport verify_model(const Graph& g, const HModel& m);

// The intersection graph realized by a model (used by tests and verify).
Graph realized_intersection_graph(const HModel& m);

// --- small helpers used across modules ------------------------------------

bool is_subset(const Bits& a, const Bits& b);   // a subseteq b
std::string format_vertex_set(const Bits& b);

}  // namespace hgraph
