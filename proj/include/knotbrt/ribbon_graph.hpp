#pragma once

// Oriented ribbon graphs as permutation data on half-edges.
//
// Vertices are stored explicitly as cyclic sequences of half-edges (sigma0),
// so an isolated vertex is an empty sequence and survives edge deletion.
// Edges pair half-edges (sigma1).  Faces are the orbits of
// sigma2 = sigma1 o sigma0^-1, with one extra face per isolated vertex.
//
// Edges are addressed by their position in edges(); deletion and
// contraction remove that entry and keep the relative order of the rest.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace knotbrt {

using HalfEdge = int;

struct Edge {
  HalfEdge first = 0;
  HalfEdge second = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct GraphCounts {
  int v = 0;  // vertices
  int e = 0;  // edges
  int f = 0;  // faces
  int k = 0;  // connected components
  int g = 0;  // genus
  int n = 0;  // nullity
  friend bool operator==(const GraphCounts&, const GraphCounts&) = default;
};

using Cycles = std::vector<std::vector<HalfEdge>>;

class RibbonGraph {
 public:
  /// The graph with no vertices.
  RibbonGraph() = default;

  /// Throws InvalidRibbonGraph unless every half-edge id is non-negative,
  /// sits in exactly one vertex sequence and exactly one edge.
  RibbonGraph(Cycles vertices, std::vector<Edge> edges);

  static RibbonGraph isolated_vertex() { return RibbonGraph({{}}, {}); }

  const Cycles& vertices() const noexcept { return vertices_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  HalfEdge partner(HalfEdge h) const { return partner_[h]; }
  int vertex_of(HalfEdge h) const { return vertex_of_[h]; }
  /// sigma0
  HalfEdge next_at_vertex(HalfEdge h) const;
  /// sigma0^-1
  HalfEdge previous_at_vertex(HalfEdge h) const;
  /// sigma2 = sigma1 o sigma0^-1
  HalfEdge next_in_face(HalfEdge h) const { return partner(previous_at_vertex(h)); }

  /// Orbits of sigma2 on half-edges (isolated vertices excluded).
  Cycles face_cycles() const;
  Cycles edge_cycles() const;

  /// Endpoint vertices of edge e.
  std::pair<int, int> endpoints(std::size_t e) const;

  friend bool operator==(const RibbonGraph&, const RibbonGraph&) = default;

 private:
  Cycles vertices_;
  std::vector<Edge> edges_;
  std::vector<int> vertex_of_;
  std::vector<int> position_;
  std::vector<HalfEdge> partner_;
};

GraphCounts counts(const RibbonGraph& g);

/// Counts of the spanning subgraph keeping the edges whose bit is set in
/// `edge_mask` (bit i is edge i).  Requires edge_count() <= 64.
GraphCounts subgraph_counts(const RibbonGraph& g, std::uint64_t edge_mask);

int component_count(const RibbonGraph& g);

RibbonGraph delete_edge(const RibbonGraph& g, std::size_t e);

/// Merges the endpoints of a non-loop edge: (e+, u1..up) and (e-, w1..wq)
/// become (u1..up, w1..wq).  Throws LoopContraction for loops.
RibbonGraph contract_edge(const RibbonGraph& g, std::size_t e);

/// Vertices are the faces of g; edges are shared.
RibbonGraph dual(const RibbonGraph& g);

bool is_loop(const RibbonGraph& g, std::size_t e);
bool is_bridge(const RibbonGraph& g, std::size_t e);

/// Half-edges renumbered 1..2e in order of first appearance when vertices
/// are read in their stored order; each vertex rotated to start at its
/// smallest half-edge, vertices sorted by it (isolated vertices last), edges
/// sorted.
RibbonGraph canonical_relabeling(const RibbonGraph& g);

/// Isomorphism-invariant code: equal for two graphs exactly when there is an
/// orientation-preserving ribbon-graph isomorphism between them.
std::vector<int> canonical_code(const RibbonGraph& g);

/// "{{1, 3, 5}, {2, 4}}" with each cycle starting at its smallest entry and
/// cycles sorted by that entry.  Half-edges are printed as h + offset.
std::string cycle_notation(const Cycles& cycles, int offset = 0);

/// {"vertices": [[h,...],...], "edges": [[h,h'],...]} under canonical_relabeling.
nlohmann::json to_json(const RibbonGraph& g);
nlohmann::json to_json(const GraphCounts& c);

}  // namespace knotbrt
