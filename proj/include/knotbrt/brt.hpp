#pragma once

// The ribbon-graph polynomial C(G; X, Y, Z), normalized so that a bridge
// contributes X and a loop 1 + Y, computed three independent ways.

#include <cstddef>
#include <functional>
#include <vector>

#include "knotbrt/polynomials.hpp"
#include "knotbrt/ribbon_graph.hpp"

namespace knotbrt {

/// A permutation of edge ids; order[0] is the smallest edge.
using EdgeOrder = std::vector<std::size_t>;

EdgeOrder identity_order(std::size_t edges);

struct ActivityRecord {
  std::vector<std::size_t> tree;
  std::vector<std::size_t> internally_active;
  std::vector<std::size_t> externally_active;
};

inline constexpr int kDefaultBaseCaseCap = 24;

/// Deletion/contraction with a one-vertex base case summed over all
/// spanning subgraphs.  Requires a connected graph.  Throws BaseCaseTooLarge
/// when a one-vertex subproblem has more than `base_case_cap` edges.
MultiPoly brt_recursive(const RibbonGraph& g, int base_case_cap = kDefaultBaseCaseCap);

/// Sum over all spanning subgraphs H of (X-1)^(k(H)-k(G)) Y^n(H) Z^g(H).
/// Accepts disconnected graphs.
MultiPoly brt_subgraph(const RibbonGraph& g);

/// Sum over spanning trees of X^i(T) times the sum over subsets S of the
/// externally active edges of Y^n(T+S) Z^g(T+S).  Requires a connected graph.
MultiPoly brt_tree_expansion(const RibbonGraph& g, const EdgeOrder& order);

/// Calls `visit` once per spanning tree of the underlying graph, with
/// activities measured in `order`.  Requires a connected graph.
void enumerate_spanning_trees(const RibbonGraph& g, const EdgeOrder& order,
                              const std::function<void(const ActivityRecord&)>& visit);

enum class BrtMethod { Recursive, Subgraph, Tree };

MultiPoly brt(const RibbonGraph& g, BrtMethod method);

}  // namespace knotbrt
