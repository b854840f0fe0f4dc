#pragma once

// The oriented ribbon graph D(s) of a diagram and a state.
//
// Vertices are the state circles; each crossing contributes one edge whose
// two half-edges are its splice ends, numbered 2*crossing + site.  A vertex
// lists its half-edges in the order met when walking the circle in its
// rotation (see trace_state_circles).

#include <optional>

#include "knotbrt/diagram.hpp"
#include "knotbrt/ribbon_graph.hpp"

namespace knotbrt {

/// Throws DisconnectedDiagram unless d is connected.  Checks
/// v = |circles(s)|, e = c and f = |circles(dual s)| before returning.
RibbonGraph build_state_graph(const PlanarDiagram& d, const State& s,
                              std::optional<int> outer_face = std::nullopt);

RibbonGraph all_A(const PlanarDiagram& d);
RibbonGraph all_B(const PlanarDiagram& d);

/// g(all_A(d)), cross-checked against (2 - |sA| - |sB| + c) / 2.
int turaev_genus_of_diagram(const PlanarDiagram& d);

/// True when the all-A graph has genus 0.  Cross-checked against the
/// connected-sum alternation scan of the diagram.
bool is_alternating_diagram(const PlanarDiagram& d);

}  // namespace knotbrt
