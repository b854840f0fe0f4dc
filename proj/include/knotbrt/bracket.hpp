#pragma once

// Kauffman bracket, Jones polynomial and the span-based genus bounds.
//
// The bracket is normalized so that a single circle has bracket 1 and each
// further disjoint circle multiplies by delta = -A^2 - A^-2.

#include <optional>

#include "knotbrt/brt.hpp"
#include "knotbrt/diagram.hpp"
#include "knotbrt/polynomials.hpp"

namespace knotbrt {

inline constexpr int kDefaultStatesumCap = 22;

/// Sum over all 2^c states.  Throws TooManyCrossings above `cap`.  Work is
/// split over `threads` workers (0 picks the hardware concurrency); the
/// result does not depend on the split.
LaurentA bracket_statesum(const PlanarDiagram& d, int cap = kDefaultStatesumCap, unsigned threads = 0);

/// Specialization of the all-A ribbon-graph polynomial.
LaurentA bracket_via_brt(const PlanarDiagram& d, BrtMethod method = BrtMethod::Recursive);

/// (-A)^(-3w) <d> with A = t^(-1/4).
LaurentT jones(const PlanarDiagram& d, BrtMethod method = BrtMethod::Recursive);

struct Adequacy {
  bool a_adequate = false;
  bool b_adequate = false;
};

Adequacy adequacy(const PlanarDiagram& d);

struct SpanBounds {
  int max_bound = 0;   // e + 2v - 2
  int min_bound = 0;   // -e - 2v' + 2
  int span_bound = 0;  // max_bound - min_bound
  bool exact_if_adequate = false;  // both adequacy flags hold, so span = span_bound
  int max_degree = 0;
  int min_degree = 0;
  int span = 0;
};

/// Throws Internal if an inequality fails, or if an equality promised by an
/// adequacy flag does not hold.
SpanBounds span_bounds(const PlanarDiagram& d);

struct GenusBound {
  int genus_of_diagram = 0;
  int jones_span = 0;  // in units of t
  int upper_bound_from_span = 0;
};

GenusBound turaev_genus_bound(const PlanarDiagram& d);

struct GenusCertificate {
  int genus = 0;
  bool certified_invariant = false;
  int bracket_span = 0;  // 4 * genus = 4e - bracket_span when certified
};

GenusCertificate genus_invariance_certificate(const PlanarDiagram& d);

}  // namespace knotbrt
