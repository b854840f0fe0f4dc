#include "knotbrt/state_graph.hpp"

#include <string>

#include "knotbrt/error.hpp"

namespace knotbrt {

namespace {

void require_connected(const PlanarDiagram& d) {
  if (!d.is_connected()) throw Error(ErrorKind::DisconnectedDiagram, "diagram is not connected");
}

void require_state(const PlanarDiagram& d, const State& s) {
  if (s.size() != d.crossing_count()) {
    throw Error(ErrorKind::InvalidState, "state has " + std::to_string(s.size()) + " entries for " +
                                             std::to_string(d.crossing_count()) + " crossings");
  }
}

}  // namespace

RibbonGraph build_state_graph(const PlanarDiagram& d, const State& s, std::optional<int> outer_face) {
  require_connected(d);
  require_state(d, s);
  const StateCircles circles = trace_state_circles(d, s, outer_face);
  Cycles vertices;
  vertices.reserve(circles.size());
  for (const StateCircle& c : circles.circles) {
    std::vector<HalfEdge> cyc;
    cyc.reserve(c.ends.size());
    for (const SpliceEnd& end : c.ends) cyc.push_back(2 * end.crossing + end.site);
    vertices.push_back(std::move(cyc));
  }
  std::vector<Edge> edges;
  edges.reserve(d.crossing_count());
  for (int x = 0; x < static_cast<int>(d.crossing_count()); ++x) edges.push_back({2 * x, 2 * x + 1});
  RibbonGraph g(std::move(vertices), std::move(edges));

  const GraphCounts c = counts(g);
  const int expected_v = count_state_circles(d, s);
  const int expected_f = count_state_circles(d, dual_state(s));
  if (c.v != expected_v || c.e != static_cast<int>(d.crossing_count()) || c.f != expected_f || c.k != 1) {
    throw Error(ErrorKind::Internal, "state graph counts (v=" + std::to_string(c.v) + ", f=" + std::to_string(c.f) +
                                         ") disagree with circle counts (" + std::to_string(expected_v) + ", " +
                                         std::to_string(expected_f) + ")");
  }
  return g;
}

RibbonGraph all_A(const PlanarDiagram& d) { return build_state_graph(d, State::all(d.crossing_count(), Splice::A)); }

RibbonGraph all_B(const PlanarDiagram& d) { return build_state_graph(d, State::all(d.crossing_count(), Splice::B)); }

int turaev_genus_of_diagram(const PlanarDiagram& d) {
  const int g = counts(all_A(d)).g;
  const int c = static_cast<int>(d.crossing_count());
  const int sa = count_state_circles(d, State::all(d.crossing_count(), Splice::A));
  const int sb = count_state_circles(d, State::all(d.crossing_count(), Splice::B));
  if (2 * g != 2 - sa - sb + c) {
    throw Error(ErrorKind::Internal, "ribbon genus " + std::to_string(g) + " disagrees with circle count formula");
  }
  return g;
}

bool is_alternating_diagram(const PlanarDiagram& d) {
  const bool genus_zero = turaev_genus_of_diagram(d) == 0;
  if (genus_zero != is_connected_sum_of_alternating(d)) {
    throw Error(ErrorKind::Internal, "genus test and connected-sum alternation scan disagree");
  }
  return genus_zero;
}

}  // namespace knotbrt
