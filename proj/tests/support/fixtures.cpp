#include "fixtures.hpp"

#include <algorithm>
#include <cstdlib>

#include "knotbrt/diagram_builder.hpp"

namespace fixture {

knotbrt::PlanarDiagram trefoil() { return knotbrt::parse_pd(kTrefoil); }
knotbrt::PlanarDiagram figure_eight() { return knotbrt::parse_pd(kFigureEight); }
knotbrt::PlanarDiagram eight_twenty_one() { return knotbrt::parse_pd(kEightTwentyOne); }

knotbrt::PlanarDiagram pretzel(const std::vector<int>& columns) {
  using Arm = knotbrt::DiagramBuilder::Arm;
  knotbrt::DiagramBuilder b;
  // Arms counterclockwise: SW, SE, NE, NW.
  std::vector<Arm> top_left, top_right, bottom_left, bottom_right;
  for (int n : columns) {
    int first = -1;
    int prev = -1;
    for (int j = 0; j < std::abs(n); ++j) {
      const int x = b.add_crossing(n > 0 ? 0 : 1);
      if (prev >= 0) {
        b.connect({prev, 3}, {x, 0});
        b.connect({prev, 2}, {x, 1});
      } else {
        first = x;
      }
      prev = x;
    }
    bottom_left.push_back({first, 0});
    bottom_right.push_back({first, 1});
    top_left.push_back({prev, 3});
    top_right.push_back({prev, 2});
  }
  const std::size_t m = columns.size();
  for (std::size_t i = 0; i + 1 < m; ++i) {
    b.connect(top_right[i], top_left[i + 1]);
    b.connect(bottom_right[i], bottom_left[i + 1]);
  }
  b.connect(top_left[0], top_right[m - 1]);
  b.connect(bottom_left[0], bottom_right[m - 1]);
  return b.build();
}

knotbrt::RibbonGraph printed_eight_twenty_one_graph() {
  knotbrt::Cycles v{{2, 6, 12, 10, 14, 16, 8, 4, 15, 13}, {1, 3, 5}, {7, 9, 11}};
  for (auto& c : v) for (auto& h : c) --h;
  std::vector<knotbrt::Edge> e;
  for (int i = 0; i < 8; ++i) e.push_back({2 * i, 2 * i + 1});
  return knotbrt::RibbonGraph(std::move(v), std::move(e));
}

std::vector<int> orbit_sizes(const knotbrt::Cycles& cycles) {
  std::vector<int> s;
  for (const auto& c : cycles) s.push_back(static_cast<int>(c.size()));
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace fixture
