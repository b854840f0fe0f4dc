#pragma once

#include <vector>

#include "knotbrt/diagram.hpp"

namespace knotbrt {

/// Assembles a PlanarDiagram from crossings described by their geometry.
///
/// Each crossing has four arms numbered counterclockwise; the strands run
/// through arms (0,2) and (1,3).  Arms are wired together with connect(), and
/// build() numbers the edges consecutively along each component and emits
/// the PD code with every crossing rooted at its incoming under-arm.
class DiagramBuilder {
 public:
  struct Arm {
    int crossing = 0;
    int arm = 0;
  };

  /// `over_strand` is 0 when the strand through arms (0,2) passes over,
  /// 1 when the strand through arms (1,3) does.
  int add_crossing(int over_strand);

  void connect(Arm a, Arm b);

  /// Declares that a strand enters its crossing through `arm`.  Components
  /// without a hint are traversed starting from their lowest arm.
  void orient(Arm incoming);

  void add_free_loop() { ++free_loops_; }

  PlanarDiagram build() const;

 private:
  std::vector<int> over_;
  std::vector<int> link_;  // 4 * crossing + arm -> linked arm, or -1
  std::vector<int> hints_;
  int free_loops_ = 0;
};

}  // namespace knotbrt
