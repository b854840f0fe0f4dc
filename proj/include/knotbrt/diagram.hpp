#pragma once

// Planar link diagrams given as PD codes.
//
// A crossing X[a,b,c,d] lists the four edge labels at its ports in
// counterclockwise order, starting with the incoming under-strand a; the
// under-strand leaves through c.  The A-smoothing joins the ports (a,b) and
// (c,d), the B-smoothing joins (b,c) and (d,a).  A crossing is positive when
// the over-strand runs from d to b.
//
// Port p of crossing x is addressed as PortRef{x, p}.  Corner k of a crossing
// is the wedge between ports k and k+1 (mod 4).

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace knotbrt {

using Label = int;

struct Crossing {
  std::array<Label, 4> ports{};
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct PortRef {
  int crossing = 0;
  int port = 0;
  friend bool operator==(const PortRef&, const PortRef&) = default;
};

enum class Splice : std::uint8_t { A, B };

class State {
 public:
  State() = default;
  explicit State(std::vector<Splice> choices) : choices_(std::move(choices)) {}

  static State all(std::size_t crossings, Splice s) { return State(std::vector<Splice>(crossings, s)); }

  /// Parses a string of 'A'/'B' (or '0' for A, '1' for B), one per crossing.
  static State parse(std::string_view text);

  std::size_t size() const noexcept { return choices_.size(); }
  Splice operator[](std::size_t i) const { return choices_[i]; }
  std::span<const Splice> choices() const noexcept { return choices_; }
  std::string to_string() const;

  friend bool operator==(const State&, const State&) = default;

 private:
  std::vector<Splice> choices_;
};

/// Flips every smoothing.
State dual_state(const State& s);

class PlanarDiagram {
 public:
  /// The crossingless one-circle unknot.
  PlanarDiagram();

  /// Validates labels, orientation and planarity.  Component orientations
  /// come from the under-strands; a component that only passes over is
  /// oriented by `signs` when given (+1/-1 per crossing), otherwise by
  /// sequential edge numbering.
  PlanarDiagram(std::vector<Crossing> crossings, int free_loops = 0,
                std::optional<std::vector<int>> signs = std::nullopt);

  /// `n` disjoint crossingless circles.
  static PlanarDiagram unlink(int n);

  std::span<const Crossing> crossings() const noexcept { return crossings_; }
  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  int free_loops() const noexcept { return free_loops_; }
  int component_count() const noexcept { return component_count_; }
  bool is_connected() const noexcept { return connected_; }

  /// +1 or -1.
  int sign(std::size_t crossing) const { return positive_[crossing] ? 1 : -1; }

  /// The port at the other end of the edge leaving `p`.
  PortRef other_end(PortRef p) const { return other_end_[index(p)]; }

  Label label(PortRef p) const { return crossings_[p.crossing].ports[p.port]; }

  /// Faces of the projection graph, one id per corner.
  int face_count() const noexcept { return face_count_; }
  int face_of_corner(int crossing, int corner) const { return corner_face_[4 * crossing + corner]; }

  /// Connected component of the projection graph containing a crossing.
  int graph_component(int crossing) const { return graph_component_[crossing]; }
  int graph_component_count() const noexcept { return graph_component_count_; }

  /// Default outer face of a projection-graph component: the face to the left
  /// of the lowest-labelled edge, entering at its lower (crossing, port) end.
  int default_outer_face(int component) const;

  nlohmann::json to_json() const;

  friend bool operator==(const PlanarDiagram& a, const PlanarDiagram& b) {
    return a.crossings_ == b.crossings_ && a.free_loops_ == b.free_loops_ &&
           a.positive_ == b.positive_;
  }

 private:
  static std::size_t index(PortRef p) { return 4 * static_cast<std::size_t>(p.crossing) + p.port; }

  void link_ports();
  void orient(const std::optional<std::vector<int>>& signs);
  void trace_faces();

  std::vector<Crossing> crossings_;
  std::vector<bool> positive_;
  std::vector<PortRef> other_end_;
  std::vector<int> corner_face_;
  std::vector<int> graph_component_;
  int free_loops_ = 1;
  int component_count_ = 1;
  int graph_component_count_ = 0;
  int face_count_ = 0;
  bool connected_ = true;
};

/// Parses whitespace-separated terms X[a,b,c,d].  Empty text is the unknot.
PlanarDiagram parse_pd(std::string_view text);

/// Closure of a braid word of signed generator indices ("1 -2 1").  The
/// strand count defaults to one more than the largest index.  Positive
/// generators give positive crossings.
PlanarDiagram parse_braid(std::string_view word, std::optional<int> strands = std::nullopt);
PlanarDiagram braid_closure(std::span<const int> word, int strands);

int writhe(const PlanarDiagram& d);

/// Swaps over and under at every crossing; orientation is kept.
PlanarDiagram mirror(const PlanarDiagram& d);

/// True when every strand alternates over, under, over, ... along every
/// component.
bool alternation_scan(const PlanarDiagram& d);

/// True when the diagram splits along circles meeting it in two points into
/// pieces that each pass alternation_scan.
bool is_connected_sum_of_alternating(const PlanarDiagram& d);

// ---------------------------------------------------------------------------
// State circles

enum class Rotation : std::uint8_t { Clockwise, Counterclockwise };

/// One smoothing arc: crossing plus site 0 or 1.  For an A-smoothing site 0
/// is the arc (a,b) and site 1 the arc (c,d); for B, site 0 is (b,c) and
/// site 1 is (d,a).
struct SpliceEnd {
  int crossing = 0;
  int site = 0;
  friend bool operator==(const SpliceEnd&, const SpliceEnd&) = default;
};

struct StateCircle {
  std::vector<SpliceEnd> ends;  // in traversal order
  int depth = 0;                // number of circles enclosing this one
  Rotation rotation = Rotation::Counterclockwise;
};

struct StateCircles {
  std::vector<StateCircle> circles;
  std::size_t size() const noexcept { return circles.size(); }
};

/// Smooths every crossing by `s`, orients each circle clockwise when it is
/// nested at odd depth and counterclockwise otherwise, and lists its splice
/// ends in that direction.  Depths are measured from the default outer face
/// of each projection-graph component, or from `outer_face` for the
/// component that contains it.
StateCircles trace_state_circles(const PlanarDiagram& d, const State& s,
                                 std::optional<int> outer_face = std::nullopt);

/// Circle count only; the fast path used by state sums.
int count_state_circles(const PlanarDiagram& d, const State& s);

}  // namespace knotbrt
