#pragma once

#include <string>
#include <vector>

#include "knotbrt/diagram.hpp"
#include "knotbrt/ribbon_graph.hpp"

namespace fixture {

// X[1,1,2,2]: one crossing, writhe +1.
inline const std::string kPositiveKink = "X[1,1,2,2]";

// Writhe -3 under the positive rule "over-strand runs d -> b".
inline const std::string kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

inline const std::string kFigureEight = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

// 8_21, rebuilt from the orbit data of its all-A ribbon graph.
inline const std::string kEightTwentyOne =
    "X[16,6,1,5] X[6,4,7,3] X[4,16,5,15] X[10,8,11,7] X[8,14,9,13] X[14,10,15,9] X[1,12,2,13] X[11,2,12,3]";

knotbrt::PlanarDiagram trefoil();
knotbrt::PlanarDiagram figure_eight();
knotbrt::PlanarDiagram eight_twenty_one();

/// Pretzel diagram: one vertical twist column per entry, |n| crossings each,
/// the sign choosing the handedness of the column.
knotbrt::PlanarDiagram pretzel(const std::vector<int>& columns);

/// The all-A ribbon graph of 8_21 as printed: half-edges 1..16 stored as
/// 0..15, sigma0 = (2 6 12 10 14 16 8 4 15 13)(1 3 5)(7 9 11).
knotbrt::RibbonGraph printed_eight_twenty_one_graph();

/// Orbit sizes, sorted.
std::vector<int> orbit_sizes(const knotbrt::Cycles& cycles);

}  // namespace fixture
