#include "knotbrt/diagram_builder.hpp"

#include <algorithm>
#include <string>

#include "knotbrt/error.hpp"

namespace knotbrt {

int DiagramBuilder::add_crossing(int over_strand) {
  if (over_strand != 0 && over_strand != 1) {
    throw Error(ErrorKind::Index, "over strand must be 0 or 1");
  }
  over_.push_back(over_strand);
  link_.insert(link_.end(), 4, -1);
  return static_cast<int>(over_.size()) - 1;
}

void DiagramBuilder::connect(Arm a, Arm b) {
  const int ia = 4 * a.crossing + a.arm;
  const int ib = 4 * b.crossing + b.arm;
  if (ia < 0 || ib < 0 || ia >= static_cast<int>(link_.size()) ||
      ib >= static_cast<int>(link_.size()) || a.arm < 0 || a.arm > 3 || b.arm < 0 || b.arm > 3) {
    throw Error(ErrorKind::Index, "arm out of range");
  }
  if (link_[ia] != -1 || link_[ib] != -1 || ia == ib) {
    throw Error(ErrorKind::Label, "arm connected twice", static_cast<std::size_t>(a.crossing));
  }
  link_[ia] = ib;
  link_[ib] = ia;
}

void DiagramBuilder::orient(Arm incoming) { hints_.push_back(4 * incoming.crossing + incoming.arm); }

PlanarDiagram DiagramBuilder::build() const {
  const int arms = static_cast<int>(link_.size());
  const int n = arms / 4;
  for (int i = 0; i < arms; ++i) {
    if (link_[i] == -1) {
      throw Error(ErrorKind::Label, "unconnected arm " + std::to_string(i % 4), static_cast<std::size_t>(i / 4));
    }
  }
  auto through = [](int a) { return 4 * (a / 4) + (a % 4 + 2) % 4; };

  // Entering arms in traversal order, one list per component.
  std::vector<int> component_of(arms, -1);
  std::vector<std::vector<int>> components;
  for (int start = 0; start < arms; ++start) {
    if (component_of[start] != -1) continue;
    std::vector<int> entering;
    const int id = static_cast<int>(components.size());
    int cur = start;
    do {
      entering.push_back(cur);
      component_of[cur] = id;
      component_of[through(cur)] = id;
      cur = link_[through(cur)];
    } while (cur != start);
    components.push_back(std::move(entering));
  }

  std::vector<int> forward(components.size(), -1);  // 1 keep, 0 reverse
  for (int h : hints_) {
    const int c = component_of.at(h);
    const auto& entering = components[c];
    const int want = std::find(entering.begin(), entering.end(), h) != entering.end() ? 1 : 0;
    if (forward[c] != -1 && forward[c] != want) {
      throw Error(ErrorKind::Orientation, "conflicting orientation hints", static_cast<std::size_t>(h / 4));
    }
    forward[c] = want;
  }

  std::vector<int> edge_label(arms, 0);
  std::vector<char> is_entering(arms, 0);
  Label next = 1;
  for (std::size_t c = 0; c < components.size(); ++c) {
    std::vector<int> entering = components[c];
    if (forward[c] == 0) {
      // Reversed traversal enters through the former exits, in reverse order.
      std::vector<int> rev;
      for (auto it = entering.rbegin(); it != entering.rend(); ++it) rev.push_back(through(*it));
      entering = std::move(rev);
    }
    for (int a : entering) {
      is_entering[a] = 1;
      const int exit = through(a);
      edge_label[exit] = next;
      edge_label[link_[exit]] = next;
      ++next;
    }
  }

  std::vector<Crossing> crossings(n);
  std::vector<int> signs(n);
  for (int x = 0; x < n; ++x) {
    const int under_a = over_[x] == 0 ? 1 : 0;
    const int under_in = is_entering[4 * x + under_a] ? under_a : under_a + 2;
    const int over_a = 1 - under_a;
    const int over_in = is_entering[4 * x + over_a] ? over_a : over_a + 2;
    for (int k = 0; k < 4; ++k) crossings[x].ports[k] = edge_label[4 * x + (under_in + k) % 4];
    signs[x] = ((over_in - under_in + 4) % 4 == 3) ? 1 : -1;
  }
  return PlanarDiagram(std::move(crossings), free_loops_, std::move(signs));
}

}  // namespace knotbrt
