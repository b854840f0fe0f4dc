#include "knotbrt/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "knotbrt/diagram_builder.hpp"
#include "knotbrt/error.hpp"

namespace knotbrt {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

int splice_partner(Splice s, int port) {
  if (s == Splice::A) return port ^ 1;
  switch (port) {
    case 0: return 3;
    case 1: return 2;
    case 2: return 1;
    default: return 0;
  }
}

int splice_site(Splice s, int port) {
  if (s == Splice::A) return port / 2;
  return (port == 1 || port == 2) ? 0 : 1;
}

// Ports of the diagram as flat indices 4x+p, used by the alternation and
// connected-sum scans.
struct PortGraph {
  int crossings = 0;
  std::vector<int> other;

  static int crossing_of(int u) { return u / 4; }
  static int port_of(int u) { return u % 4; }

  bool alternating() const {
    for (int u = 0; u < 4 * crossings; ++u) {
      if (port_of(u) % 2 == port_of(other[u]) % 2) return false;
    }
    return true;
  }

  // Face id of the face to the left of an arrival at port u.
  std::vector<int> arrival_faces() const {
    std::vector<int> face(4 * crossings, -1);
    int id = 0;
    for (int start = 0; start < 4 * crossings; ++start) {
      if (face[start] != -1) continue;
      int cur = start;
      do {
        face[cur] = id;
        const int x = crossing_of(cur);
        cur = other[4 * x + (port_of(cur) + 3) % 4];
      } while (cur != start);
      ++id;
    }
    return face;
  }
};

PortGraph port_graph(const PlanarDiagram& d) {
  PortGraph g;
  g.crossings = static_cast<int>(d.crossing_count());
  g.other.resize(4 * g.crossings);
  for (int x = 0; x < g.crossings; ++x) {
    for (int p = 0; p < 4; ++p) {
      const PortRef o = d.other_end({x, p});
      g.other[4 * x + p] = 4 * o.crossing + o.port;
    }
  }
  return g;
}

// Splits g along the edges {u1,w1} and {u2,w2}; empty when the two edges do
// not separate the crossings.
std::optional<std::pair<PortGraph, PortGraph>> split(const PortGraph& g, int u1, int u2) {
  const int w1 = g.other[u1];
  const int w2 = g.other[u2];
  auto cut = [&](int u) { return u == u1 || u == u2 || u == w1 || u == w2; };
  std::vector<int> side(g.crossings, -1);
  std::queue<int> q;
  side[PortGraph::crossing_of(u1)] = 0;
  q.push(PortGraph::crossing_of(u1));
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int p = 0; p < 4; ++p) {
      const int u = 4 * x + p;
      if (cut(u)) continue;
      const int y = PortGraph::crossing_of(g.other[u]);
      if (side[y] == -1) {
        side[y] = 0;
        q.push(y);
      }
    }
  }
  if (side[PortGraph::crossing_of(w1)] == 0) return std::nullopt;
  int count0 = 0;
  for (int& s : side) {
    if (s == -1) s = 1;
    else ++count0;
  }
  if (side[PortGraph::crossing_of(u2)] != 0 || side[PortGraph::crossing_of(w2)] != 1) return std::nullopt;

  std::vector<int> renumber(g.crossings);
  std::array<int, 2> sizes{0, 0};
  for (int x = 0; x < g.crossings; ++x) renumber[x] = sizes[side[x]]++;
  std::array<PortGraph, 2> parts;
  for (int s = 0; s < 2; ++s) {
    parts[s].crossings = sizes[s];
    parts[s].other.assign(4 * sizes[s], -1);
  }
  auto map_port = [&](int u) { return 4 * renumber[PortGraph::crossing_of(u)] + PortGraph::port_of(u); };
  for (int u = 0; u < 4 * g.crossings; ++u) {
    const int s = side[PortGraph::crossing_of(u)];
    int v = g.other[u];
    if (u == u1) v = u2;
    else if (u == u2) v = u1;
    else if (u == w1) v = w2;
    else if (u == w2) v = w1;
    parts[s].other[map_port(u)] = map_port(v);
  }
  return std::make_pair(std::move(parts[0]), std::move(parts[1]));
}

bool decomposes_into_alternating(const PortGraph& g) {
  if (g.alternating()) return true;
  const std::vector<int> face = g.arrival_faces();
  // Group edges by the unordered pair of faces they separate.
  std::map<std::pair<int, int>, std::vector<int>> by_faces;
  for (int u = 0; u < 4 * g.crossings; ++u) {
    const int w = g.other[u];
    if (w < u) continue;
    const int x = PortGraph::crossing_of(w);
    const int left = face[w];
    const int right = face[4 * x + (PortGraph::port_of(w) + 1) % 4];
    if (left == right) continue;
    by_faces[{std::min(left, right), std::max(left, right)}].push_back(u);
  }
  for (const auto& [faces, edges] : by_faces) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        // Orient the second edge so that its first port lies with u1.
        for (int u2 : {edges[j], g.other[edges[j]]}) {
          if (auto parts = split(g, edges[i], u2)) {
            return decomposes_into_alternating(parts->first) &&
                   decomposes_into_alternating(parts->second);
          }
        }
      }
    }
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// State

State State::parse(std::string_view text) {
  std::vector<Splice> out;
  for (char ch : text) {
    switch (ch) {
      case 'A': case 'a': case '0': out.push_back(Splice::A); break;
      case 'B': case 'b': case '1': out.push_back(Splice::B); break;
      default:
        if (std::isspace(static_cast<unsigned char>(ch))) break;
        throw Error(ErrorKind::InvalidState, std::string("invalid state character '") + ch + "'");
    }
  }
  return State(std::move(out));
}

std::string State::to_string() const {
  std::string s;
  for (Splice c : choices_) s += c == Splice::A ? 'A' : 'B';
  return s;
}

State dual_state(const State& s) {
  std::vector<Splice> out(s.choices().begin(), s.choices().end());
  for (Splice& c : out) c = c == Splice::A ? Splice::B : Splice::A;
  return State(std::move(out));
}

// ---------------------------------------------------------------------------
// PlanarDiagram

PlanarDiagram::PlanarDiagram() = default;

PlanarDiagram::PlanarDiagram(std::vector<Crossing> crossings, int free_loops,
                             std::optional<std::vector<int>> signs)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  if (free_loops_ < 0) throw Error(ErrorKind::Label, "negative number of free loops");
  if (crossings_.empty() && free_loops_ == 0) {
    throw Error(ErrorKind::Label, "a diagram needs at least one crossing or circle");
  }
  if (signs && signs->size() != crossings_.size()) {
    throw Error(ErrorKind::Orientation, "one sign per crossing required");
  }
  link_ports();
  orient(signs);
  trace_faces();
}

PlanarDiagram PlanarDiagram::unlink(int n) { return PlanarDiagram({}, n); }

void PlanarDiagram::link_ports() {
  std::map<Label, std::vector<PortRef>> ends;
  for (std::size_t x = 0; x < crossings_.size(); ++x) {
    for (int p = 0; p < 4; ++p) {
      const Label l = crossings_[x].ports[p];
      if (l <= 0) {
        throw Error(ErrorKind::Label, "edge label " + std::to_string(l) + " is not positive", x);
      }
      ends[l].push_back({static_cast<int>(x), p});
    }
  }
  other_end_.assign(4 * crossings_.size(), {});
  for (const auto& [label, refs] : ends) {
    if (refs.size() != 2) {
      throw Error(ErrorKind::Label,
                  "edge label " + std::to_string(label) + " occurs " + std::to_string(refs.size()) +
                      " times (expected 2)",
                  static_cast<std::size_t>(refs.front().crossing));
    }
    other_end_[index(refs[0])] = refs[1];
    other_end_[index(refs[1])] = refs[0];
  }
}

void PlanarDiagram::orient(const std::optional<std::vector<int>>& signs) {
  const int n = static_cast<int>(crossings_.size());
  positive_.assign(n, false);
  std::vector<char> seen(4 * n, 0);
  component_count_ = free_loops_;

  auto increasing_cyclic = [](const std::vector<Label>& seq) {
    int jumps = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      const Label next = seq[(i + 1) % seq.size()];
      if (next != seq[i] + 1) {
        if (next > seq[i]) return false;
        ++jumps;
      }
    }
    return jumps <= 1;
  };

  for (int start = 0; start < 4 * n; ++start) {
    if (seen[start]) continue;
    ++component_count_;
    std::vector<PortRef> entering;
    PortRef cur{start / 4, start % 4};
    const PortRef first = cur;
    do {
      entering.push_back(cur);
      const PortRef exit{cur.crossing, (cur.port + 2) % 4};
      seen[index(cur)] = 1;
      seen[index(exit)] = 1;
      cur = other_end(exit);
    } while (cur != first);

    bool has_under = false;
    bool forward_ok = true;
    bool reverse_ok = true;
    for (const PortRef& e : entering) {
      if (e.port == 0) { has_under = true; reverse_ok = false; }
      if (e.port == 2) { has_under = true; forward_ok = false; }
    }
    bool forward = true;
    if (has_under) {
      if (!forward_ok && !reverse_ok) {
        const auto bad = std::find_if(entering.begin(), entering.end(), [](const PortRef& e) { return e.port == 2; });
        throw Error(ErrorKind::Orientation,
                    "under-strand enters through the third port; first port must be the incoming under-strand",
                    static_cast<std::size_t>(bad->crossing));
      }
      forward = forward_ok;
    } else if (signs) {
      const PortRef& e = entering.front();
      forward = (e.port == 3) == ((*signs)[e.crossing] > 0);
    } else {
      std::vector<Label> seq;
      for (const PortRef& e : entering) seq.push_back(label({e.crossing, (e.port + 2) % 4}));
      if (!increasing_cyclic(seq)) {
        std::vector<Label> rev;
        for (const PortRef& e : entering) rev.push_back(label(e));
        std::reverse(rev.begin(), rev.end());
        if (increasing_cyclic(rev)) forward = false;
      }
    }
    for (const PortRef& e : entering) {
      const int in_port = forward ? e.port : (e.port + 2) % 4;
      if (in_port % 2 == 1) positive_[e.crossing] = (in_port == 3);
    }
  }

  if (signs) {
    for (int x = 0; x < n; ++x) {
      if (sign(x) != (*signs)[x]) {
        throw Error(ErrorKind::Orientation, "crossing sign disagrees with strand orientation",
                    static_cast<std::size_t>(x));
      }
    }
  }
}

void PlanarDiagram::trace_faces() {
  const int n = static_cast<int>(crossings_.size());
  corner_face_.assign(4 * n, -1);
  face_count_ = 0;
  for (int x = 0; x < n; ++x) {
    for (int p = 0; p < 4; ++p) {
      // Arrival at port p has corner p-1 on its left.
      if (corner_face_[4 * x + (p + 3) % 4] != -1) continue;
      PortRef cur{x, p};
      do {
        corner_face_[4 * cur.crossing + (cur.port + 3) % 4] = face_count_;
        cur = other_end({cur.crossing, (cur.port + 3) % 4});
      } while (cur != PortRef{x, p});
      ++face_count_;
    }
  }

  DisjointSets sets(n);
  for (int x = 0; x < n; ++x) {
    for (int p = 0; p < 4; ++p) sets.unite(x, other_end({x, p}).crossing);
  }
  graph_component_.assign(n, -1);
  std::map<int, int> ids;
  for (int x = 0; x < n; ++x) {
    auto [it, inserted] = ids.try_emplace(sets.find(x), static_cast<int>(ids.size()));
    graph_component_[x] = it->second;
  }
  graph_component_count_ = static_cast<int>(ids.size());

  std::vector<int> crossings_in(graph_component_count_, 0);
  std::vector<std::vector<char>> faces_in(graph_component_count_, std::vector<char>(face_count_, 0));
  for (int x = 0; x < n; ++x) {
    ++crossings_in[graph_component_[x]];
    for (int k = 0; k < 4; ++k) faces_in[graph_component_[x]][corner_face_[4 * x + k]] = 1;
  }
  for (int c = 0; c < graph_component_count_; ++c) {
    const int faces = static_cast<int>(std::count(faces_in[c].begin(), faces_in[c].end(), 1));
    if (faces != crossings_in[c] + 2) {
      const auto x = std::find(graph_component_.begin(), graph_component_.end(), c) - graph_component_.begin();
      throw Error(ErrorKind::Planarity,
                  "port rotation is not planar: " + std::to_string(faces) + " faces for " +
                      std::to_string(crossings_in[c]) + " crossings",
                  static_cast<std::size_t>(x));
    }
  }
  connected_ = n == 0 ? free_loops_ == 1 : (graph_component_count_ == 1 && free_loops_ == 0);
}

int PlanarDiagram::default_outer_face(int component) const {
  std::optional<PortRef> best;
  Label best_label = 0;
  for (std::size_t x = 0; x < crossings_.size(); ++x) {
    if (graph_component_[x] != component) continue;
    for (int p = 0; p < 4; ++p) {
      const Label l = crossings_[x].ports[p];
      // Ports are visited in (crossing, port) order, so the first hit of the
      // smallest label is its lower end.
      if (!best || l < best_label) {
        best = PortRef{static_cast<int>(x), p};
        best_label = l;
      }
    }
  }
  if (!best) throw Error(ErrorKind::Index, "no such projection-graph component");
  return face_of_corner(best->crossing, (best->port + 3) % 4);
}

nlohmann::json PlanarDiagram::to_json() const {
  auto list = nlohmann::json::array();
  for (const Crossing& c : crossings_) list.push_back(c.ports);
  return {{"crossings", list}};
}

// ---------------------------------------------------------------------------
// Parsing

PlanarDiagram parse_pd(std::string_view text) {
  std::vector<Crossing> crossings;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  auto fail = [&](const std::string& what) -> void {
    throw Error(ErrorKind::Syntax, "crossing " + std::to_string(crossings.size()) + ": " + what,
                crossings.size());
  };
  auto expect = [&](char ch) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size() || text[i] != ch) fail(std::string("expected '") + ch + "'");
    ++i;
  };
  auto number = [&]() -> Label {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t begin = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    const std::string token(text.substr(begin, i - begin));
    if (token.empty() || token == "-" || token == "+") fail("expected an edge label");
    if (token.size() > 9) fail("edge label too large");
    return std::stoi(token);
  };

  skip();
  while (i < text.size()) {
    expect('X');
    expect('[');
    Crossing c;
    for (int p = 0; p < 4; ++p) {
      if (p != 0) expect(',');
      c.ports[p] = number();
      if (c.ports[p] <= 0) {
        throw Error(ErrorKind::Label,
                    "crossing " + std::to_string(crossings.size()) + ": edge labels must be positive",
                    crossings.size());
      }
    }
    expect(']');
    crossings.push_back(c);
    skip();
  }
  if (crossings.empty()) return PlanarDiagram();
  return PlanarDiagram(std::move(crossings));
}

PlanarDiagram braid_closure(std::span<const int> word, int strands) {
  int needed = 1;
  for (int g : word) {
    if (g == 0) throw Error(ErrorKind::Index, "braid generator index must be at least 1");
    needed = std::max(needed, std::abs(g) + 1);
  }
  if (strands < needed) {
    throw Error(ErrorKind::Index, "braid needs " + std::to_string(needed) + " strands");
  }
  if (word.empty()) return PlanarDiagram::unlink(strands);

  // Arms counterclockwise: SW, SE, NE, NW; strands run upward.
  DiagramBuilder b;
  std::vector<std::optional<DiagramBuilder::Arm>> bottom(strands);
  std::vector<std::optional<DiagramBuilder::Arm>> top(strands);
  for (int g : word) {
    const int i = std::abs(g) - 1;
    const int x = b.add_crossing(g > 0 ? 0 : 1);
    b.orient({x, 0});
    b.orient({x, 1});
    for (int k = 0; k < 2; ++k) {
      const DiagramBuilder::Arm south{x, k};
      if (top[i + k]) b.connect(*top[i + k], south);
      else bottom[i + k] = south;
    }
    top[i] = DiagramBuilder::Arm{x, 3};
    top[i + 1] = DiagramBuilder::Arm{x, 2};
  }
  for (int j = 0; j < strands; ++j) {
    if (top[j]) b.connect(*top[j], *bottom[j]);
    else b.add_free_loop();
  }
  return b.build();
}

PlanarDiagram parse_braid(std::string_view word, std::optional<int> strands) {
  std::vector<int> gens;
  std::istringstream in{std::string(word)};
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int g = 0;
    try {
      g = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Syntax, "invalid braid generator '" + token + "'");
    }
    if (used != token.size()) throw Error(ErrorKind::Syntax, "invalid braid generator '" + token + "'");
    if (g == 0) throw Error(ErrorKind::Index, "braid generator index must be at least 1");
    gens.push_back(g);
  }
  int needed = 1;
  for (int g : gens) needed = std::max(needed, std::abs(g) + 1);
  return braid_closure(gens, strands.value_or(needed));
}

// ---------------------------------------------------------------------------
// Orientation-level operations

int writhe(const PlanarDiagram& d) {
  int w = 0;
  for (std::size_t x = 0; x < d.crossing_count(); ++x) w += d.sign(x);
  return w;
}

PlanarDiagram mirror(const PlanarDiagram& d) {
  std::vector<Crossing> out;
  std::vector<int> signs;
  for (std::size_t x = 0; x < d.crossing_count(); ++x) {
    const auto& p = d.crossings()[x].ports;
    // The old over-strand becomes the under-strand; root at its incoming end.
    if (d.sign(x) > 0) out.push_back({{p[3], p[0], p[1], p[2]}});
    else out.push_back({{p[1], p[2], p[3], p[0]}});
    signs.push_back(-d.sign(x));
  }
  if (out.empty()) return PlanarDiagram::unlink(d.free_loops());
  return PlanarDiagram(std::move(out), d.free_loops(), std::move(signs));
}

bool alternation_scan(const PlanarDiagram& d) { return port_graph(d).alternating(); }

bool is_connected_sum_of_alternating(const PlanarDiagram& d) {
  // Split pieces of different projection-graph components independently.
  return decomposes_into_alternating(port_graph(d));
}

// ---------------------------------------------------------------------------
// State circles

StateCircles trace_state_circles(const PlanarDiagram& d, const State& s, std::optional<int> outer_face) {
  const int n = static_cast<int>(d.crossing_count());
  if (static_cast<int>(s.size()) != n) {
    throw Error(ErrorKind::InvalidState, "state has " + std::to_string(s.size()) + " entries for " +
                                             std::to_string(n) + " crossings");
  }
  if (outer_face && (*outer_face < 0 || *outer_face >= d.face_count())) {
    throw Error(ErrorKind::Index, "outer face out of range");
  }

  // Regions of the smoothed diagram: projection faces glued through the
  // channel each smoothing opens.
  DisjointSets regions(d.face_count());
  for (int x = 0; x < n; ++x) {
    if (s[x] == Splice::A) regions.unite(d.face_of_corner(x, 1), d.face_of_corner(x, 3));
    else regions.unite(d.face_of_corner(x, 0), d.face_of_corner(x, 2));
  }

  struct Traced {
    std::vector<SpliceEnd> ends;
    int left = 0;
    int right = 0;
    int component = 0;
  };
  std::vector<Traced> traced;
  std::vector<char> used(2 * n, 0);
  for (int x = 0; x < n; ++x) {
    for (int site = 0; site < 2; ++site) {
      if (used[2 * x + site]) continue;
      // Enter the arc through its lower port.
      int port = 0;
      while (splice_site(s[x], port) != site) ++port;
      const PortRef start{x, port};
      Traced t;
      t.left = regions.find(d.face_of_corner(x, (port + 3) % 4));
      t.right = regions.find(d.face_of_corner(x, port));
      t.component = d.graph_component(x);
      PortRef cur = start;
      do {
        const int here = splice_site(s[cur.crossing], cur.port);
        used[2 * cur.crossing + here] = 1;
        t.ends.push_back({cur.crossing, here});
        cur = d.other_end({cur.crossing, splice_partner(s[cur.crossing], cur.port)});
      } while (cur != start);
      if (t.left == t.right) throw Error(ErrorKind::Internal, "state circle with one region on both sides");
      traced.push_back(std::move(t));
    }
  }

  // Region/circle incidence forest, rooted at the outer face of each
  // projection-graph component.
  std::map<int, std::vector<int>> circles_at_region;
  for (std::size_t c = 0; c < traced.size(); ++c) {
    circles_at_region[traced[c].left].push_back(static_cast<int>(c));
    circles_at_region[traced[c].right].push_back(static_cast<int>(c));
  }
  std::vector<int> circle_dist(traced.size(), -1);
  std::map<int, int> region_dist;
  for (int comp = 0; comp < d.graph_component_count(); ++comp) {
    int root_face = d.default_outer_face(comp);
    if (outer_face) {
      for (int x = 0; x < n; ++x) {
        if (d.graph_component(x) != comp) continue;
        for (int k = 0; k < 4; ++k) {
          if (d.face_of_corner(x, k) == *outer_face) root_face = *outer_face;
        }
      }
    }
    const int root = regions.find(root_face);
    std::queue<int> q;
    region_dist[root] = 0;
    q.push(root);
    int region_nodes = 0;
    int circle_nodes = 0;
    while (!q.empty()) {
      const int r = q.front();
      q.pop();
      ++region_nodes;
      for (int c : circles_at_region[r]) {
        if (circle_dist[c] != -1) continue;
        circle_dist[c] = region_dist[r] + 1;
        ++circle_nodes;
        for (int next : {traced[c].left, traced[c].right}) {
          if (region_dist.contains(next)) continue;
          region_dist[next] = circle_dist[c] + 1;
          q.push(next);
        }
      }
    }
    if (region_nodes != circle_nodes + 1) {
      throw Error(ErrorKind::Internal, "smoothed regions do not form a tree over the circles");
    }
  }

  StateCircles out;
  for (std::size_t c = 0; c < traced.size(); ++c) {
    Traced& t = traced[c];
    if (circle_dist[c] < 0) throw Error(ErrorKind::Internal, "state circle not reached from the outer face");
    StateCircle circle;
    circle.depth = (circle_dist[c] - 1) / 2;
    const bool left_is_inner = region_dist.at(t.left) > circle_dist[c];
    const bool counterclockwise = circle.depth % 2 == 0;
    circle.rotation = counterclockwise ? Rotation::Counterclockwise : Rotation::Clockwise;
    // Counterclockwise keeps the inner region on the left.
    if (left_is_inner != counterclockwise) std::reverse(t.ends.begin(), t.ends.end());
    auto lowest = std::min_element(t.ends.begin(), t.ends.end(), [](const SpliceEnd& a, const SpliceEnd& b) {
      return std::pair(a.crossing, a.site) < std::pair(b.crossing, b.site);
    });
    std::rotate(t.ends.begin(), lowest, t.ends.end());
    circle.ends = std::move(t.ends);
    out.circles.push_back(std::move(circle));
  }
  for (int i = 0; i < d.free_loops(); ++i) out.circles.push_back(StateCircle{});
  return out;
}

int count_state_circles(const PlanarDiagram& d, const State& s) {
  const int n = static_cast<int>(d.crossing_count());
  if (static_cast<int>(s.size()) != n) throw Error(ErrorKind::InvalidState, "state size mismatch");
  // Ports joined by edges and by smoothing arcs.
  DisjointSets sets(4 * n);
  int components = 4 * n;
  for (int x = 0; x < n; ++x) {
    for (int p = 0; p < 4; ++p) {
      const PortRef o = d.other_end({x, p});
      components -= sets.unite(4 * x + p, 4 * o.crossing + o.port);
      components -= sets.unite(4 * x + p, 4 * x + splice_partner(s[x], p));
    }
  }
  return components + d.free_loops();
}

}  // namespace knotbrt
