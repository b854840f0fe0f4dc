#include "knotbrt/ribbon_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "knotbrt/error.hpp"

namespace knotbrt {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void require_edge(const RibbonGraph& g, std::size_t e) {
  if (e >= g.edge_count()) {
    throw Error(ErrorKind::UnknownEdge, "edge " + std::to_string(e) + " not in graph with " +
                                            std::to_string(g.edge_count()) + " edges");
  }
}

// Components among vertices when only edges with a set bit are kept.
int components_with(const RibbonGraph& g, std::uint64_t mask, std::size_t skip = static_cast<std::size_t>(-1)) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  int k = static_cast<int>(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (i == skip || (i < 64 && ((mask >> i) & 1U) == 0)) continue;
    const auto [a, b] = g.endpoints(i);
    const int ra = find_root(parent, a);
    const int rb = find_root(parent, b);
    if (ra != rb) {
      parent[ra] = rb;
      --k;
    }
  }
  return k;
}

GraphCounts complete(int v, int e, int f, int k) {
  GraphCounts c{v, e, f, k, 0, 0};
  const int twice_genus = 2 * k - v + e - f;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw Error(ErrorKind::InvalidRibbonGraph, "Euler characteristic gives non-integral genus");
  }
  c.g = twice_genus / 2;
  c.n = e - v + k;
  return c;
}

}  // namespace

RibbonGraph::RibbonGraph(Cycles vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  HalfEdge max_id = -1;
  for (const auto& cyc : vertices_) {
    for (HalfEdge h : cyc) {
      if (h < 0) throw Error(ErrorKind::InvalidRibbonGraph, "negative half-edge id");
      max_id = std::max(max_id, h);
    }
  }
  const std::size_t size = static_cast<std::size_t>(max_id + 1);
  vertex_of_.assign(size, -1);
  position_.assign(size, -1);
  partner_.assign(size, -1);
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    for (std::size_t i = 0; i < vertices_[v].size(); ++i) {
      const HalfEdge h = vertices_[v][i];
      if (vertex_of_[h] != -1) {
        throw Error(ErrorKind::InvalidRibbonGraph, "half-edge " + std::to_string(h) + " appears twice");
      }
      vertex_of_[h] = static_cast<int>(v);
      position_[h] = static_cast<int>(i);
    }
  }
  for (const Edge& e : edges_) {
    for (HalfEdge h : {e.first, e.second}) {
      if (h < 0 || h > max_id || vertex_of_[h] == -1) {
        throw Error(ErrorKind::InvalidRibbonGraph, "edge uses half-edge " + std::to_string(h) +
                                                       " that is not at any vertex");
      }
      if (partner_[h] != -1) {
        throw Error(ErrorKind::InvalidRibbonGraph, "half-edge " + std::to_string(h) + " is in two edges");
      }
    }
    if (e.first == e.second) throw Error(ErrorKind::InvalidRibbonGraph, "edge pairs a half-edge with itself");
    partner_[e.first] = e.second;
    partner_[e.second] = e.first;
  }
  for (HalfEdge h = 0; h <= max_id; ++h) {
    if (vertex_of_[h] != -1 && partner_[h] == -1) {
      throw Error(ErrorKind::InvalidRibbonGraph, "half-edge " + std::to_string(h) + " has no partner");
    }
  }
}

HalfEdge RibbonGraph::next_at_vertex(HalfEdge h) const {
  const auto& cyc = vertices_[vertex_of_[h]];
  return cyc[(position_[h] + 1) % cyc.size()];
}

HalfEdge RibbonGraph::previous_at_vertex(HalfEdge h) const {
  const auto& cyc = vertices_[vertex_of_[h]];
  return cyc[(position_[h] + cyc.size() - 1) % cyc.size()];
}

Cycles RibbonGraph::face_cycles() const {
  Cycles faces;
  std::vector<char> seen(partner_.size(), 0);
  for (const auto& cyc : vertices_) {
    for (HalfEdge start : cyc) {
      if (seen[start]) continue;
      std::vector<HalfEdge> face;
      HalfEdge h = start;
      do {
        seen[h] = 1;
        face.push_back(h);
        h = next_in_face(h);
      } while (h != start);
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

Cycles RibbonGraph::edge_cycles() const {
  Cycles out;
  for (const Edge& e : edges_) out.push_back({e.first, e.second});
  return out;
}

std::pair<int, int> RibbonGraph::endpoints(std::size_t e) const {
  return {vertex_of_[edges_[e].first], vertex_of_[edges_[e].second]};
}

int component_count(const RibbonGraph& g) { return components_with(g, ~std::uint64_t{0}); }

GraphCounts counts(const RibbonGraph& g) {
  int isolated = 0;
  for (const auto& cyc : g.vertices()) isolated += cyc.empty() ? 1 : 0;
  const int f = static_cast<int>(g.face_cycles().size()) + isolated;
  return complete(static_cast<int>(g.vertex_count()), static_cast<int>(g.edge_count()), f, component_count(g));
}

GraphCounts subgraph_counts(const RibbonGraph& g, std::uint64_t edge_mask) {
  if (g.edge_count() > 64) throw Error(ErrorKind::BaseCaseTooLarge, "subgraph masks cover at most 64 edges");
  const std::size_t ids = [&] {
    HalfEdge m = -1;
    for (const auto& cyc : g.vertices()) for (HalfEdge h : cyc) m = std::max(m, h);
    return static_cast<std::size_t>(m + 1);
  }();
  std::vector<char> present(ids, 0);
  int edges = 0;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if ((edge_mask >> i) & 1U) {
      present[g.edges()[i].first] = 1;
      present[g.edges()[i].second] = 1;
      ++edges;
    }
  }
  // sigma0^-1 restricted to present half-edges.
  std::vector<HalfEdge> prev(ids, -1);
  int empty_vertices = 0;
  for (const auto& cyc : g.vertices()) {
    HalfEdge last = -1;
    HalfEdge first = -1;
    for (HalfEdge h : cyc) {
      if (!present[h]) continue;
      if (first == -1) first = h;
      else prev[h] = last;
      last = h;
    }
    if (first == -1) ++empty_vertices;
    else prev[first] = last;
  }
  int faces = empty_vertices;
  std::vector<char> seen(ids, 0);
  for (HalfEdge start = 0; start < static_cast<HalfEdge>(ids); ++start) {
    if (!present[start] || seen[start]) continue;
    HalfEdge h = start;
    do {
      seen[h] = 1;
      h = g.partner(prev[h]);
    } while (h != start);
    ++faces;
  }
  return complete(static_cast<int>(g.vertex_count()), edges, faces, components_with(g, edge_mask));
}

RibbonGraph delete_edge(const RibbonGraph& g, std::size_t e) {
  require_edge(g, e);
  const Edge gone = g.edges()[e];
  Cycles vertices = g.vertices();
  for (auto& cyc : vertices) {
    std::erase_if(cyc, [&](HalfEdge h) { return h == gone.first || h == gone.second; });
  }
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e));
  return RibbonGraph(std::move(vertices), std::move(edges));
}

RibbonGraph contract_edge(const RibbonGraph& g, std::size_t e) {
  require_edge(g, e);
  if (is_loop(g, e)) throw Error(ErrorKind::LoopContraction, "cannot contract loop edge " + std::to_string(e));
  const Edge gone = g.edges()[e];
  const int u = g.vertex_of(gone.first);
  const int w = g.vertex_of(gone.second);
  auto rest_after = [&](HalfEdge h) {
    std::vector<HalfEdge> out;
    for (HalfEdge x = g.next_at_vertex(h); x != h; x = g.next_at_vertex(x)) out.push_back(x);
    return out;
  };
  std::vector<HalfEdge> merged = rest_after(gone.first);
  const std::vector<HalfEdge> tail = rest_after(gone.second);
  merged.insert(merged.end(), tail.begin(), tail.end());

  Cycles vertices;
  for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
    if (v == std::min(u, w)) vertices.push_back(merged);
    else if (v != std::max(u, w)) vertices.push_back(g.vertices()[v]);
  }
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e));
  return RibbonGraph(std::move(vertices), std::move(edges));
}

RibbonGraph dual(const RibbonGraph& g) {
  Cycles vertices = g.face_cycles();
  for (const auto& cyc : g.vertices()) {
    if (cyc.empty()) vertices.emplace_back();
  }
  return RibbonGraph(std::move(vertices), std::vector<Edge>(g.edges().begin(), g.edges().end()));
}

bool is_loop(const RibbonGraph& g, std::size_t e) {
  require_edge(g, e);
  const auto [a, b] = g.endpoints(e);
  return a == b;
}

bool is_bridge(const RibbonGraph& g, std::size_t e) {
  require_edge(g, e);
  if (is_loop(g, e)) return false;
  return components_with(g, ~std::uint64_t{0}, e) > component_count(g);
}

RibbonGraph canonical_relabeling(const RibbonGraph& g) {
  // Rotate each vertex to its smallest original id and order vertices by it,
  // then renumber half-edges by first appearance.
  Cycles rotated;
  Cycles isolated;
  for (const auto& cyc : g.vertices()) {
    if (cyc.empty()) {
      isolated.emplace_back();
      continue;
    }
    std::vector<HalfEdge> c = cyc;
    std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    rotated.push_back(std::move(c));
  }
  std::sort(rotated.begin(), rotated.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::vector<int> relabel;
  int next = 1;
  for (const auto& cyc : rotated) {
    for (HalfEdge h : cyc) {
      if (static_cast<std::size_t>(h) >= relabel.size()) relabel.resize(h + 1, -1);
      relabel[h] = next++;
    }
  }
  for (auto& cyc : rotated) for (HalfEdge& h : cyc) h = relabel[h];
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const HalfEdge a = relabel[e.first];
    const HalfEdge b = relabel[e.second];
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.first < b.first; });
  for (auto& cyc : isolated) rotated.push_back(std::move(cyc));
  return RibbonGraph(std::move(rotated), std::move(edges));
}

std::vector<int> canonical_code(const RibbonGraph& g) {
  const std::size_t ids = [&] {
    HalfEdge m = -1;
    for (const auto& cyc : g.vertices()) for (HalfEdge h : cyc) m = std::max(m, h);
    return static_cast<std::size_t>(m + 1);
  }();

  // Component of each half-edge under <sigma0, sigma1>.
  std::vector<int> comp(ids, -1);
  std::vector<std::vector<HalfEdge>> members;
  for (const auto& cyc : g.vertices()) {
    for (HalfEdge start : cyc) {
      if (comp[start] != -1) continue;
      const int id = static_cast<int>(members.size());
      members.emplace_back();
      std::vector<HalfEdge> stack{start};
      comp[start] = id;
      while (!stack.empty()) {
        const HalfEdge h = stack.back();
        stack.pop_back();
        members[id].push_back(h);
        for (HalfEdge nb : {g.next_at_vertex(h), g.partner(h)}) {
          if (comp[nb] == -1) {
            comp[nb] = id;
            stack.push_back(nb);
          }
        }
      }
    }
  }

  std::vector<int> label(ids, -1);
  std::vector<HalfEdge> order;
  auto code_from = [&](HalfEdge root, std::size_t size) {
    std::vector<int> code;
    code.reserve(2 * size);
    order.clear();
    order.push_back(root);
    label[root] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const HalfEdge h = order[i];
      for (HalfEdge nb : {g.next_at_vertex(h), g.partner(h)}) {
        if (label[nb] == -1) {
          label[nb] = static_cast<int>(order.size());
          order.push_back(nb);
        }
        code.push_back(label[nb]);
      }
    }
    for (HalfEdge h : order) label[h] = -1;
    return code;
  };

  std::vector<std::vector<int>> component_codes;
  for (const auto& m : members) {
    std::vector<int> best;
    for (HalfEdge root : m) {
      std::vector<int> c = code_from(root, m.size());
      if (best.empty() || c < best) best = std::move(c);
    }
    component_codes.push_back(std::move(best));
  }
  std::sort(component_codes.begin(), component_codes.end());

  int isolated = 0;
  for (const auto& cyc : g.vertices()) isolated += cyc.empty() ? 1 : 0;
  std::vector<int> out{isolated, static_cast<int>(component_codes.size())};
  for (const auto& c : component_codes) {
    out.push_back(static_cast<int>(c.size()));
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

std::string cycle_notation(const Cycles& cycles, int offset) {
  Cycles sorted;
  for (const auto& cyc : cycles) {
    if (cyc.empty()) continue;
    std::vector<HalfEdge> c = cyc;
    std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    sorted.push_back(std::move(c));
  }
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i != 0) out << ", ";
    out << "{";
    for (std::size_t j = 0; j < sorted[i].size(); ++j) {
      if (j != 0) out << ", ";
      out << sorted[i][j] + offset;
    }
    out << "}";
  }
  out << "}";
  return out.str();
}

nlohmann::json to_json(const RibbonGraph& graph) {
  const RibbonGraph g = canonical_relabeling(graph);
  auto edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
  return {{"vertices", g.vertices()}, {"edges", edges}};
}

nlohmann::json to_json(const GraphCounts& c) {
  return {{"v", std::to_string(c.v)}, {"e", std::to_string(c.e)}, {"f", std::to_string(c.f)},
          {"k", std::to_string(c.k)}, {"g", std::to_string(c.g)}, {"n", std::to_string(c.n)}};
}

}  // namespace knotbrt
