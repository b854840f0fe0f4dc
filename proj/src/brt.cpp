#include "knotbrt/brt.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>
#include <unordered_map>

#include "knotbrt/error.hpp"

namespace knotbrt {

namespace {

constexpr int kMaskEdges = 62;

void require_connected(const RibbonGraph& g) {
  if (component_count(g) != 1) throw Error(ErrorKind::DisconnectedGraph, "ribbon graph is not connected");
}

void require_mask_size(const RibbonGraph& g) {
  if (g.edge_count() > kMaskEdges) {
    throw Error(ErrorKind::BaseCaseTooLarge, "subset enumeration supports at most " +
                                                 std::to_string(kMaskEdges) + " edges");
  }
}

// (X-1)^a as a polynomial, cached by the caller.
MultiPoly x_minus_one_pow(int a) {
  MultiPoly base = MultiPoly::monomial({1, 0, 0}) - MultiPoly::constant(1);
  return base.pow(static_cast<unsigned>(a));
}

// Sum over subsets of the edges at a single vertex of Y^|H| Z^g(H).
MultiPoly one_vertex_sum(const RibbonGraph& g, int cap) {
  const int e = static_cast<int>(g.edge_count());
  if (e > cap) {
    throw Error(ErrorKind::BaseCaseTooLarge, "one-vertex base case has " + std::to_string(e) +
                                                 " edges, cap is " + std::to_string(cap));
  }
  require_mask_size(g);
  if (e == 0) return MultiPoly::constant(1);

  // Positions around the vertex; half-edge ids are compacted to positions.
  const std::vector<HalfEdge>& rotation = g.vertices()[g.vertex_of(g.edges()[0].first)];
  const int m = static_cast<int>(rotation.size());
  std::vector<int> pos_of(*std::max_element(rotation.begin(), rotation.end()) + 1, -1);
  for (int i = 0; i < m; ++i) pos_of[rotation[i]] = i;
  std::vector<int> partner(m);
  std::vector<int> edge_at(m);
  for (int i = 0; i < e; ++i) {
    const int a = pos_of[g.edges()[i].first];
    const int b = pos_of[g.edges()[i].second];
    partner[a] = b;
    partner[b] = a;
    edge_at[a] = i;
    edge_at[b] = i;
  }

  std::map<std::pair<int, int>, Integer> histogram;  // (n, genus) -> count
  std::vector<int> kept(m);
  std::vector<int> prev(m);
  std::vector<char> seen(m);
  const std::uint64_t total = std::uint64_t{1} << e;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    int size = 0;
    for (int i = 0; i < m; ++i) {
      if ((mask >> edge_at[i]) & 1U) kept[size++] = i;
    }
    int faces = 1;
    if (size != 0) {
      for (int j = 0; j < size; ++j) prev[kept[j]] = kept[(j + size - 1) % size];
      faces = 0;
      for (int j = 0; j < size; ++j) seen[kept[j]] = 0;
      for (int j = 0; j < size; ++j) {
        const int start = kept[j];
        if (seen[start]) continue;
        int h = start;
        do {
          seen[h] = 1;
          h = partner[prev[h]];
        } while (h != start);
        ++faces;
      }
    }
    const int edges = size / 2;
    const int genus = (1 + edges - faces) / 2;
    ++histogram[{edges, genus}];
  }
  MultiPoly out;
  for (const auto& [key, count] : histogram) out.add_term({0, key.first, key.second}, count);
  return out;
}

std::string memo_key(const RibbonGraph& g) {
  const std::vector<int> code = canonical_code(g);
  std::string key;
  key.reserve(code.size() * sizeof(int));
  for (int c : code) key.append(reinterpret_cast<const char*>(&c), sizeof c);
  return key;
}

class Recursion {
 public:
  explicit Recursion(int cap) : cap_(cap) {}

  MultiPoly operator()(const RibbonGraph& g) {
    if (g.vertex_count() == 1) return one_vertex_sum(g, cap_);
    const std::string key = memo_key(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::optional<std::size_t> bridge;
    MultiPoly result;
    bool done = false;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (is_loop(g, e)) continue;
      if (is_bridge(g, e)) {
        if (!bridge) bridge = e;
        continue;
      }
      result = (*this)(delete_edge(g, e)) + (*this)(contract_edge(g, e));
      done = true;
      break;
    }
    if (!done) {
      if (!bridge) throw Error(ErrorKind::Internal, "multi-vertex graph without a contractible edge");
      result = (*this)(contract_edge(g, *bridge)).shifted({1, 0, 0});
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  int cap_;
  std::unordered_map<std::string, MultiPoly> memo_;
};

void validate_order(const RibbonGraph& g, const EdgeOrder& order) {
  if (order.size() != g.edge_count()) {
    throw Error(ErrorKind::InvalidEdgeOrder, "edge order has " + std::to_string(order.size()) +
                                                 " entries for " + std::to_string(g.edge_count()) + " edges");
  }
  std::vector<char> seen(order.size(), 0);
  for (std::size_t e : order) {
    if (e >= order.size() || seen[e]) throw Error(ErrorKind::InvalidEdgeOrder, "edge order is not a permutation");
    seen[e] = 1;
  }
}

// Vertices reachable from `start` using the edges with a set flag.
std::vector<int> reach(const RibbonGraph& g, const std::vector<char>& use, int start) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!use[e]) continue;
    const auto [a, b] = g.endpoints(e);
    adj[a].push_back({b, static_cast<int>(e)});
    adj[b].push_back({a, static_cast<int>(e)});
  }
  std::vector<int> label(g.vertex_count(), -1);
  std::queue<int> q;
  label[start] = 0;
  q.push(start);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (auto [w, e] : adj[v]) {
      if (label[w] == -1) {
        label[w] = 0;
        q.push(w);
      }
    }
  }
  return label;
}

class TreeSearch {
 public:
  TreeSearch(const RibbonGraph& g, const EdgeOrder& order,
             const std::function<void(const ActivityRecord&)>& visit)
      : g_(g), visit_(visit), rank_(g.edge_count()), state_(g.edge_count(), kUndecided) {
    for (std::size_t i = 0; i < order.size(); ++i) rank_[order[i]] = i;
    parent_.resize(g.vertex_count());
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  void run() { search(0, static_cast<int>(g_.vertex_count()) - 1); }

 private:
  static constexpr char kUndecided = 0, kTree = 1, kOut = 2;

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  // Still possible to span with the tree edges plus undecided edges.
  bool spannable() const {
    std::vector<char> use(g_.edge_count());
    for (std::size_t e = 0; e < g_.edge_count(); ++e) use[e] = state_[e] != kOut;
    const std::vector<int> label = reach(g_, use, 0);
    return std::find(label.begin(), label.end(), -1) == label.end();
  }

  void search(std::size_t e, int missing) {
    if (missing == 0) {
      emit();
      return;
    }
    if (e == g_.edge_count()) return;
    const auto [a, b] = g_.endpoints(e);
    const int ra = find(a);
    const int rb = find(b);
    if (ra != rb) {
      state_[e] = kTree;
      parent_[ra] = rb;
      search(e + 1, missing - 1);
      parent_[ra] = ra;
    }
    state_[e] = kOut;
    if (spannable()) search(e + 1, missing);
    state_[e] = kUndecided;
  }

  void emit() {
    ActivityRecord rec;
    std::vector<char> in_tree(g_.edge_count(), 0);
    for (std::size_t e = 0; e < g_.edge_count(); ++e) {
      if (state_[e] == kTree) {
        in_tree[e] = 1;
        rec.tree.push_back(e);
      }
    }
    // Internal activity: smallest edge of its fundamental cut.
    for (std::size_t t : rec.tree) {
      std::vector<char> use = in_tree;
      use[t] = 0;
      const std::vector<int> side = reach(g_, use, g_.endpoints(t).first);
      bool active = true;
      for (std::size_t f = 0; f < g_.edge_count() && active; ++f) {
        if (in_tree[f]) continue;
        const auto [a, b] = g_.endpoints(f);
        if ((side[a] == -1) != (side[b] == -1) && rank_[f] < rank_[t]) active = false;
      }
      if (active) rec.internally_active.push_back(t);
    }
    // External activity: smallest edge of its fundamental cycle.
    for (std::size_t f = 0; f < g_.edge_count(); ++f) {
      if (in_tree[f]) continue;
      const auto [a, b] = g_.endpoints(f);
      bool active = true;
      if (a != b) {
        for (std::size_t t : rec.tree) {
          if (rank_[t] > rank_[f]) continue;
          // t lies on the cycle when removing it separates a from b.
          std::vector<char> use = in_tree;
          use[t] = 0;
          if (reach(g_, use, a)[b] == -1) {
            active = false;
            break;
          }
        }
      }
      if (active) rec.externally_active.push_back(f);
    }
    visit_(rec);
  }

  const RibbonGraph& g_;
  const std::function<void(const ActivityRecord&)>& visit_;
  std::vector<std::size_t> rank_;
  std::vector<char> state_;
  std::vector<int> parent_;
};

}  // namespace

EdgeOrder identity_order(std::size_t edges) {
  EdgeOrder order(edges);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

MultiPoly brt_recursive(const RibbonGraph& g, int base_case_cap) {
  require_connected(g);
  Recursion rec(base_case_cap);
  return rec(g);
}

MultiPoly brt_subgraph(const RibbonGraph& g) {
  require_mask_size(g);
  const int k = component_count(g);
  std::map<std::tuple<int, int, int>, Integer> histogram;  // (k(H)-k(G), n, g)
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const GraphCounts c = subgraph_counts(g, mask);
    ++histogram[{c.k - k, c.n, c.g}];
  }
  MultiPoly out;
  std::map<int, MultiPoly> powers;
  for (const auto& [key, count] : histogram) {
    const auto [a, n, genus] = key;
    auto it = powers.find(a);
    if (it == powers.end()) it = powers.emplace(a, x_minus_one_pow(a)).first;
    out += it->second.shifted({0, n, genus}) * count;
  }
  return out;
}

void enumerate_spanning_trees(const RibbonGraph& g, const EdgeOrder& order,
                              const std::function<void(const ActivityRecord&)>& visit) {
  require_connected(g);
  validate_order(g, order);
  TreeSearch(g, order, visit).run();
}

MultiPoly brt_tree_expansion(const RibbonGraph& g, const EdgeOrder& order) {
  require_mask_size(g);
  MultiPoly out;
  enumerate_spanning_trees(g, order, [&](const ActivityRecord& rec) {
    std::uint64_t tree_mask = 0;
    for (std::size_t t : rec.tree) tree_mask |= std::uint64_t{1} << t;
    const int i = static_cast<int>(rec.internally_active.size());
    const std::size_t ext = rec.externally_active.size();
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << ext); ++sub) {
      std::uint64_t mask = tree_mask;
      for (std::size_t j = 0; j < ext; ++j) {
        if ((sub >> j) & 1U) mask |= std::uint64_t{1} << rec.externally_active[j];
      }
      const GraphCounts c = subgraph_counts(g, mask);
      out.add_term({i, c.n, c.g}, 1);
    }
  });
  return out;
}

MultiPoly brt(const RibbonGraph& g, BrtMethod method) {
  switch (method) {
    case BrtMethod::Recursive: return brt_recursive(g);
    case BrtMethod::Subgraph: return brt_subgraph(g);
    case BrtMethod::Tree: return brt_tree_expansion(g, identity_order(g.edge_count()));
  }
  throw Error(ErrorKind::Internal, "unknown method");
}

}  // namespace knotbrt
