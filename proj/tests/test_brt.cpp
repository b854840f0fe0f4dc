#include <algorithm>
#include <random>

#include "doctest.h"
#include "knotbrt/brt.hpp"
#include "knotbrt/error.hpp"
#include "knotbrt/state_graph.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace knotbrt;

namespace {

MultiPoly X() { return MultiPoly::monomial({1, 0, 0}); }
MultiPoly Y() { return MultiPoly::monomial({0, 1, 0}); }
MultiPoly one() { return MultiPoly::constant(1); }

RibbonGraph bridge() { return RibbonGraph({{0}, {1}}, {{0, 1}}); }
RibbonGraph one_loop() { return RibbonGraph({{0, 1}}, {{0, 1}}); }
RibbonGraph interleaved() { return RibbonGraph({{0, 2, 1, 3}}, {{0, 1}, {2, 3}}); }
RibbonGraph triangle() { return RibbonGraph({{0, 5}, {2, 1}, {4, 3}}, {{0, 1}, {2, 3}, {4, 5}}); }

EdgeOrder shuffled(std::size_t n, std::mt19937_64& rng) {
  EdgeOrder o = identity_order(n);
  std::shuffle(o.begin(), o.end(), rng);
  return o;
}

MultiPoly at_z_one(const MultiPoly& p) {
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) out.add_term({m.x, m.y, 0}, c);
  return out;
}

}  // namespace

TEST_CASE("small graphs by every method") {
  for (BrtMethod m : {BrtMethod::Recursive, BrtMethod::Subgraph, BrtMethod::Tree}) {
    CHECK(brt(bridge(), m) == X());
    CHECK(brt(one_loop(), m) == one() + Y());
    CHECK(brt(RibbonGraph::isolated_vertex(), m) == one());
    CHECK(brt(interleaved(), m) == one() + Y() * Integer(2) + MultiPoly::monomial({0, 2, 1}));
  }
}

TEST_CASE("tree expansion by hand") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 4; ++i) {
    CHECK(brt_tree_expansion(bridge(), identity_order(1)) == X());
    CHECK(brt_tree_expansion(one_loop(), identity_order(1)) == one() + Y());
  }
}

TEST_CASE("spanning tree enumeration") {
  int trees = 0;
  enumerate_spanning_trees(bridge(), identity_order(1), [&](const ActivityRecord& r) {
    ++trees;
    CHECK(r.tree == std::vector<std::size_t>{0});
    CHECK(r.internally_active == std::vector<std::size_t>{0});
    CHECK(r.externally_active.empty());
  });
  CHECK(trees == 1);
  trees = 0;
  enumerate_spanning_trees(triangle(), identity_order(3), [&](const ActivityRecord&) { ++trees; });
  CHECK(trees == 3);
  CHECK(counts(triangle()).g == 0);
}

TEST_CASE("tree count matches the matrix-tree theorem") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 200; ++i) {
    const RibbonGraph g = oracle::random_ribbon_graph(rng, 10);
    Integer trees = 0;
    const EdgeOrder order = shuffled(g.edge_count(), rng);
    enumerate_spanning_trees(g, order, [&](const ActivityRecord& r) {
      trees += 1;
      CHECK(r.tree.size() + 1 == g.vertex_count());
      for (std::size_t t : r.internally_active) CHECK(std::count(r.tree.begin(), r.tree.end(), t) == 1);
      for (std::size_t f : r.externally_active) CHECK(std::count(r.tree.begin(), r.tree.end(), f) == 0);
    });
    CHECK(trees == oracle::kirchhoff_tree_count(static_cast<int>(g.vertex_count()), oracle::underlying_edges(g)));
  }
}

TEST_CASE("methods agree and tree expansion ignores the order") {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 150; ++i) {
    const RibbonGraph g = oracle::random_ribbon_graph(rng, 9);
    const MultiPoly sub = brt_subgraph(g);
    CHECK(brt_recursive(g) == sub);
    CHECK(brt_tree_expansion(g, shuffled(g.edge_count(), rng)) == sub);
    CHECK(brt_tree_expansion(g, shuffled(g.edge_count(), rng)) == sub);
  }
}

TEST_CASE("deletion-contraction regression") {
  std::mt19937_64 rng(71);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const RibbonGraph g = oracle::random_ribbon_graph(rng, 9);
    std::vector<std::size_t> candidates;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (!is_loop(g, e) && !is_bridge(g, e)) candidates.push_back(e);
    }
    if (candidates.empty()) continue;
    const std::size_t e = candidates[rng() % candidates.size()];
    CHECK(brt_subgraph(g) == brt_subgraph(delete_edge(g, e)) + brt_subgraph(contract_edge(g, e)));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("every monomial has Y-degree at least twice its Z-degree") {
  std::mt19937_64 rng(73);
  for (int i = 0; i < 150; ++i) {
    const MultiPoly c = brt_subgraph(oracle::random_ribbon_graph(rng, 10));
    for (const auto& [m, coeff] : c.terms()) CHECK(m.y >= 2 * m.z);
  }
}

TEST_CASE("planar graphs at Z = 1 follow the classical recursion") {
  std::mt19937_64 rng(79);
  int planar = 0;
  for (int i = 0; i < 400 && planar < 100; ++i) {
    const RibbonGraph g = oracle::random_ribbon_graph(rng, 9);
    if (counts(g).g != 0) continue;
    ++planar;
    const MultiPoly c = brt_recursive(g);
    CHECK(at_z_one(c) == c);
    CHECK(c == oracle::classical_tutte(static_cast<int>(g.vertex_count()), oracle::underlying_edges(g)));
  }
  CHECK(planar > 20);
}

TEST_CASE("subgraph sum accepts disconnected graphs") {
  const RibbonGraph two({{0, 1}, {}}, {{0, 1}});
  CHECK(brt_subgraph(two) == one() + Y());
  try {
    brt_recursive(two);
    FAIL("expected DisconnectedGraph");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DisconnectedGraph);
  }
  CHECK_THROWS_AS(brt_tree_expansion(two, identity_order(1)), Error);
}

TEST_CASE("base case cap and edge order validation") {
  Cycles v(1);
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    v[0].push_back(2 * i);
    v[0].push_back(2 * i + 1);
    e.push_back({2 * i, 2 * i + 1});
  }
  const RibbonGraph g(v, e);
  try {
    brt_recursive(g, 4);
    FAIL("expected BaseCaseTooLarge");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::BaseCaseTooLarge);
  }
  // Five nested loops: (1 + Y)^5.
  CHECK(brt_recursive(g, 5) == (one() + Y()).pow(5));
  try {
    brt_tree_expansion(g, {0, 1, 2, 3, 3});
    FAIL("expected InvalidEdgeOrder");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::InvalidEdgeOrder);
  }
}

TEST_CASE("8_21 tree expansion under different orders") {
  const RibbonGraph g = all_A(fixture::eight_twenty_one());
  std::mt19937_64 rng(83);
  const MultiPoly first = brt_tree_expansion(g, shuffled(8, rng));
  CHECK(brt_tree_expansion(g, shuffled(8, rng)) == first);
  CHECK(brt_recursive(g) == first);
  CHECK(brt_subgraph(g) == first);
}
