#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "knotbrt/error.hpp"
#include "knotbrt/ribbon_graph.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace knotbrt;

namespace {

RibbonGraph bridge() { return RibbonGraph({{0}, {1}}, {{0, 1}}); }
RibbonGraph one_loop() { return RibbonGraph({{0, 1}}, {{0, 1}}); }
RibbonGraph double_edge() { return RibbonGraph({{0, 2}, {3, 1}}, {{0, 1}, {2, 3}}); }

void check_identities(const GraphCounts& c) {
  CHECK(c.v - c.e + c.f == 2 * c.k - 2 * c.g);
  CHECK(c.n == c.e - c.v + c.k);
  CHECK(c.n - 2 * c.g == c.f - c.k);
  CHECK(c.f >= c.k);
  CHECK(c.g >= 0);
}

}  // namespace

TEST_CASE("counts examples") {
  const GraphCounts p = counts(fixture::printed_eight_twenty_one_graph());
  CHECK(p == GraphCounts{3, 8, 5, 1, 1, 6});
  CHECK(counts(RibbonGraph::isolated_vertex()) == GraphCounts{1, 0, 1, 1, 0, 0});
  CHECK(counts(one_loop()) == GraphCounts{1, 1, 2, 1, 0, 1});
  CHECK(counts(bridge()) == GraphCounts{2, 1, 1, 1, 0, 0});
}

TEST_CASE("sigma relation holds") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const RibbonGraph g = oracle::random_ribbon_graph(rng, 10);
    for (const auto& cyc : g.vertices()) {
      for (HalfEdge h : cyc) {
        CHECK(g.partner(h) != h);
        CHECK(g.partner(g.partner(h)) == h);
        // sigma0(sigma1(sigma2(h))) = h
        CHECK(g.next_at_vertex(g.partner(g.next_in_face(h))) == h);
      }
    }
  }
}

TEST_CASE("invalid graphs are rejected") {
  auto kind = [](Cycles v, std::vector<Edge> e) {
    try {
      RibbonGraph g(std::move(v), std::move(e));
    } catch (const Error& err) {
      return err.kind();
    }
    return ErrorKind::Internal;
  };
  CHECK(kind({{0, 1}, {1}}, {{0, 1}}) == ErrorKind::InvalidRibbonGraph);
  CHECK(kind({{0, 1}}, {}) == ErrorKind::InvalidRibbonGraph);
  CHECK(kind({{0, 1}}, {{0, 0}}) == ErrorKind::InvalidRibbonGraph);
  CHECK(kind({{0, 1, 2}}, {{0, 1}, {1, 2}}) == ErrorKind::InvalidRibbonGraph);
  CHECK(kind({{0}}, {{0, 5}}) == ErrorKind::InvalidRibbonGraph);
}

TEST_CASE("delete_edge examples") {
  CHECK(counts(delete_edge(one_loop(), 0)) == counts(RibbonGraph::isolated_vertex()));
  CHECK(delete_edge(one_loop(), 0).vertices() == Cycles{{}});
  CHECK(counts(delete_edge(bridge(), 0)).k == 2);
  const GraphCounts before = counts(double_edge());
  const GraphCounts after = counts(delete_edge(double_edge(), 0));
  CHECK(after.k == before.k);
  CHECK(after.n == before.n - 1);
  CHECK_THROWS_AS(delete_edge(bridge(), 1), Error);
}

TEST_CASE("contract_edge examples") {
  const RibbonGraph c = contract_edge(bridge(), 0);
  CHECK(c.vertex_count() == 1);
  CHECK(c.edge_count() == 0);
  CHECK(counts(c) == counts(RibbonGraph::isolated_vertex()));

  const RibbonGraph l = contract_edge(double_edge(), 0);
  CHECK(l.vertex_count() == 1);
  CHECK(is_loop(l, 0));
  CHECK(counts(l) == counts(one_loop()));

  // Amalgamation: (e+, u1..up) + (e-, w1..wq) -> (u1..up, w1..wq).
  const RibbonGraph g({{0, 2, 4}, {1, 6, 8}, {3}, {5}, {7}, {9}}, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}});
  CHECK(contract_edge(g, 0).vertices()[0] == std::vector<HalfEdge>{2, 4, 6, 8});

  try {
    contract_edge(one_loop(), 0);
    FAIL("expected LoopContraction");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LoopContraction);
  }
}

TEST_CASE("contraction keeps faces and genus") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const RibbonGraph g = oracle::random_ribbon_graph(rng, 10);
    const GraphCounts c = counts(g);
    check_identities(c);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const GraphCounts d = counts(delete_edge(g, e));
      check_identities(d);
      CHECK(d.e == c.e - 1);
      CHECK(d.v == c.v);
      if (is_bridge(g, e)) CHECK(d.k == c.k + 1);
      else CHECK(d.k == c.k);
      if (!is_loop(g, e)) {
        const GraphCounts k = counts(contract_edge(g, e));
        check_identities(k);
        CHECK(k.v == c.v - 1);
        CHECK(k.e == c.e - 1);
        CHECK(k.f == c.f);
        CHECK(k.g == c.g);
      }
      // Subgraph counts agree with the rebuilt graph.
      const std::uint64_t all = (std::uint64_t{1} << g.edge_count()) - 1;
      CHECK(subgraph_counts(g, all & ~(std::uint64_t{1} << e)) == d);
    }
  }
}

TEST_CASE("dual examples") {
  const RibbonGraph d = dual(one_loop());
  CHECK(counts(d) == counts(bridge()));
  CHECK(d.vertex_count() == 2);
  const GraphCounts p = counts(dual(fixture::printed_eight_twenty_one_graph()));
  CHECK(p.v == 5);
  CHECK(p.e == 8);
  CHECK(p.f == 3);
  CHECK(p.g == 1);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const RibbonGraph g = oracle::random_ribbon_graph(rng, 10);
    const GraphCounts c = counts(g);
    const GraphCounts dc = counts(dual(g));
    CHECK(dc.v == c.f);
    CHECK(dc.f == c.v);
    CHECK(dc.e == c.e);
    CHECK(dc.g == c.g);
    CHECK(counts(dual(dual(g))) == c);
  }
}

TEST_CASE("loop and bridge predicates") {
  CHECK(is_loop(one_loop(), 0));
  CHECK_FALSE(is_bridge(one_loop(), 0));
  CHECK_FALSE(is_loop(bridge(), 0));
  CHECK(is_bridge(bridge(), 0));
  CHECK_FALSE(is_loop(double_edge(), 0));
  CHECK_FALSE(is_bridge(double_edge(), 0));
  try {
    is_loop(bridge(), 3);
    FAIL("expected UnknownEdge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownEdge);
  }
}

TEST_CASE("canonical code detects isomorphism") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const RibbonGraph g = oracle::random_ribbon_graph(rng, 8);
    // Random renaming of half-edges, vertex order and rotation starts.
    std::vector<int> names(2 * g.edge_count());
    std::iota(names.begin(), names.end(), 0);
    std::shuffle(names.begin(), names.end(), rng);
    Cycles v = g.vertices();
    for (auto& cyc : v) {
      for (auto& h : cyc) h = names[h];
      if (!cyc.empty()) std::rotate(cyc.begin(), cyc.begin() + static_cast<long>(rng() % cyc.size()), cyc.end());
    }
    std::shuffle(v.begin(), v.end(), rng);
    std::vector<Edge> e;
    for (const Edge& x : g.edges()) e.push_back({names[x.second], names[x.first]});
    const RibbonGraph h(v, e);
    CHECK(canonical_code(h) == canonical_code(g));
    CHECK(counts(canonical_relabeling(g)) == counts(g));
  }
  // Two loops interleaved versus nested differ.
  const RibbonGraph interleaved({{0, 2, 1, 3}}, {{0, 1}, {2, 3}});
  const RibbonGraph nested({{0, 1, 2, 3}}, {{0, 1}, {2, 3}});
  CHECK(canonical_code(interleaved) != canonical_code(nested));
}

TEST_CASE("cycle notation and json") {
  const RibbonGraph g = fixture::printed_eight_twenty_one_graph();
  CHECK(cycle_notation(g.vertices(), 1) == "{{1, 3, 5}, {2, 6, 12, 10, 14, 16, 8, 4, 15, 13}, {7, 9, 11}}");
  CHECK(cycle_notation(g.edge_cycles(), 1) == "{{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}, {11, 12}, {13, 14}, {15, 16}}");
  CHECK(fixture::orbit_sizes(g.face_cycles()) == std::vector<int>{2, 2, 2, 4, 6});
  CHECK(to_json(bridge()).dump() == R"({"edges":[[1,2]],"vertices":[[1],[2]]})");
}
