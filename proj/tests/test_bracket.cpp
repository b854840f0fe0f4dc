#include <random>

#include "doctest.h"
#include "knotbrt/bracket.hpp"
#include "knotbrt/error.hpp"
#include "knotbrt/state_graph.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace knotbrt;

namespace {

LaurentA A(int k) { return LaurentA::monomial(k); }
LaurentT t(int quarters) { return LaurentT::monomial(quarters); }

bool palindromic(const LaurentT& p) {
  for (const auto& [e, c] : p.terms()) {
    if (p.coefficient(-e) != c) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("statesum examples") {
  CHECK(bracket_statesum(PlanarDiagram()) == LaurentA::constant(1));
  CHECK(bracket_statesum(PlanarDiagram::unlink(2)) == bracket_delta());
  const LaurentA b = bracket_statesum(fixture::trefoil());
  CHECK(b.size() == 3);
  CHECK(span(b) == 12);
  CHECK(b == A(7) - A(3) - A(-5));
  CHECK(bracket_statesum(mirror(fixture::trefoil())) == -A(5) - A(-3) + A(-7));
}

TEST_CASE("statesum agrees with the label oracle and its thread split") {
  std::mt19937_64 rng(89);
  for (int i = 0; i < 100; ++i) {
    const PlanarDiagram d = oracle::random_diagram(rng, 10);
    const LaurentA b = bracket_statesum(d, kDefaultStatesumCap, 1);
    CHECK(b == oracle::bracket_by_labels(d));
    CHECK(b == bracket_statesum(d, kDefaultStatesumCap, 3));
  }
}

TEST_CASE("statesum cap") {
  try {
    bracket_statesum(fixture::eight_twenty_one(), 7);
    FAIL("expected TooManyCrossings");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooManyCrossings);
  }
}

TEST_CASE("bracket via ribbon graphs") {
  CHECK(bracket_via_brt(PlanarDiagram()) == LaurentA::constant(1));
  const PlanarDiagram kink = parse_pd(fixture::kPositiveKink);
  CHECK(bracket_via_brt(kink) == -A(3));
  CHECK(bracket_via_brt(mirror(kink)) == -A(-3));
  for (BrtMethod m : {BrtMethod::Recursive, BrtMethod::Subgraph, BrtMethod::Tree}) {
    CHECK(bracket_via_brt(fixture::trefoil(), m) == bracket_statesum(fixture::trefoil()));
    CHECK(bracket_via_brt(fixture::eight_twenty_one(), m) == bracket_statesum(fixture::eight_twenty_one()));
  }
  CHECK_THROWS_AS(bracket_via_brt(PlanarDiagram::unlink(2)), Error);
}

TEST_CASE("oracle equivalence on random braids") {
  std::mt19937_64 rng(97);
  for (int i = 0; i < 150; ++i) {
    const PlanarDiagram d = oracle::random_diagram(rng, 11);
    CHECK(bracket_via_brt(d) == bracket_statesum(d));
  }
}

TEST_CASE("jones examples") {
  CHECK(jones(PlanarDiagram()) == LaurentT::constant(1));
  CHECK(jones(parse_pd(fixture::kPositiveKink)) == LaurentT::constant(1));
  CHECK(jones(mirror(parse_pd(fixture::kPositiveKink))) == LaurentT::constant(1));
  // Two-component unlink drawn with two crossings.
  const LaurentT unlink = -t(2) - t(-2);
  CHECK(jones(parse_braid("1 -1")) == unlink);
  // Left-handed trefoil.
  const LaurentT left_handed = t(-4) + t(-12) - t(-16);
  CHECK(jones(fixture::trefoil()) == left_handed);
  const LaurentT f = jones(fixture::figure_eight());
  CHECK(palindromic(f));
  const LaurentT expected = t(8) - t(4) + LaurentT::constant(1) - t(-4) + t(-8);
  CHECK(f == expected);
  const LaurentT e = jones(fixture::eight_twenty_one());
  CHECK(has_integral_exponents(e));
  CHECK(span_quarters(e) == 24);
}

TEST_CASE("mirror inverts the bracket variable") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 100; ++i) {
    const PlanarDiagram d = oracle::random_diagram(rng, 10);
    CHECK(bracket_statesum(mirror(d)) == invert_variable(bracket_statesum(d)));
  }
}

TEST_CASE("adequacy examples") {
  const Adequacy tref = adequacy(fixture::trefoil());
  CHECK(tref.a_adequate);
  CHECK(tref.b_adequate);
  const Adequacy kink = adequacy(parse_pd(fixture::kPositiveKink));
  CHECK_FALSE((kink.a_adequate && kink.b_adequate));
  // Two independent constructions of the B-graph agree on 8_21.
  const PlanarDiagram d = fixture::eight_twenty_one();
  const RibbonGraph b = all_B(d);
  const RibbonGraph m = all_A(mirror(d));
  auto has_loop = [](const RibbonGraph& g) {
    for (std::size_t e = 0; e < g.edge_count(); ++e) if (is_loop(g, e)) return true;
    return false;
  };
  const Adequacy a = adequacy(d);
  CHECK(a.b_adequate == !has_loop(m));
  CHECK(a.b_adequate == !has_loop(b));
  CHECK(a.a_adequate == false);
  CHECK(a.b_adequate == true);
}

TEST_CASE("span bounds examples") {
  const SpanBounds t3 = span_bounds(fixture::trefoil());
  CHECK(t3.exact_if_adequate);
  CHECK(t3.span == 12);
  CHECK(t3.span_bound == 12);
  const SpanBounds e = span_bounds(fixture::eight_twenty_one());
  CHECK(e.max_bound == 12);
  CHECK(e.min_bound == -16);
  CHECK(e.span_bound == 28);
  CHECK(e.span == 24);
  const SpanBounds u = span_bounds(PlanarDiagram());
  CHECK(u.max_bound == 0);
  CHECK(u.min_bound == 0);
  CHECK(u.span == 0);
}

TEST_CASE("span bounds on random diagrams") {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 150; ++i) {
    const PlanarDiagram d = oracle::random_diagram(rng, 10);
    const LaurentA b = bracket_statesum(d);
    const int e = static_cast<int>(d.crossing_count());
    const int v = static_cast<int>(all_A(d).vertex_count());
    const int vb = static_cast<int>(all_B(d).vertex_count());
    CHECK(max_degree(b) <= e + 2 * v - 2);
    CHECK(min_degree(b) >= -e - 2 * vb + 2);
    const Adequacy a = adequacy(d);
    if (a.a_adequate) CHECK(max_degree(b) == e + 2 * v - 2);
    if (a.b_adequate) CHECK(min_degree(b) == -e - 2 * vb + 2);
    CHECK_NOTHROW(span_bounds(d));
    if (d.component_count() == 1) CHECK(span(b) == span_quarters(jones(d)));
    const GenusBound g = turaev_genus_bound(d);
    CHECK(g.genus_of_diagram <= e - g.jones_span);
  }
}

TEST_CASE("turaev genus bound examples") {
  const GenusBound e = turaev_genus_bound(fixture::eight_twenty_one());
  CHECK(e.genus_of_diagram == 1);
  CHECK(e.jones_span == 6);
  CHECK(e.upper_bound_from_span == 2);
  const GenusBound t3 = turaev_genus_bound(fixture::trefoil());
  CHECK(t3.genus_of_diagram == 0);
  CHECK(t3.upper_bound_from_span == 0);
  const PlanarDiagram p = fixture::pretzel({2, 2, -2, -2});
  CHECK(p.crossing_count() == 8);
  const GenusBound pb = turaev_genus_bound(p);
  CHECK(pb.genus_of_diagram == 1);
  CHECK(pb.jones_span == 7);
  CHECK(pb.upper_bound_from_span == 1);
}

TEST_CASE("genus certificates") {
  const GenusCertificate t3 = genus_invariance_certificate(fixture::trefoil());
  CHECK(t3.certified_invariant);
  CHECK(t3.genus == 0);
  CHECK(genus_invariance_certificate(fixture::figure_eight()).certified_invariant);
  CHECK_FALSE(genus_invariance_certificate(parse_pd(fixture::kPositiveKink)).certified_invariant);
  std::mt19937_64 rng(107);
  for (int i = 0; i < 100; ++i) {
    const PlanarDiagram d = oracle::random_diagram(rng, 10);
    const GenusCertificate c = genus_invariance_certificate(d);
    if (c.certified_invariant) {
      CHECK(4 * c.genus == 4 * static_cast<int>(d.crossing_count()) - span(bracket_statesum(d)));
    }
  }
}
