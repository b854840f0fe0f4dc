#include "knotbrt/bracket.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <vector>

#include "knotbrt/error.hpp"
#include "knotbrt/state_graph.hpp"

namespace knotbrt {

namespace {

struct Wiring {
  int n = 0;
  std::vector<int> other;  // 4x+p -> port at the other end of the edge
};

Wiring wiring(const PlanarDiagram& d) {
  Wiring w;
  w.n = static_cast<int>(d.crossing_count());
  w.other.resize(4 * w.n);
  for (int x = 0; x < w.n; ++x) {
    for (int p = 0; p < 4; ++p) {
      const PortRef o = d.other_end({x, p});
      w.other[4 * x + p] = 4 * o.crossing + o.port;
    }
  }
  return w;
}

// histogram[a * (2n + 1) + circles] for states with `a` A-smoothings.
void count_block(const Wiring& w, std::uint64_t begin, std::uint64_t end, std::vector<std::uint64_t>& histogram) {
  const int n = w.n;
  std::vector<int> parent(4 * n);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    for (int i = 0; i < 4 * n; ++i) parent[i] = i;
    int components = 4 * n;
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    };
    for (int u = 0; u < 4 * n; ++u) {
      if (u < w.other[u]) unite(u, w.other[u]);
    }
    int a_count = 0;
    for (int x = 0; x < n; ++x) {
      const int base = 4 * x;
      if ((mask >> x) & 1U) {  // B
        unite(base + 1, base + 2);
        unite(base + 3, base);
      } else {
        ++a_count;
        unite(base, base + 1);
        unite(base + 2, base + 3);
      }
    }
    ++histogram[a_count * (2 * n + 1) + components];
  }
}

}  // namespace

LaurentA bracket_statesum(const PlanarDiagram& d, int cap, unsigned threads) {
  const int n = static_cast<int>(d.crossing_count());
  if (n > cap || n > 62) {
    throw Error(ErrorKind::TooManyCrossings, std::to_string(n) + " crossings exceed the state-sum cap of " +
                                                 std::to_string(cap));
  }
  const Wiring w = wiring(d);
  const std::uint64_t total = std::uint64_t{1} << n;
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  const std::uint64_t workers = std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, total >> 12));
  const std::size_t cells = static_cast<std::size_t>(n + 1) * (2 * n + 1);
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(cells, 0));
  {
    std::vector<std::jthread> pool;
    for (std::uint64_t i = 0; i < workers; ++i) {
      const std::uint64_t begin = total * i / workers;
      const std::uint64_t end = total * (i + 1) / workers;
      pool.emplace_back([&, i, begin, end] { count_block(w, begin, end, partial[i]); });
    }
  }

  const LaurentA delta = bracket_delta();
  std::vector<LaurentA> delta_powers{LaurentA::constant(1)};
  LaurentA out;
  for (int a = 0; a <= n; ++a) {
    for (int c = 1; c <= 2 * n; ++c) {
      std::uint64_t count = 0;
      for (const auto& h : partial) count += h[a * (2 * n + 1) + c];
      if (count == 0) continue;
      const int circles = c + d.free_loops();
      while (static_cast<int>(delta_powers.size()) < circles) delta_powers.push_back(delta_powers.back() * delta);
      Integer k;
      mpz_import(k.get_mpz_t(), 1, 1, sizeof count, 0, 0, &count);
      out += delta_powers[circles - 1].shifted(a - (n - a)) * k;
    }
  }
  if (n == 0) {
    while (static_cast<int>(delta_powers.size()) < d.free_loops()) delta_powers.push_back(delta_powers.back() * delta);
    out = delta_powers[std::max(0, d.free_loops() - 1)];
  }
  return out;
}

LaurentA bracket_via_brt(const PlanarDiagram& d, BrtMethod method) {
  const RibbonGraph g = all_A(d);
  const GraphCounts c = counts(g);
  return specialize_brt(brt(g, method), c.e, c.v);
}

LaurentT jones(const PlanarDiagram& d, BrtMethod method) {
  const LaurentT j = substitute_t(bracket_via_brt(d, method), writhe(d));
  if (d.component_count() == 1 && !has_integral_exponents(j)) {
    throw Error(ErrorKind::Internal, "Jones polynomial of a knot has fractional exponents");
  }
  return j;
}

Adequacy adequacy(const PlanarDiagram& d) {
  auto loop_free = [](const RibbonGraph& g) {
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (is_loop(g, e)) return false;
    }
    return true;
  };
  return {loop_free(all_A(d)), loop_free(all_B(d))};
}

SpanBounds span_bounds(const PlanarDiagram& d) {
  const int e = static_cast<int>(d.crossing_count());
  const int v = static_cast<int>(all_A(d).vertex_count());
  const int v_dual = static_cast<int>(all_B(d).vertex_count());
  const LaurentA b = bracket_via_brt(d);
  const Adequacy adq = adequacy(d);

  SpanBounds s;
  s.max_bound = e + 2 * v - 2;
  s.min_bound = -e - 2 * v_dual + 2;
  s.span_bound = s.max_bound - s.min_bound;
  s.exact_if_adequate = adq.a_adequate && adq.b_adequate;
  s.max_degree = max_degree(b);
  s.min_degree = min_degree(b);
  s.span = s.max_degree - s.min_degree;
  if (s.max_degree > s.max_bound || s.min_degree < s.min_bound) {
    throw Error(ErrorKind::Internal, "bracket degrees fall outside the state bounds");
  }
  if ((adq.a_adequate && s.max_degree != s.max_bound) || (adq.b_adequate && s.min_degree != s.min_bound)) {
    throw Error(ErrorKind::Internal, "adequate diagram misses its extreme bracket degree");
  }
  if (s.exact_if_adequate && s.span != 2 * e + 2 * v + 2 * v_dual - 4) {
    throw Error(ErrorKind::Internal, "adequate diagram has unexpected bracket span");
  }
  return s;
}

GenusBound turaev_genus_bound(const PlanarDiagram& d) {
  GenusBound out;
  out.genus_of_diagram = turaev_genus_of_diagram(d);
  out.jones_span = span_quarters(jones(d)) / 4;
  out.upper_bound_from_span = static_cast<int>(d.crossing_count()) - out.jones_span;
  if (out.genus_of_diagram > out.upper_bound_from_span) {
    throw Error(ErrorKind::Internal, "diagram genus exceeds c - span(Jones)");
  }
  return out;
}

GenusCertificate genus_invariance_certificate(const PlanarDiagram& d) {
  GenusCertificate cert;
  cert.genus = turaev_genus_of_diagram(d);
  const Adequacy adq = adequacy(d);
  cert.certified_invariant = adq.a_adequate && adq.b_adequate;
  cert.bracket_span = span(bracket_via_brt(d));
  if (cert.certified_invariant &&
      4 * cert.genus != 4 * static_cast<int>(d.crossing_count()) - cert.bracket_span) {
    throw Error(ErrorKind::Internal, "certificate identity 4g = 4e - span fails");
  }
  return cert;
}

}  // namespace knotbrt
