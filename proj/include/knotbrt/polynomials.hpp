#pragma once

// Exact sparse polynomials with arbitrary-precision integer coefficients.
//
// Three rings are used throughout the library:
//   MultiPoly  Z[X, Y, Z], the home of the ribbon-graph polynomial
//   LaurentA   Z[A, 1/A],  the home of the Kauffman bracket
//   LaurentT   Laurent polynomials in t with exponents in (1/4)Z, stored as
//              integer numerators over the fixed denominator 4 (Jones).
//
// Every value keeps its terms in a std::map keyed by exponent, so iteration
// order is the canonical serialization order and no zero coefficient is ever
// stored.  The zero polynomial is the empty map.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "json.hpp"

namespace knotbrt {

using Integer = mpz_class;

/// Exponent triple of X^x Y^y Z^z, ordered graded-lexicographically.
struct Monomial {
  int x = 0;
  int y = 0;
  int z = 0;

  int degree() const noexcept { return x + y + z; }

  friend Monomial operator+(const Monomial& a, const Monomial& b) noexcept {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.x <=> b.x; c != 0) return c;
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.z <=> b.z;
  }
};

struct LaurentATag {};
struct LaurentTTag {};

template <typename Exponent, typename Tag = void>
class SparsePolynomial {
 public:
  using exponent_type = Exponent;
  using term_map = std::map<Exponent, Integer>;

  SparsePolynomial() = default;

  static SparsePolynomial constant(const Integer& c) { return monomial(Exponent{}, c); }

  static SparsePolynomial monomial(const Exponent& e, const Integer& c = 1) {
    SparsePolynomial p;
    p.add_term(e, c);
    return p;
  }

  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Integer coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(const Exponent& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SparsePolynomial& operator+=(const SparsePolynomial& q) {
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
  }
  SparsePolynomial& operator-=(const SparsePolynomial& q) {
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
  }
  SparsePolynomial& operator*=(const SparsePolynomial& q) {
    *this = *this * q;
    return *this;
  }

  friend SparsePolynomial operator+(SparsePolynomial p, const SparsePolynomial& q) {
    p += q;
    return p;
  }
  friend SparsePolynomial operator-(SparsePolynomial p, const SparsePolynomial& q) {
    p -= q;
    return p;
  }
  friend SparsePolynomial operator-(SparsePolynomial p) {
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
  }
  friend SparsePolynomial operator*(const SparsePolynomial& p, const SparsePolynomial& q) {
    SparsePolynomial r;
    Integer prod;
    for (const auto& [ep, cp] : p.terms_) {
      for (const auto& [eq, cq] : q.terms_) {
        prod = cp * cq;
        r.add_term(ep + eq, prod);
      }
    }
    return r;
  }
  friend SparsePolynomial operator*(SparsePolynomial p, const Integer& k) {
    if (k == 0) return {};
    for (auto& [e, c] : p.terms_) c *= k;
    return p;
  }

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.terms_ == b.terms_;
  }

  /// Multiplies by the monomial of exponent `shift` (coefficient 1).
  SparsePolynomial shifted(const Exponent& shift) const {
    SparsePolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + shift, c);
    return r;
  }

  SparsePolynomial pow(unsigned n) const {
    SparsePolynomial result = constant(1);
    SparsePolynomial base = *this;
    while (n != 0) {
      if (n & 1U) result *= base;
      n >>= 1U;
      if (n != 0) base *= base;
    }
    return result;
  }

 private:
  term_map terms_;
};

using MultiPoly = SparsePolynomial<Monomial>;
using LaurentA = SparsePolynomial<int, LaurentATag>;
/// Exponents are numerators k of t^(k/4).
using LaurentT = SparsePolynomial<int, LaurentTTag>;

// Single-variable degree helpers.  Precondition: p nonzero.
template <typename Tag>
int min_degree(const SparsePolynomial<int, Tag>& p) {
  return p.terms().begin()->first;
}
template <typename Tag>
int max_degree(const SparsePolynomial<int, Tag>& p) {
  return p.terms().rbegin()->first;
}
template <typename Tag>
int span(const SparsePolynomial<int, Tag>& p) {
  return p.is_zero() ? 0 : max_degree(p) - min_degree(p);
}

/// A -> 1/A.
LaurentA invert_variable(const LaurentA& p);

/// delta = -A^2 - A^-2.
LaurentA bracket_delta();

/// Evaluates a ribbon-graph polynomial at X = -A^4, Y = A^-2 delta,
/// Z = delta^-2 and multiplies by A^(e + 2 - 2v).  Each monomial
/// X^a Y^b Z^g is mapped to (-A^4)^a A^(-2b) delta^(b - 2g); throws
/// NegativeDeltaExponent when b < 2g.
LaurentA specialize_brt(const MultiPoly& c, int edges, int vertices);

/// (-A)^(-3w) * b with A = t^(-1/4).
LaurentT substitute_t(const LaurentA& bracket, int writhe);

/// Span of a LaurentT in units of t, as numerator over 4.
inline int span_quarters(const LaurentT& p) { return span(p); }

/// True when every exponent numerator is divisible by 4.
bool has_integral_exponents(const LaurentT& p);

// Canonical JSON: [{"exp": ..., "coeff": "decimal"}, ...] in map order.
nlohmann::json to_json(const MultiPoly& p);
nlohmann::json to_json(const LaurentA& p);
nlohmann::json to_json(const LaurentT& p);

MultiPoly multipoly_from_json(const nlohmann::json& j);
LaurentA laurent_a_from_json(const nlohmann::json& j);

// Human-readable forms, highest term first: "X*Y^2 + 2*Y - 1",
// "-A^5 - A^-3 + A^-7", "t^-1 + t^-3 - t^-4", "t^(3/2)".
std::string to_string(const MultiPoly& p);
std::string to_string(const LaurentA& p);
std::string to_string(const LaurentT& p);

}  // namespace knotbrt
