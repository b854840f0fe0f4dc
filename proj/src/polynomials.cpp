#include "knotbrt/polynomials.hpp"

#include <sstream>
#include <vector>

#include "knotbrt/error.hpp"

namespace knotbrt {

namespace {

std::string coefficient_prefix(const Integer& c, bool first, bool constant_term) {
  std::string out;
  Integer mag = abs(c);
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (constant_term || mag != 1) {
    out += mag.get_str();
    if (!constant_term) out += "*";
  }
  return out;
}

std::string power(const char* var, int e) {
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

template <typename Tag>
nlohmann::json laurent_json(const SparsePolynomial<int, Tag>& p) {
  auto out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exp", e}, {"coeff", c.get_str()}});
  return out;
}

Integer parse_coeff(const nlohmann::json& j) {
  Integer c;
  if (j.is_string()) {
    if (c.set_str(j.get<std::string>(), 10) != 0) {
      throw Error(ErrorKind::Syntax, "invalid coefficient: " + j.get<std::string>());
    }
  } else {
    c = j.get<long>();
  }
  return c;
}

}  // namespace

LaurentA invert_variable(const LaurentA& p) {
  LaurentA r;
  for (const auto& [e, c] : p.terms()) r.add_term(-e, c);
  return r;
}

LaurentA bracket_delta() {
  LaurentA d;
  d.add_term(2, -1);
  d.add_term(-2, -1);
  return d;
}

LaurentA specialize_brt(const MultiPoly& c, int edges, int vertices) {
  const LaurentA delta = bracket_delta();
  std::vector<LaurentA> delta_powers{LaurentA::constant(1)};
  LaurentA result;
  for (const auto& [m, coeff] : c.terms()) {
    const int delta_exp = m.y - 2 * m.z;
    if (delta_exp < 0) {
      throw Error(ErrorKind::NegativeDeltaExponent,
                  "monomial X^" + std::to_string(m.x) + " Y^" + std::to_string(m.y) + " Z^" +
                      std::to_string(m.z) + " has Y-degree below twice its Z-degree");
    }
    while (static_cast<int>(delta_powers.size()) <= delta_exp) {
      delta_powers.push_back(delta_powers.back() * delta);
    }
    // (-A^4)^x A^(-2y), then the global A^(e + 2 - 2v).
    const int shift = 4 * m.x - 2 * m.y + edges + 2 - 2 * vertices;
    Integer sign = (m.x % 2 == 0) ? coeff : Integer(-coeff);
    result += delta_powers[delta_exp].shifted(shift) * sign;
  }
  return result;
}

LaurentT substitute_t(const LaurentA& bracket, int writhe) {
  // (-A)^(-3w) = (-1)^w A^(-3w); A^k -> t^(-k/4).
  const bool negate = (writhe % 2) != 0;
  LaurentT out;
  for (const auto& [k, c] : bracket.terms()) {
    out.add_term(-(k - 3 * writhe), negate ? Integer(-c) : c);
  }
  return out;
}

bool has_integral_exponents(const LaurentT& p) {
  for (const auto& [e, c] : p.terms()) {
    if (e % 4 != 0) return false;
  }
  return true;
}

nlohmann::json to_json(const MultiPoly& p) {
  auto out = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    out.push_back({{"exp", {m.x, m.y, m.z}}, {"coeff", c.get_str()}});
  }
  return out;
}

nlohmann::json to_json(const LaurentA& p) { return laurent_json(p); }
nlohmann::json to_json(const LaurentT& p) { return laurent_json(p); }

MultiPoly multipoly_from_json(const nlohmann::json& j) {
  MultiPoly p;
  for (const auto& term : j) {
    const auto& e = term.at("exp");
    if (!e.is_array() || e.size() != 3) throw Error(ErrorKind::Syntax, "exponent must be [a,b,c]");
    p.add_term({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()}, parse_coeff(term.at("coeff")));
  }
  return p;
}

LaurentA laurent_a_from_json(const nlohmann::json& j) {
  LaurentA p;
  for (const auto& term : j) p.add_term(term.at("exp").get<int>(), parse_coeff(term.at("coeff")));
  return p;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool constant = m.degree() == 0;
    out += coefficient_prefix(c, first, constant);
    std::vector<std::string> factors;
    if (m.x != 0) factors.push_back(power("X", m.x));
    if (m.y != 0) factors.push_back(power("Y", m.y));
    if (m.z != 0) factors.push_back(power("Z", m.z));
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i != 0) out += "*";
      out += factors[i];
    }
    first = false;
  }
  return out;
}

std::string to_string(const LaurentA& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    out += coefficient_prefix(c, first, e == 0);
    if (e != 0) out += power("A", e);
    first = false;
  }
  return out;
}

std::string to_string(const LaurentT& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    out += coefficient_prefix(c, first, e == 0);
    if (e != 0) {
      if (e % 4 == 0) {
        out += power("t", e / 4);
      } else {
        int num = e;
        int den = 4;
        if (num % 2 == 0) {
          num /= 2;
          den = 2;
        }
        out += "t^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
      }
    }
    first = false;
  }
  return out;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::Label: return "LabelError";
    case ErrorKind::Orientation: return "OrientationError";
    case ErrorKind::Planarity: return "PlanarityError";
    case ErrorKind::Index: return "IndexError";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::InvalidEdgeOrder: return "InvalidEdgeOrder";
    case ErrorKind::InvalidRibbonGraph: return "InvalidRibbonGraph";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::LoopContraction: return "LoopContraction";
    case ErrorKind::DisconnectedDiagram: return "DisconnectedDiagram";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::NegativeDeltaExponent: return "NegativeDeltaExponent";
    case ErrorKind::TooManyCrossings: return "TooManyCrossings";
    case ErrorKind::BaseCaseTooLarge: return "BaseCaseTooLarge";
    case ErrorKind::Internal: return "InternalError";
  }
  return "Error";
}

}  // namespace knotbrt
