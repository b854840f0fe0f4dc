#include "knotbrt/cli.hpp"

#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "knotbrt/bracket.hpp"
#include "knotbrt/error.hpp"
#include "knotbrt/state_graph.hpp"

namespace knotbrt {

namespace {

using nlohmann::json;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DisconnectedDiagram:
    case ErrorKind::DisconnectedGraph:
    case ErrorKind::TooManyCrossings:
    case ErrorKind::BaseCaseTooLarge:
    case ErrorKind::NegativeDeltaExponent:
      return 2;
    case ErrorKind::Internal:
      return 3;
    default:
      return 1;
  }
}

std::string describe(const Error& e) {
  std::string msg = std::string(to_string(e.kind())) + ": " + e.what();
  if (e.crossing() && msg.find("crossing") == std::string::npos) {
    msg += " (crossing " + std::to_string(*e.crossing()) + ")";
  }
  return msg;
}

struct Input {
  std::string pd;
  std::string braid;
  int strands = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--pd", pd, "PD code, e.g. \"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\"");
    cmd->add_option("--braid", braid, "braid word of signed generators, e.g. \"1 -2 1 -2\"");
    cmd->add_option("--strands", strands, "strand count for --braid");
  }

  PlanarDiagram read(std::istream& in) const {
    if (!braid.empty()) return parse_braid(braid, strands > 0 ? std::optional<int>(strands) : std::nullopt);
    if (!pd.empty()) return parse_pd(pd);
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_pd(text);
  }
};

BrtMethod brt_method(const std::string& name) {
  if (name == "subgraph") return BrtMethod::Subgraph;
  if (name == "tree") return BrtMethod::Tree;
  return BrtMethod::Recursive;
}

State parse_state_option(const std::string& spec, std::size_t crossings) {
  if (spec == "all-a") return State::all(crossings, Splice::A);
  if (spec == "all-b") return State::all(crossings, Splice::B);
  return State::parse(spec);
}

EdgeOrder parse_edge_order(const std::string& text) {
  EdgeOrder order;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      const long v = std::stol(token);
      if (v < 0) throw Error(ErrorKind::InvalidEdgeOrder, "negative edge id in order");
      order.push_back(static_cast<std::size_t>(v));
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidEdgeOrder, "invalid edge id '" + token + "'");
    }
  }
  return order;
}

json ribbon_json(const RibbonGraph& g, const State& s) {
  // Half-edges are reported 1-based: crossing x owns 2x+1 and 2x+2.
  return {{"state", s.to_string()},
          {"sigma0", cycle_notation(g.vertices(), 1)},
          {"sigma1", cycle_notation(g.edge_cycles(), 1)},
          {"sigma2", cycle_notation(g.face_cycles(), 1)},
          {"counts", to_json(counts(g))}};
}

json summary_record(const PlanarDiagram& d) {
  const LaurentT j = jones(d);
  const SpanBounds s = span_bounds(d);
  const Adequacy adq = adequacy(d);
  const GenusBound gb = turaev_genus_bound(d);
  return {{"crossings", std::to_string(d.crossing_count())},
          {"writhe", std::to_string(writhe(d))},
          {"jones", to_string(j)},
          {"span_t", std::to_string(gb.jones_span)},
          {"bracket_span", std::to_string(s.span)},
          {"span_bound", std::to_string(s.span_bound)},
          {"a_adequate", adq.a_adequate},
          {"b_adequate", adq.b_adequate},
          {"genus", std::to_string(gb.genus_of_diagram)},
          {"genus_bound", std::to_string(gb.upper_bound_from_span)}};
}

// Runs task(i) for i in [0, n) on a small pool; results are written by index.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& task) {
  const unsigned workers = std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(n)));
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) task(i);
    });
  }
}

std::vector<int> random_connected_word(std::mt19937_64& rng, int strands, int length) {
  for (;;) {
    std::vector<int> word(length);
    std::vector<char> used(strands - 1, 0);
    for (int& g : word) {
      const int index = static_cast<int>(rng() % static_cast<std::uint64_t>(strands - 1)) + 1;
      g = (rng() % 2 == 0) ? index : -index;
      used[index - 1] = 1;
    }
    if (std::find(used.begin(), used.end(), 0) == used.end()) return word;
  }
}

std::string word_text(const std::vector<int>& word) {
  std::string s;
  for (int g : word) s += (s.empty() ? "" : " ") + std::to_string(g);
  return s;
}

int verify(std::uint64_t seed, int trials, int max_crossings, int strands, std::ostream& out, std::ostream& err) {
  if (strands < 2 || max_crossings < strands - 1) {
    err << "verify: need at least 2 strands and max-crossings >= strands - 1\n";
    return 2;
  }
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> words;
  for (int t = 0; t < trials; ++t) {
    const int lo = strands - 1;
    const int length = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(max_crossings - lo + 1));
    words.push_back(random_connected_word(rng, strands, length));
  }
  std::vector<int> status(words.size(), 0);  // bit 0 bracket mismatch, bit 1 brt mismatch
  parallel_for(words.size(), [&](std::size_t i) {
    const PlanarDiagram d = braid_closure(words[i], strands);
    const RibbonGraph g = all_A(d);
    const MultiPoly rec = brt_recursive(g);
    const GraphCounts c = counts(g);
    if (specialize_brt(rec, c.e, c.v) != bracket_statesum(d, kDefaultStatesumCap, 1)) status[i] |= 1;
    if (g.edge_count() <= 16 && brt_subgraph(g) != rec) status[i] |= 2;
  });

  json mismatches = json::array();
  int bracket_agree = 0;
  int brt_agree = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    bracket_agree += (status[i] & 1) == 0;
    brt_agree += (status[i] & 2) == 0;
    if (status[i] != 0) mismatches.push_back(word_text(words[i]));
  }
  out << json{{"seed", std::to_string(seed)},
              {"trials", std::to_string(trials)},
              {"strands", std::to_string(strands)},
              {"max_crossings", std::to_string(max_crossings)},
              {"bracket_agree", std::to_string(bracket_agree)},
              {"brt_agree", std::to_string(brt_agree)},
              {"mismatches", mismatches}}
             .dump()
      << "\n";
  return mismatches.empty() ? 0 : 3;
}

int table(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream file(path);
  if (!file) {
    err << "table: cannot read " << path << "\n";
    return 1;
  }
  std::vector<std::string> lines;
  for (std::string line; std::getline(file, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  std::vector<std::string> records(lines.size());
  std::vector<std::string> problems(lines.size());
  std::vector<int> codes(lines.size(), 0);
  parallel_for(lines.size(), [&](std::size_t i) {
    const std::string& line = lines[i];
    if (line.find_first_not_of(" \t") == std::string::npos) return;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      problems[i] = "expected name<TAB>PD";
      codes[i] = 1;
      return;
    }
    try {
      json rec = summary_record(parse_pd(std::string_view(line).substr(tab + 1)));
      rec["name"] = line.substr(0, tab);
      records[i] = rec.dump();
    } catch (const Error& e) {
      problems[i] = describe(e);
      codes[i] = exit_code(e.kind());
    }
  });
  int code = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!records[i].empty()) out << records[i] << "\n";
    if (!problems[i].empty()) err << "line " << i + 1 << ": " << problems[i] << "\n";
    code = std::max(code, codes[i]);
  }
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ribbon-graph polynomials, Kauffman brackets and Jones polynomials of link diagrams"};
  app.require_subcommand(1);

  Input input;
  bool as_json = false;
  std::string method;
  std::string state = "all-a";
  std::string edge_order;
  int trials = 100;
  int max_crossings = 10;
  int strands = 4;
  std::uint64_t seed = 1;
  std::string path;

  auto* parse_cmd = app.add_subcommand("parse", "Validate a diagram and print it as JSON");
  input.add_to(parse_cmd);

  auto* ribbon_cmd = app.add_subcommand("ribbon", "Ribbon graph of a state: sigma0, sigma1, sigma2 and counts");
  input.add_to(ribbon_cmd);
  ribbon_cmd->add_option("--state", state, "all-a, all-b or one A/B letter per crossing");

  auto* brt_cmd = app.add_subcommand("brt", "Ribbon-graph polynomial of the all-A state graph");
  input.add_to(brt_cmd);
  method = "recursive";
  brt_cmd->add_option("--method", method)->check(CLI::IsMember({"recursive", "subgraph", "tree"}));
  brt_cmd->add_option("--edge-order", edge_order, "comma-separated edge ids, smallest first (tree method)");

  std::string bracket_method = "brt";
  auto* bracket_cmd = app.add_subcommand("bracket", "Kauffman bracket");
  input.add_to(bracket_cmd);
  bracket_cmd->add_option("--method", bracket_method)->check(CLI::IsMember({"brt", "statesum"}));
  bracket_cmd->add_flag("--json", as_json);

  auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial in t");
  input.add_to(jones_cmd);
  jones_cmd->add_flag("--json", as_json);

  auto* adequacy_cmd = app.add_subcommand("adequacy", "A- and B-adequacy flags");
  input.add_to(adequacy_cmd);
  auto* span_cmd = app.add_subcommand("span", "Bracket degree bounds from the all-A and all-B states");
  input.add_to(span_cmd);
  auto* tgenus_cmd = app.add_subcommand("tgenus", "Diagram genus and the Jones-span upper bound");
  input.add_to(tgenus_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Randomized cross-check of bracket and polynomial methods");
  verify_cmd->add_option("--random", trials, "number of random diagrams")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--max-crossings", max_crossings)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--strands", strands);

  auto* table_cmd = app.add_subcommand("table", "Batch summary of name<TAB>PD lines as ndjson");
  table_cmd->add_option("file", path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (verify_cmd->parsed()) return verify(seed, trials, max_crossings, strands, out, err);
    if (table_cmd->parsed()) return table(path, out, err);

    const PlanarDiagram d = input.read(in);
    if (parse_cmd->parsed()) {
      json j = d.to_json();
      j["free_loops"] = std::to_string(d.free_loops());
      j["components"] = std::to_string(d.component_count());
      j["writhe"] = std::to_string(writhe(d));
      out << j.dump() << "\n";
    } else if (ribbon_cmd->parsed()) {
      const State s = parse_state_option(state, d.crossing_count());
      out << ribbon_json(build_state_graph(d, s), s).dump() << "\n";
    } else if (brt_cmd->parsed()) {
      const RibbonGraph g = all_A(d);
      MultiPoly c;
      if (!edge_order.empty()) {
        if (method != "tree") throw Error(ErrorKind::InvalidEdgeOrder, "--edge-order applies to the tree method");
        c = brt_tree_expansion(g, parse_edge_order(edge_order));
      } else {
        c = brt(g, brt_method(method));
      }
      out << json{{"method", method}, {"polynomial", to_json(c)}, {"text", to_string(c)}}.dump() << "\n";
    } else if (bracket_cmd->parsed()) {
      const LaurentA b = bracket_method == "statesum" ? bracket_statesum(d) : bracket_via_brt(d);
      if (as_json) out << json{{"bracket", to_json(b)}, {"text", to_string(b)}}.dump() << "\n";
      else out << to_string(b) << "\n";
    } else if (jones_cmd->parsed()) {
      const LaurentT j = jones(d);
      if (as_json) out << json{{"jones", to_json(j)}, {"text", to_string(j)}}.dump() << "\n";
      else out << to_string(j) << "\n";
    } else if (adequacy_cmd->parsed()) {
      const Adequacy a = adequacy(d);
      out << json{{"a_adequate", a.a_adequate}, {"b_adequate", a.b_adequate}}.dump() << "\n";
    } else if (span_cmd->parsed()) {
      const SpanBounds s = span_bounds(d);
      out << json{{"max_bound", std::to_string(s.max_bound)},   {"min_bound", std::to_string(s.min_bound)},
                  {"span_bound", std::to_string(s.span_bound)}, {"exact_if_adequate", s.exact_if_adequate},
                  {"max_degree", std::to_string(s.max_degree)}, {"min_degree", std::to_string(s.min_degree)},
                  {"span", std::to_string(s.span)}}
                 .dump()
          << "\n";
    } else if (tgenus_cmd->parsed()) {
      const GenusBound g = turaev_genus_bound(d);
      const GenusCertificate cert = genus_invariance_certificate(d);
      out << json{{"genus_of_diagram", std::to_string(g.genus_of_diagram)},
                  {"jones_span", std::to_string(g.jones_span)},
                  {"upper_bound_from_span", std::to_string(g.upper_bound_from_span)},
                  {"certified_invariant", cert.certified_invariant}}
                 .dump()
          << "\n";
    }
  } catch (const Error& e) {
    err << describe(e) << "\n";
    return exit_code(e.kind());
  }
  return 0;
}

}  // namespace knotbrt
