#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "binding.hpp"
#include "constructions.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "parallel.hpp"
#include "report.hpp"
#include "spectral.hpp"
#include "verify.hpp"

namespace bindex::cli {

enum class Format { text, json, csv };

// Everything a single invocation can set; each subcommand reads its own part.
struct Config {
  std::string g6;
  std::string input;
  std::string format = "text";
  std::string out = "-";
  std::optional<std::size_t> threads;
  std::uint64_t seed = default_seed;
  std::optional<double> tol;
  std::string method = "auto";
  std::string order = "auto";
  std::string parts;
  std::int64_t n = 0, r = 0, p = 0, q = 0, t = 1;
  std::int64_t r_max = 5, n_max = 60;
  std::size_t samples = 1000;
};

namespace detail {

inline std::string slurp(const std::string& path) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw error("cannot read input file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// A file holding a single token is graph6; anything else is an edge list.
inline Graph read_graph(const Config& c) {
  if (!c.g6.empty())
    return from_graph6(c.g6);
  if (c.input.empty())
    throw domain_error("a graph is required: pass --g6 or --input");
  const std::string text = slurp(c.input);
  const std::string body = trim(text);
  if (!body.empty() && body.find_first_of(" \t\n") == std::string::npos)
    return from_graph6(body);
  return from_edge_list(text);
}

inline json set_json(const VertexSet& s) { return s.elements(); }

inline json partition_json(const std::vector<VertexSet>& blocks) {
  json out = json::array();
  for (const auto& b : blocks)
    out.push_back(set_json(b));
  return out;
}

inline json construction_json(const Construction& c) {
  const QuotientMatrix m = quotient_matrix(c.graph, c.partition);
  const IntPolynomial cp = charpoly(m);
  json j;
  j["label"] = c.label;
  j["order"] = c.graph.order();
  j["edges"] = c.graph.edge_count();
  j["closed_form_edges"] = c.closed_form_edges;
  j["graph6"] = to_graph6(c.graph);
  j["partition"] = partition_json(c.partition);
  j["quotient"] = m.rows();
  j["charpoly"] = cp.to_string();
  j["radius"] = interval_json(largest_real_root(cp));
  return j;
}

inline std::string scalar_text(const json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

inline void table_text(std::ostream& os, const json& table) {
  for (const auto& row : table) {
    bool first = true;
    for (const auto& [k, v] : row.items()) {
      os << (first ? "  " : ", ") << k << "=" << scalar_text(v);
      first = false;
    }
    os << "\n";
  }
}

inline void render_text(std::ostream& os, const json& j) {
  for (const auto& [k, v] : j.items()) {
    if (k == "table" && v.is_array()) {
      os << "table:\n";
      table_text(os, v);
    } else if (v.is_object()) {
      for (const auto& [k2, v2] : v.items())
        os << k << "." << k2 << " = " << scalar_text(v2) << "\n";
    } else {
      os << k << " = " << scalar_text(v) << "\n";
    }
  }
}

inline std::string render_csv(const json& j) {
  std::ostringstream os;
  os << "key,value\n";
  for (const auto& [k, v] : j.items())
    os << bindex::detail::csv_field(k) << "," << bindex::detail::csv_field(scalar_text(v)) << "\n";
  return os.str();
}

inline Format parse_format(const std::string& s) {
  if (s == "json")
    return Format::json;
  if (s == "csv")
    return Format::csv;
  return Format::text;
}

} // namespace detail

// Outcome of a subcommand before serialization.
struct Output {
  json body = json::object();
  std::optional<VerificationReport> report;
  std::string raw; // printed verbatim (encode/decode)
};

inline std::string render(const Output& o, Format f) {
  if (!o.raw.empty())
    return o.raw;
  std::ostringstream os;
  const json j = o.report ? to_json(*o.report) : o.body;
  switch (f) {
  case Format::json:
    os << j.dump(2) << "\n";
    break;
  case Format::csv:
    os << (o.report ? to_csv(*o.report) : detail::render_csv(j));
    break;
  case Format::text:
    detail::render_text(os, j);
    break;
  }
  return os.str();
}

inline Output cmd_binding(const Config& c) {
  const Graph g = detail::read_graph(c);
  BindingResult res;
  if (c.method == "brute")
    res = binding_number_bruteforce(g);
  else if (c.method == "flow")
    res = binding_number_flow(g);
  else
    res = binding_number(g);
  Output o;
  o.body["b"] = res.value.to_string();
  o.body["witness"] = res.witness.to_string();
  o.body["method"] = to_string(res.method);
  o.body["order"] = g.order();
  o.body["edges"] = g.edge_count();
  return o;
}

inline Output cmd_toughness(const Config& c) {
  const Graph g = detail::read_graph(c);
  Output o;
  o.body["tau"] = toughness_bruteforce(g).to_string();
  o.body["order"] = g.order();
  o.body["edges"] = g.edge_count();
  return o;
}

inline Output cmd_spectral(const Config& c) {
  const Graph g = detail::read_graph(c);
  const double tol = c.tol.value_or(default_power_tolerance);
  Output o;
  o.body["rho"] = spectral_radius_power(g, tol);
  o.body["order"] = g.order();
  o.body["edges"] = g.edge_count();
  o.body["bipartite"] = is_bipartite(g);
  if (is_bipartite(g)) {
    const SqrtEdgeCheck s = rho_vs_sqrt_edges(g);
    o.body["sqrt_edges"] = s.sqrt_edges;
    o.body["rho_le_sqrt_edges"] = s.bound_holds;
    if (s.equality_checked)
      o.body["equality_iff_complete_bipartite"] = s.equality_consistent;
  }
  return o;
}

// "a,b;c,d" -> D(a,b;c,d).
inline BipartitionSpec parse_parts(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos)
    throw domain_error("--parts expects 'p1,...,ph;q1,...,qh'");
  auto list = [](const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = detail::trim(item);
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
        throw domain_error("--parts entries must be positive integers, got '" + item + "'");
      out.push_back(std::stoul(item));
    }
    return out;
  };
  BipartitionSpec spec{list(text.substr(0, semi)), list(text.substr(semi + 1))};
  spec.validate();
  return spec;
}

inline Output cmd_construct(const std::string& kind, const Config& c) {
  Output o;
  if (kind == "general") {
    o.body = detail::construction_json(c.t == 1 ? general_extremal(c.n, c.r) : family_general(c.n, c.r, c.t));
  } else if (kind == "bipK") {
    o.body = detail::construction_json(bipartite_extremal_K(c.n, c.r));
  } else if (kind == "bipD") {
    json all = json::array();
    for (const auto& d : bipartite_extremal_D(c.n, c.r))
      all.push_back(detail::construction_json(d));
    o.body["constructions"] = all;
  } else {
    o.body = detail::construction_json(double_nested_construction(parse_parts(c.parts)));
  }
  return o;
}

inline Output cmd_regime(const std::string& kind, const Config& c) {
  Output o;
  RegimeReport rep;
  if (kind == "thm6")
    rep = theorem6_regime(c.n, c.r);
  else if (kind == "thm7")
    rep = theorem7_regime(c.n, c.r);
  else if (kind == "lemma6")
    rep = lemma6_max(c.p, c.q, c.r);
  else
    rep = general_regime(c.n, c.r);
  o.body = to_json(rep);
  return o;
}

inline ScanOrder parse_order(const std::string& s) {
  if (s == "full")
    return ScanOrder::full;
  if (s == "level")
    return ScanOrder::level;
  return ScanOrder::automatic;
}

inline Output cmd_scan(const std::string& kind, const Config& c) {
  Output o;
  if (kind == "family")
    o.report = scan_family_general(c.n, c.r);
  else if (kind == "bipfamily")
    o.report = scan_bipartite_family(c.p, c.q, c.r);
  else
    o.report = scan_lemma12(c.n, c.r);
  return o;
}

inline Output cmd_verify(const std::string& kind, const Config& c) {
  const std::size_t threads = resolve_threads(c.threads);
  Output o;
  if (kind == "lemma6") {
    o.report = enumerate_bipartite_max(c.p, c.q, c.r, parse_order(c.order), threads);
  } else if (kind == "thm6") {
    o.report = enumerate_bipartite_theorem6(c.n, c.r, threads);
  } else if (kind == "properties") {
    if (c.n < 1)
      throw domain_error("--n must be positive");
    o.report = enumerate_general_properties(static_cast<std::size_t>(c.n), c.samples, c.seed, threads);
  } else if (kind == "identities") {
    o.report = check_polynomial_identities({.r_max = c.r_max, .n_max = c.n_max});
  } else if (kind == "constructions") {
    o.report = check_construction_grid({c.r_max, c.n_max}, threads);
  } else {
    o.report = check_spectral_grid({c.r_max, c.n_max}, threads, c.tol.value_or(1e-8));
  }
  return o;
}

inline Output cmd_encode(const Config& c) {
  const std::string text = detail::slurp(c.input.empty() ? "-" : c.input);
  Output o;
  o.raw = to_graph6(from_edge_list(text)) + "\n";
  return o;
}

inline Output cmd_decode(const Config& c) {
  const Graph g = detail::read_graph(c);
  Output o;
  o.raw = to_edge_list(g);
  if (o.raw.empty() || o.raw.back() != '\n')
    o.raw += "\n";
  return o;
}

// Parses argv, runs one subcommand and returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  Config c;
  CLI::App app{"Binding numbers, extremal constructions and certified spectral radii", "bindex"};
  app.require_subcommand(1);

  auto graph_input = [&](CLI::App* s) {
    auto* g6 = s->add_option("--g6", c.g6, "graph6 string");
    auto* in = s->add_option("--input", c.input, "graph6 or edge-list file, - for stdin");
    g6->excludes(in);
  };
  auto common = [&](CLI::App* s) {
    s->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    s->add_option("--out", c.out, "output path, - for stdout");
    s->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
    s->add_option("--seed", c.seed, "random seed");
    s->add_option("--tol", c.tol, "numeric tolerance")->check(CLI::PositiveNumber);
  };
  auto need = [](CLI::App* s, const char* name, std::int64_t& v, const char* what) {
    s->add_option(name, v, what)->required();
  };

  std::vector<std::pair<CLI::App*, std::function<Output()>>> leaves;
  auto leaf = [&](CLI::App* s, std::function<Output()> fn) {
    common(s);
    leaves.emplace_back(s, std::move(fn));
  };

  auto* binding = app.add_subcommand("binding", "exact binding number");
  graph_input(binding);
  binding->add_option("--method", c.method, "brute, flow or auto")
      ->check(CLI::IsMember({"brute", "flow", "auto"}));
  leaf(binding, [&] { return cmd_binding(c); });

  auto* tough = app.add_subcommand("toughness", "exact toughness by brute force");
  graph_input(tough);
  leaf(tough, [&] { return cmd_toughness(c); });

  auto* spec = app.add_subcommand("spectral", "spectral radius by power iteration");
  graph_input(spec);
  leaf(spec, [&] { return cmd_spectral(c); });

  auto* construct = app.add_subcommand("construct", "build an extremal construction");
  construct->require_subcommand(1);
  for (const char* kind : {"general", "bipK", "bipD"}) {
    auto* s = construct->add_subcommand(kind);
    need(s, "--n", c.n, "order");
    need(s, "--r", c.r, "binding parameter");
    if (std::string(kind) == "general")
      s->add_option("--t", c.t, "family member t1");
    leaf(s, [&, k = std::string(kind)] { return cmd_construct(k, c); });
  }
  {
    auto* s = construct->add_subcommand("dnest", "double nested graph D(p1..ph;q1..qh)");
    s->add_option("--parts", c.parts, "'p1,...,ph;q1,...,qh'")->required();
    leaf(s, [&] { return cmd_construct("dnest", c); });
  }

  auto* regime = app.add_subcommand("regime", "which extremal family applies at (n, r)");
  regime->require_subcommand(1);
  for (const char* kind : {"thm6", "thm7", "general"}) {
    auto* s = regime->add_subcommand(kind);
    need(s, "--n", c.n, "order");
    need(s, "--r", c.r, "binding parameter");
    leaf(s, [&, k = std::string(kind)] { return cmd_regime(k, c); });
  }
  {
    auto* s = regime->add_subcommand("lemma6");
    need(s, "--p", c.p, "larger side");
    need(s, "--q", c.q, "smaller side");
    need(s, "--r", c.r, "binding parameter");
    leaf(s, [&] { return cmd_regime("lemma6", c); });
  }

  auto* scan = app.add_subcommand("scan", "certified within-family sweeps");
  scan->require_subcommand(1);
  for (const char* kind : {"family", "lemma12"}) {
    auto* s = scan->add_subcommand(kind);
    need(s, "--n", c.n, "order");
    need(s, "--r", c.r, "binding parameter");
    leaf(s, [&, k = std::string(kind)] { return cmd_scan(k, c); });
  }
  {
    auto* s = scan->add_subcommand("bipfamily");
    need(s, "--p", c.p, "larger side");
    need(s, "--q", c.q, "smaller side");
    need(s, "--r", c.r, "binding parameter");
    leaf(s, [&] { return cmd_scan("bipfamily", c); });
  }

  auto* verify = app.add_subcommand("verify", "exhaustive and grid verification");
  verify->require_subcommand(1);
  {
    auto* s = verify->add_subcommand("lemma6", "exhaustive bipartite maximum");
    need(s, "--p", c.p, "larger side");
    need(s, "--q", c.q, "smaller side");
    need(s, "--r", c.r, "binding parameter");
    s->add_option("--order", c.order, "scan order")->check(CLI::IsMember({"auto", "full", "level"}));
    leaf(s, [&] { return cmd_verify("lemma6", c); });
  }
  {
    auto* s = verify->add_subcommand("thm6", "exhaustive bipartite maximum over all splits");
    need(s, "--n", c.n, "order");
    need(s, "--r", c.r, "binding parameter");
    leaf(s, [&] { return cmd_verify("thm6", c); });
  }
  {
    auto* s = verify->add_subcommand("properties", "binding set and toughness properties");
    need(s, "--n", c.n, "order");
    s->add_option("--samples", c.samples, "random graphs when n > 6");
    leaf(s, [&] { return cmd_verify("properties", c); });
  }
  for (const char* kind : {"identities", "constructions", "spectral"}) {
    auto* s = verify->add_subcommand(kind);
    s->add_option("--r-max", c.r_max, "largest r in the grid");
    s->add_option("--n-max", c.n_max, "largest n in the grid");
    leaf(s, [&, k = std::string(kind)] { return cmd_verify(k, c); });
  }

  auto* encode = app.add_subcommand("encode", "edge list to graph6");
  encode->add_option("--input", c.input, "edge-list file, - for stdin");
  encode->add_option("--out", c.out, "output path, - for stdout");
  leaves.emplace_back(encode, [&] { return cmd_encode(c); });

  auto* decode = app.add_subcommand("decode", "graph6 to edge list");
  graph_input(decode);
  decode->add_option("--out", c.out, "output path, - for stdout");
  leaves.emplace_back(decode, [&] { return cmd_decode(c); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    for (auto& [sub, fn] : leaves) {
      if (!sub->parsed())
        continue;
      const Output result = fn();
      const std::string text = render(result, detail::parse_format(c.format));
      if (c.out == "-") {
        out << text;
      } else {
        std::ofstream file(c.out, std::ios::binary);
        if (!file)
          throw error("cannot write output file '" + c.out + "'");
        file << text;
      }
      return result.report && result.report->verdict == Verdict::fail ? 1 : 0;
    }
  } catch (const std::exception& e) {
    err << "bindex: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

} // namespace bindex::cli
