#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "family_polynomials.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "polynomial.hpp"
#include "spectral.hpp"
#include "vertex_set.hpp"

namespace bindex {

using json = nlohmann::ordered_json;

// A named graph together with the equitable partition its quotient uses.
struct Construction {
  std::string label;
  Graph graph;
  std::vector<VertexSet> partition;
  std::optional<BipartitionSpec> spec; // set for double nested (incl. complete bipartite) graphs
  std::size_t closed_form_edges = 0;
};

namespace detail {

inline std::int64_t choose2(std::int64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }

inline VertexSet range_set(std::size_t n, std::size_t from, std::size_t count) {
  VertexSet s(n);
  for (std::size_t v = from; v < from + count; ++v)
    s.set(v);
  return s;
}

inline void require(bool ok, const std::string& what) {
  if (!ok)
    throw domain_error(what);
}

inline std::string args(std::initializer_list<std::int64_t> xs) {
  std::string s = "(";
  bool first = true;
  for (auto x : xs) {
    s += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return s + ")";
}

} // namespace detail

inline std::int64_t f_formula(std::int64_t n, std::int64_t r) {
  detail::require(r >= 1 && n >= r + 2, "f(n,r) needs r >= 1 and n >= r+2");
  const std::int64_t a = (n - 1) / (r + 1);
  return a * (n - a);
}

inline std::int64_t g_formula(std::int64_t n, std::int64_t r) {
  detail::require(r >= 1 && n >= r + 2, "g(n,r) needs r >= 1 and n >= r+2");
  const std::int64_t m = n - r - 1;
  return (m / 2) * ((m + 1) / 2) + r + 1;
}

inline std::int64_t general_extremal_edges(std::int64_t n, std::int64_t r) {
  return detail::choose2(n - r - 1) + r + 1;
}

inline std::int64_t family_general_edges(std::int64_t n, std::int64_t r, std::int64_t t1) {
  return detail::choose2(t1) + detail::choose2(n - (r + 1) * t1 - 1) + t1 * (n - t1);
}

inline std::int64_t family_general_max_t(std::int64_t n, std::int64_t r) { return (n - 3) / (r + 1); }

namespace detail {

inline Construction clique_join_split(std::int64_t n, std::int64_t r, std::int64_t t1) {
  const auto un = static_cast<std::size_t>(n);
  const auto t = static_cast<std::size_t>(t1);
  const auto clique = static_cast<std::size_t>(n - (r + 1) * t1 - 1);
  const auto indep = static_cast<std::size_t>(r * t1 + 1);
  check_order(un);
  Graph g = join(complete(t), disjoint_union(complete(clique), empty_graph(indep)));
  std::vector<VertexSet> part = {detail::range_set(un, 0, t), detail::range_set(un, t, clique),
                                 detail::range_set(un, t + clique, indep)};
  const std::string label =
      t1 == 1 ? "K1_join" + detail::args({n, r}) : "Kt_join" + detail::args({n, r, t1});
  return {label, std::move(g), std::move(part), std::nullopt,
          static_cast<std::size_t>(family_general_edges(n, r, t1))};
}

} // namespace detail

// K_t v (K_{n-(r+1)t-1} u (rt+1)K_1); blocks: the K_t, the large clique, the independents.
inline Construction family_general(std::int64_t n, std::int64_t r, std::int64_t t1) {
  detail::require(r >= 1 && n >= r + 3, "family_general needs r >= 1 and n >= r+3");
  detail::require(t1 >= 1 && t1 <= family_general_max_t(n, r),
                  "family_general needs 1 <= t1 <= floor((n-3)/(r+1))");
  return detail::clique_join_split(n, r, t1);
}

// K_1 v (K_{n-r-2} u (r+1)K_1).
inline Construction general_extremal(std::int64_t n, std::int64_t r) {
  detail::require(r >= 1 && n >= r + 3, "general_extremal needs r >= 1 and n >= r+3");
  auto c = detail::clique_join_split(n, r, 1);
  c.closed_form_edges = static_cast<std::size_t>(general_extremal_edges(n, r));
  return c;
}

// K_alpha v (n-alpha)K_1; blocks: the clique, the independents.
inline Construction clique_join_independent(std::int64_t n, std::int64_t alpha) {
  detail::require(alpha >= 1 && alpha < n, "clique_join_independent needs 1 <= alpha < n");
  const auto un = static_cast<std::size_t>(n);
  const auto a = static_cast<std::size_t>(alpha);
  Graph g = join(complete(a), empty_graph(un - a));
  std::vector<VertexSet> part = {detail::range_set(un, 0, a), detail::range_set(un, a, un - a)};
  return {"Ka_join" + detail::args({n, alpha}), std::move(g), std::move(part), std::nullopt,
          static_cast<std::size_t>(detail::choose2(alpha) + alpha * (n - alpha))};
}

inline Construction double_nested_construction(const BipartitionSpec& spec) {
  spec.validate();
  Graph g = double_nested(spec);
  auto blocks = double_nested_blocks(spec);
  std::string label = spec.label();
  if (spec.blocks() == 1)
    label = "Kab(" + std::to_string(spec.p_parts[0]) + "," + std::to_string(spec.q_parts[0]) + ")";
  return {label, std::move(g), std::move(blocks), spec, spec.edge_count()};
}

inline Construction complete_bipartite_construction(std::int64_t a, std::int64_t b) {
  detail::require(a >= 1 && b >= 1, "complete bipartite parts must be >= 1");
  return double_nested_construction(
      BipartitionSpec{{static_cast<std::size_t>(a)}, {static_cast<std::size_t>(b)}});
}

inline BipartitionSpec make_spec(std::int64_t p1, std::int64_t p2, std::int64_t q1, std::int64_t q2) {
  detail::require(p1 >= 1 && p2 >= 1 && q1 >= 1 && q2 >= 1,
                  "double nested parts must be >= 1, got D" + detail::args({p1, p2, q1, q2}));
  return {{static_cast<std::size_t>(p1), static_cast<std::size_t>(p2)},
          {static_cast<std::size_t>(q1), static_cast<std::size_t>(q2)}};
}

// K_{n-a, a} with a = floor((n-1)/(r+1)).
inline Construction bipartite_extremal_K(std::int64_t n, std::int64_t r) {
  detail::require(r >= 1 && n >= r + 3, "bipartite_extremal_K needs r >= 1 and n >= r+3");
  const std::int64_t a = (n - 1) / (r + 1);
  return complete_bipartite_construction(n - a, a);
}

// D(ceil(m/2), r+1; 1, floor(m/2)-1) and its mirror D(floor(m/2), r+1; 1, ceil(m/2)-1)
// with m = n-r-1; a single entry when m is even.
inline std::vector<Construction> bipartite_extremal_D(std::int64_t n, std::int64_t r) {
  detail::require(r >= 1 && n >= r + 5, "bipartite_extremal_D needs r >= 1 and n >= r+5");
  const std::int64_t m = n - r - 1;
  const std::int64_t lo = m / 2, hi = (m + 1) / 2;
  std::vector<Construction> out;
  out.push_back(double_nested_construction(make_spec(hi, r + 1, 1, lo - 1)));
  if (hi != lo)
    out.push_back(double_nested_construction(make_spec(lo, r + 1, 1, hi - 1)));
  return out;
}

enum class Regime { general, bip_r1, bip_f_gt_g, bip_f_lt_g, bip_tie, le6_case_i, le6_case_ii, le6_case_iii };

inline const char* to_string(Regime r) {
  switch (r) {
  case Regime::general:
    return "general";
  case Regime::bip_r1:
    return "bip_r1";
  case Regime::bip_f_gt_g:
    return "bip_f_gt_g";
  case Regime::bip_f_lt_g:
    return "bip_f_lt_g";
  case Regime::bip_tie:
    return "bip_tie";
  case Regime::le6_case_i:
    return "le6_case_i";
  case Regime::le6_case_ii:
    return "le6_case_ii";
  case Regime::le6_case_iii:
    return "le6_case_iii";
  }
  return "?";
}

struct RegimeReport {
  std::string claim;
  json params = json::object();
  Regime regime = Regime::general;
  std::optional<std::int64_t> claimed_max;
  std::optional<RootInterval> claimed_radius;
  std::vector<Construction> extremal;
  bool hypothesis_ok = false;
  std::string hypothesis;
  json details = json::object();
  std::vector<std::string> notes;

  std::vector<std::string> extremal_labels() const {
    std::vector<std::string> out;
    for (const auto& c : extremal)
      out.push_back(c.label);
    return out;
  }
};

inline json interval_json(const RootInterval& iv) {
  return json{{"poly", iv.poly.descending()},
              {"lo", iv.lo.str()},
              {"hi", iv.hi.str()},
              {"exact", iv.exact},
              {"approx", iv.midpoint()}};
}

inline json to_json(const RegimeReport& rep) {
  json j;
  j["claim"] = rep.claim;
  j["params"] = rep.params;
  j["regime"] = to_string(rep.regime);
  j["hypothesis"] = rep.hypothesis;
  j["hypothesis_ok"] = rep.hypothesis_ok;
  j["claimed_max"] = rep.claimed_max ? json(*rep.claimed_max) : json(nullptr);
  j["claimed_radius"] = rep.claimed_radius ? interval_json(*rep.claimed_radius) : json(nullptr);
  json ext = json::array();
  for (const auto& c : rep.extremal)
    ext.push_back(json{{"label", c.label},
                       {"edges", c.graph.edge_count()},
                       {"graph6", to_graph6(c.graph)}});
  j["extremal"] = ext;
  j["details"] = rep.details;
  j["notes"] = rep.notes;
  return j;
}

// Certified radius of a construction from its own partition.
inline RootInterval construction_radius(const Construction& c) {
  return certified_radius(c.graph, c.partition);
}

inline IntPolynomial construction_charpoly(const Construction& c) {
  return charpoly(quotient_matrix(c.graph, c.partition));
}

// Size and radius claims of the general (not necessarily bipartite) extremal problem.
inline RegimeReport general_regime(std::int64_t n, std::int64_t r) {
  detail::require(r >= 1 && n >= r + 3, "general regime needs r >= 1 and n >= r+3");
  RegimeReport rep;
  rep.claim = "general";
  rep.params = json{{"n", n}, {"r", r}};
  rep.regime = Regime::general;
  rep.hypothesis = "n >= r+13 (size), n >= 2r+15 (radius)";
  rep.hypothesis_ok = n >= r + 13;
  rep.claimed_max = general_extremal_edges(n, r);
  rep.extremal.push_back(general_extremal(n, r));
  rep.claimed_radius = construction_radius(rep.extremal.front());
  rep.details["radius_hypothesis_ok"] = n >= 2 * r + 15;
  return rep;
}

// Case split for bipartite graphs with parts p >= q, no isolated vertex, b < 1/r.
inline RegimeReport lemma6_max(std::int64_t p, std::int64_t q, std::int64_t r) {
  detail::require(q >= 1 && p >= q && r >= 1, "lemma6_max needs p >= q >= 1 and r >= 1");
  RegimeReport rep;
  rep.claim = "lemma6";
  rep.params = json{{"p", p}, {"q", q}, {"r", r}};
  rep.hypothesis = "extremal construction has all parts >= 1";
  rep.hypothesis_ok = true;
  if (p >= r * q + 1) {
    rep.regime = Regime::le6_case_i;
    rep.claimed_max = p * q;
    rep.extremal.push_back(complete_bipartite_construction(p, q));
    return rep;
  }
  std::int64_t p1 = 0, p2 = 0, q1 = 0, q2 = 0;
  if (p >= r * (q - 1) + 2) {
    rep.regime = Regime::le6_case_ii;
    p1 = p - r * (q - 1) - 1, p2 = r * (q - 1) + 1, q1 = q - 1, q2 = 1;
    rep.claimed_max = p * q - r * (q - 1) - 1;
  } else {
    rep.regime = Regime::le6_case_iii;
    p1 = p - r - 1, p2 = r + 1, q1 = 1, q2 = q - 1;
    rep.claimed_max = p * q - (r + 1) * (q - 1);
  }
  if (p1 < 1 || q1 < 1 || q2 < 1) {
    // No bipartite graph of this shape has b < 1/r, so the bound is vacuous.
    rep.hypothesis_ok = false;
    rep.claimed_max.reset();
    rep.notes.push_back("predicted D" + detail::args({p1, p2, q1, q2}) +
                        " has an empty part; the family is empty");
    return rep;
  }
  rep.extremal.push_back(double_nested_construction(make_spec(p1, p2, q1, q2)));
  return rep;
}

inline RegimeReport theorem6_regime(std::int64_t n, std::int64_t r) {
  detail::require(r >= 1 && n >= r + 3, "theorem6_regime needs r >= 1 and n >= r+3");
  RegimeReport rep;
  rep.claim = "thm6";
  rep.params = json{{"n", n}, {"r", r}};
  rep.hypothesis = "n >= r^2+r+1";
  rep.hypothesis_ok = n >= r * r + r + 1;
  const std::int64_t f = f_formula(n, r), g = g_formula(n, r);
  rep.details["f"] = f;
  rep.details["g"] = g;
  auto add_d = [&]() {
    if (n < r + 5) {
      rep.notes.push_back("double nested extremal graphs need n >= r+5");
      return;
    }
    for (auto& c : bipartite_extremal_D(n, r))
      rep.extremal.push_back(std::move(c));
  };
  if (r == 1) {
    rep.regime = Regime::bip_r1;
    rep.claimed_max = f;
    rep.extremal.push_back(bipartite_extremal_K(n, r));
  } else if (f > g) {
    rep.regime = Regime::bip_f_gt_g;
    rep.claimed_max = f;
    rep.extremal.push_back(bipartite_extremal_K(n, r));
  } else if (f < g) {
    rep.regime = Regime::bip_f_lt_g;
    rep.claimed_max = g;
    add_d();
  } else {
    rep.regime = Regime::bip_tie;
    rep.claimed_max = f;
    rep.extremal.push_back(bipartite_extremal_K(n, r));
    add_d();
  }
  return rep;
}

// Radius version: compares rho' = rho(K-variant) and rho'' = rho(first D-variant)
// through a certified comparison of their quotient characteristic polynomials.
inline RegimeReport theorem7_regime(std::int64_t n, std::int64_t r) {
  detail::require(r >= 1 && n >= r + 3, "theorem7_regime needs r >= 1 and n >= r+3");
  RegimeReport rep;
  rep.claim = "thm7";
  rep.params = json{{"n", n}, {"r", r}};
  rep.hypothesis = "n >= r^2+r+2";
  rep.hypothesis_ok = n >= r * r + r + 2;
  Construction k = bipartite_extremal_K(n, r);
  const IntPolynomial pk = construction_charpoly(k);
  const RootInterval rho_k = largest_real_root(pk);
  rep.details["rho_prime"] = interval_json(rho_k);
  if (r == 1) {
    rep.regime = Regime::bip_r1;
    rep.claimed_radius = rho_k;
    rep.extremal.push_back(std::move(k));
    return rep;
  }
  detail::require(n >= r + 5, "theorem7_regime with r >= 2 needs n >= r+5");
  Construction d = std::move(bipartite_extremal_D(n, r).front());
  const IntPolynomial pd = construction_charpoly(d);
  const RootInterval rho_d = largest_real_root(pd);
  rep.details["rho_double_prime"] = interval_json(rho_d);
  const RadiusOrder order = compare_radii(pk, pd);
  rep.details["comparison"] = std::string("rho' ") +
                              (order == RadiusOrder::greater ? ">" : order == RadiusOrder::less ? "<" : "=") +
                              " rho''";
  rep.details["certified"] = true;
  switch (order) {
  case RadiusOrder::greater:
    rep.regime = Regime::bip_f_gt_g;
    rep.claimed_radius = rho_k;
    rep.extremal.push_back(std::move(k));
    break;
  case RadiusOrder::less:
    rep.regime = Regime::bip_f_lt_g;
    rep.claimed_radius = rho_d;
    rep.extremal.push_back(std::move(d));
    break;
  case RadiusOrder::equal:
    rep.regime = Regime::bip_tie;
    rep.claimed_radius = rho_k;
    rep.extremal.push_back(std::move(k));
    rep.extremal.push_back(std::move(d));
    rep.notes.push_back("tie: the second extremal graph is " +
                        rep.extremal.back().label);
    break;
  }
  return rep;
}

} // namespace bindex
