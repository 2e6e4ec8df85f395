#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "maxflow.hpp"
#include "rational.hpp"
#include "vertex_set.hpp"

namespace bindex {

inline constexpr std::size_t brute_force_limit = 24;
inline constexpr std::size_t binding_sets_limit = 20;
inline constexpr std::size_t toughness_limit = 16;

// Graph on at most 24 vertices with 32-bit rows. N(S) is answered by OR-ing one
// lookup-table entry per chunk of at most 8 vertices.
class MaskGraph {
public:
  static constexpr std::size_t max_order = brute_force_limit;

  MaskGraph() = default;

  explicit MaskGraph(const Graph& g) {
    if (g.order() > max_order)
      throw limit_error("mask kernel supports at most 24 vertices");
    std::array<std::uint32_t, max_order> rows{};
    for (std::size_t v = 0; v < g.order(); ++v)
      rows[v] = static_cast<std::uint32_t>(*g.neighbors(v).to_mask());
    assign(std::span<const std::uint32_t>(rows.data(), g.order()));
  }

  // rows[v] is the neighbor mask of v; symmetry is the caller's responsibility.
  void assign(std::span<const std::uint32_t> rows) {
    n_ = rows.size();
    full_ = n_ == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n_) - 1;
    std::copy(rows.begin(), rows.end(), rows_.begin());
    chunks_ = (n_ + 7) / 8;
    if (chunks_ == 0)
      chunks_ = 1;
    chunk_bits_ = (n_ + chunks_ - 1) / chunks_;
    chunk_mask_ = (std::uint32_t{1} << chunk_bits_) - 1;
    for (std::size_t c = 0; c < chunks_; ++c) {
      const std::size_t base = c * chunk_bits_;
      const std::size_t width = std::min(chunk_bits_, n_ > base ? n_ - base : 0);
      auto& table = tables_[c];
      table[0] = 0;
      for (std::uint32_t m = 1; m < (std::uint32_t{1} << width); ++m)
        table[m] = table[m & (m - 1)] | rows_[base + static_cast<std::size_t>(std::countr_zero(m))];
    }
  }

  std::size_t order() const noexcept { return n_; }
  std::uint32_t full() const noexcept { return full_; }
  std::uint32_t row(std::size_t v) const noexcept { return rows_[v]; }

  std::uint32_t neighborhood(std::uint32_t s) const noexcept {
    std::uint32_t out = tables_[0][s & chunk_mask_];
    if (chunks_ > 1)
      out |= tables_[1][(s >> chunk_bits_) & chunk_mask_];
    if (chunks_ > 2)
      out |= tables_[2][(s >> (2 * chunk_bits_)) & chunk_mask_];
    return out;
  }

private:
  std::size_t n_ = 0;
  std::uint32_t full_ = 0;
  std::size_t chunks_ = 1;
  std::size_t chunk_bits_ = 0;
  std::uint32_t chunk_mask_ = 0;
  std::array<std::uint32_t, max_order> rows_{};
  std::array<std::array<std::uint32_t, 256>, 3> tables_{};
};

namespace detail {

inline int popcount(std::uint32_t x) noexcept { return std::popcount(x); }

// Same-size masks: the one holding the lowest differing vertex is lex-smaller.
inline bool same_size_lex_less(std::uint32_t a, std::uint32_t b) noexcept {
  const std::uint32_t diff = a ^ b;
  return diff != 0 && (a & diff & (~diff + 1)) != 0;
}

} // namespace detail

struct MaskRatio {
  std::uint32_t neighbors = 0; // |N(S)|
  std::uint32_t size = 0;      // |S|
  std::uint32_t witness = 0;
};

// Exact min |N(S)|/|S| over nonempty S with N(S) != V. Ties go to the smallest
// |S|, then the lex-least member list.
inline MaskRatio min_ratio_bruteforce(const MaskGraph& mg) {
  MaskRatio best{1, 0, 0};
  for (std::size_t v = 0; v < mg.order(); ++v)
    if (mg.row(v) == 0)
      return {0, 1, std::uint32_t{1} << v};
  for (std::uint32_t s = 1; s <= mg.full(); ++s) {
    const std::uint32_t ns = mg.neighborhood(s);
    if (ns == mg.full())
      continue;
    const auto nc = static_cast<std::uint32_t>(detail::popcount(ns));
    const auto sc = static_cast<std::uint32_t>(detail::popcount(s));
    if (best.size == 0) {
      best = {nc, sc, s};
      continue;
    }
    const std::uint64_t lhs = std::uint64_t{nc} * best.size;
    const std::uint64_t rhs = std::uint64_t{best.neighbors} * sc;
    if (lhs < rhs || (lhs == rhs && (sc < best.size || (sc == best.size &&
                                                         detail::same_size_lex_less(s, best.witness)))))
      best = {nc, sc, s};
  }
  return best;
}

// Some S with below_den*|N(S)| < below_num*|S| and N(S) != V, or nullopt.
// Only neighborhoods T = N(S) with below_den*|T| < below_num*n can qualify, and
// for each such T the largest candidate is S_T = {v : N(v) within T}.
inline std::optional<std::uint32_t> ratio_below_mask(const MaskGraph& mg, std::uint64_t below_num,
                                                     std::uint64_t below_den) {
  const std::size_t n = mg.order();
  if (n == 0 || below_num == 0)
    return std::nullopt;
  const std::uint64_t bound = (below_num * n - 1) / below_den;
  const std::size_t kmax = static_cast<std::size_t>(std::min<std::uint64_t>(n - 1, bound));
  const std::uint32_t full = mg.full();
  auto check = [&](std::uint32_t t) -> std::optional<std::uint32_t> {
    const std::uint32_t s = full & ~mg.neighborhood(full & ~t);
    if (s == 0)
      return std::nullopt;
    const std::uint32_t ns = mg.neighborhood(s);
    if (below_den * static_cast<std::uint64_t>(detail::popcount(ns)) <
        below_num * static_cast<std::uint64_t>(detail::popcount(s)))
      return s;
    return std::nullopt;
  };
  if (auto hit = check(0))
    return hit;
  for (std::size_t k = 1; k <= kmax; ++k) {
    std::uint64_t t = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (t < limit) {
      if (auto hit = check(static_cast<std::uint32_t>(t)))
        return hit;
      const std::uint64_t low = t & (~t + 1);
      const std::uint64_t ripple = t + low;
      t = (((ripple ^ t) >> 2) / low) | ripple;
    }
  }
  return std::nullopt;
}

enum class BindingMethod { brute, flow };

inline const char* to_string(BindingMethod m) { return m == BindingMethod::brute ? "brute" : "flow"; }

struct BindingResult {
  Rational value;
  VertexSet witness;
  BindingMethod method = BindingMethod::brute;
};

inline Rational neighborhood_ratio(const Graph& g, const VertexSet& s) {
  return Rational(static_cast<std::int64_t>(neighborhood_of_set(g, s).count()),
                  static_cast<std::int64_t>(s.count()));
}

// Checks a witness against the value it is reported with.
inline BindingResult make_binding_result(const Graph& g, Rational value, VertexSet witness,
                                         BindingMethod method) {
  if (witness.empty() || neighborhood_of_set(g, witness).is_full() ||
      neighborhood_ratio(g, witness) != value)
    throw error("binding witness " + witness.to_string() + " does not reproduce " +
                value.to_string());
  return {value, std::move(witness), method};
}

inline BindingResult binding_number_bruteforce(const Graph& g) {
  if (g.order() > brute_force_limit)
    throw limit_error("brute-force binding number needs n <= 24, got " +
                      std::to_string(g.order()));
  const MaskGraph mg(g);
  const MaskRatio best = min_ratio_bruteforce(mg);
  return make_binding_result(g, Rational(best.neighbors, best.size),
                             VertexSet::from_mask(g.order(), best.witness), BindingMethod::brute);
}

struct ThresholdDecision {
  bool below = false;
  std::optional<VertexSet> witness;
};

namespace detail {

// Better witness: smaller ratio, then smaller |S|, then lex-least.
inline bool better_witness(const Graph& g, const VertexSet& a, const VertexSet& b) {
  const Rational ra = neighborhood_ratio(g, a), rb = neighborhood_ratio(g, b);
  if (ra != rb)
    return ra < rb;
  if (a.count() != b.count())
    return a.count() < b.count();
  return lex_less(a, b);
}

} // namespace detail

// Decides whether some nonempty S with N(S) != V has |N(S)|/|S| < t.
// For each excluded vertex u, S ranges over V minus N(u) (exactly the sets with
// u outside N(S)) and a min cut answers max a|S| - c|N(S)| for t = a/c.
inline ThresholdDecision binding_below_threshold(const Graph& g, Rational t) {
  if (t <= Rational(0))
    throw domain_error("threshold must be positive, got " + t.to_string());
  const std::size_t n = g.order();
  const auto a = static_cast<FlowNetwork::capacity_t>(t.num());
  const auto c = static_cast<FlowNetwork::capacity_t>(t.den());
  const FlowNetwork::capacity_t infinite =
      a * static_cast<FlowNetwork::capacity_t>(n) + c * static_cast<FlowNetwork::capacity_t>(n) + 1;

  std::set<std::vector<std::uint64_t>> seen;
  ThresholdDecision decision;
  for (std::size_t u = 0; u < n; ++u) {
    const VertexSet allowed = g.neighbors(u).complement();
    if (!seen.insert(allowed.words()).second)
      continue;
    // Nodes: 0 source, 1 sink, 2 + v left copy, 2 + n + w right copy.
    FlowNetwork net(2 + 2 * n);
    VertexSet reached(n);
    allowed.for_each([&](std::size_t v) {
      net.add_arc(0, 2 + v, a);
      g.neighbors(v).for_each([&](std::size_t w) { net.add_arc(2 + v, 2 + n + w, infinite); });
      reached |= g.neighbors(v);
    });
    reached.for_each([&](std::size_t w) { net.add_arc(2 + n + w, 1, c); });
    const auto cut = net.max_flow(0, 1);
    if (cut >= a * static_cast<FlowNetwork::capacity_t>(allowed.count()))
      continue;
    const auto side = net.source_side(0);
    VertexSet s(n);
    allowed.for_each([&](std::size_t v) {
      if (side[2 + v])
        s.set(v);
    });
    if (s.empty() || neighborhood_of_set(g, s).test(u) || !(neighborhood_ratio(g, s) < t))
      throw error("min-cut witness failed verification");
    if (!decision.witness || detail::better_witness(g, s, *decision.witness))
      decision.witness = std::move(s);
    decision.below = true;
  }
  return decision;
}

// Dinkelbach iteration from the best singleton ratio down to the exact minimum.
inline BindingResult binding_number_flow(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best_vertex = 0;
  for (std::size_t v = 1; v < n; ++v)
    if (g.degree(v) < g.degree(best_vertex))
      best_vertex = v;
  VertexSet witness(n);
  witness.set(best_vertex);
  Rational value(static_cast<std::int64_t>(g.degree(best_vertex)));
  if (value == Rational(0))
    return make_binding_result(g, value, std::move(witness), BindingMethod::flow);
  for (std::size_t iter = 0; iter <= n * n + 1; ++iter) {
    auto decision = binding_below_threshold(g, value);
    if (!decision.below)
      return make_binding_result(g, value, std::move(witness), BindingMethod::flow);
    witness = std::move(*decision.witness);
    value = neighborhood_ratio(g, witness);
  }
  throw error("Dinkelbach iteration failed to terminate");
}

// Exact b(G) through whichever route fits the order.
inline BindingResult binding_number(const Graph& g) {
  return g.order() <= 16 ? binding_number_bruteforce(g) : binding_number_flow(g);
}

// True iff b(G) < t, exactly.
inline bool binding_below(const Graph& g, Rational t) {
  if (g.order() <= 16) {
    const MaskGraph mg(g);
    return ratio_below_mask(mg, static_cast<std::uint64_t>(t.num()),
                            static_cast<std::uint64_t>(t.den()))
        .has_value();
  }
  return binding_below_threshold(g, t).below;
}

// All binding sets in lexicographic order.
inline std::vector<VertexSet> binding_sets_all(const Graph& g) {
  if (g.order() > binding_sets_limit)
    throw limit_error("binding_sets_all needs n <= 20, got " + std::to_string(g.order()));
  const MaskGraph mg(g);
  const MaskRatio best = min_ratio_bruteforce(mg);
  std::vector<VertexSet> out;
  for (std::uint32_t s = 1; s <= mg.full(); ++s) {
    const std::uint32_t ns = mg.neighborhood(s);
    if (ns == mg.full())
      continue;
    if (std::uint64_t(detail::popcount(ns)) * best.size ==
        std::uint64_t(best.neighbors) * std::uint64_t(detail::popcount(s)))
      out.push_back(VertexSet::from_mask(g.order(), s));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return lex_less(a, b); });
  return out;
}

namespace detail {

inline int count_components(const MaskGraph& mg, std::uint32_t alive) {
  int count = 0;
  while (alive != 0) {
    std::uint32_t comp = alive & (~alive + 1);
    std::uint32_t frontier = comp;
    while (frontier != 0) {
      const std::uint32_t grown = (mg.neighborhood(frontier) & alive) & ~comp;
      comp |= grown;
      frontier = grown;
    }
    alive &= ~comp;
    ++count;
  }
  return count;
}

} // namespace detail

// min |S| / c(G - S) over vertex sets S leaving at least two components.
inline Rational toughness_bruteforce(const Graph& g) {
  if (is_complete(g))
    throw domain_error("toughness is undefined for complete graphs");
  if (g.order() > toughness_limit)
    throw limit_error("toughness_bruteforce needs n <= 16, got " + std::to_string(g.order()));
  const MaskGraph mg(g);
  if (detail::count_components(mg, mg.full()) >= 2)
    return Rational(0);
  std::optional<Rational> best;
  for (std::uint32_t s = 1; s < mg.full(); ++s) {
    const int c = detail::count_components(mg, mg.full() & ~s);
    if (c < 2)
      continue;
    const Rational ratio(detail::popcount(s), c);
    if (!best || ratio < *best)
      best = ratio;
  }
  if (!best)
    throw error("no vertex cut found in a non-complete graph");
  return *best;
}

} // namespace bindex
