#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vertex_set.hpp"

namespace bindex {

inline constexpr std::size_t max_vertices = 4096;

inline void check_order(std::size_t n) {
  if (n < 1 || n > max_vertices)
    throw size_error("graph order " + std::to_string(n) + " outside [1, " +
                     std::to_string(max_vertices) + "]");
}

// Undirected simple graph on vertices 0..n-1 with one neighbor bitset per vertex.
// add_edge keeps the rows symmetric and rejects loops.
class Graph {
public:
  explicit Graph(std::size_t n) {
    check_order(n);
    adj_.assign(n, VertexSet(n));
  }

  std::size_t order() const noexcept { return adj_.size(); }

  std::size_t edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto& row : adj_)
      twice += row.count();
    return twice / 2;
  }

  void add_edge(std::size_t u, std::size_t v) {
    if (u == v)
      throw domain_error("loops are not allowed (vertex " + std::to_string(u) + ")");
    adj_.at(u).set(v);
    adj_.at(v).set(u);
  }

  void remove_edge(std::size_t u, std::size_t v) {
    adj_.at(u).reset(v);
    adj_.at(v).reset(u);
  }

  bool adjacent(std::size_t u, std::size_t v) const { return adj_.at(u).test(v); }

  const VertexSet& neighbors(std::size_t v) const { return adj_.at(v); }

  std::size_t degree(std::size_t v) const { return adj_.at(v).count(); }

  // Edges (u, v) with u < v, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < order(); ++u)
      adj_[u].for_each([&](std::size_t v) {
        if (u < v)
          out.emplace_back(u, v);
      });
    return out;
  }

  VertexSet all_vertices() const { return VertexSet::full(order()); }

  VertexSet empty_set() const { return VertexSet(order()); }

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::vector<VertexSet> adj_;
};

// Union of the open neighborhoods of the members of s.
inline VertexSet neighborhood_of_set(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw domain_error("vertex set not bound to this graph");
  VertexSet out(g.order());
  s.for_each([&](std::size_t v) { out |= g.neighbors(v); });
  return out;
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw domain_error("vertex set not bound to this graph");
  bool independent = true;
  s.for_each([&](std::size_t v) {
    if (independent && g.neighbors(v).intersects(s))
      independent = false;
  });
  return independent;
}

inline Graph empty_graph(std::size_t n) { return Graph(n); }

inline Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      g.add_edge(u, v);
  return g;
}

inline Graph complete_bipartite(std::size_t p, std::size_t q) {
  if (p < 1 || q < 1)
    throw domain_error("complete_bipartite needs p, q >= 1");
  check_order(p + q);
  Graph g(p + q);
  for (std::size_t u = 0; u < p; ++u)
    for (std::size_t v = 0; v < q; ++v)
      g.add_edge(u, p + v);
  return g;
}

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 0; v + 1 < n; ++v)
    g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3)
    throw domain_error("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

// g2's vertices are shifted by g1.order().
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.order();
  if (n1 + g2.order() > max_vertices)
    throw size_error("disjoint union exceeds vertex cap");
  Graph g(n1 + g2.order());
  for (auto [u, v] : g1.edges())
    g.add_edge(u, v);
  for (auto [u, v] : g2.edges())
    g.add_edge(n1 + u, n1 + v);
  return g;
}

inline Graph join(const Graph& g1, const Graph& g2) {
  Graph g = disjoint_union(g1, g2);
  const std::size_t n1 = g1.order();
  for (std::size_t u = 0; u < n1; ++u)
    for (std::size_t v = 0; v < g2.order(); ++v)
      g.add_edge(u, n1 + v);
  return g;
}

// Connected components ordered by least vertex.
inline std::vector<VertexSet> components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> out;
  VertexSet unseen = g.all_vertices();
  while (auto start = unseen.first()) {
    VertexSet comp(n);
    VertexSet frontier(n);
    frontier.set(*start);
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next = neighborhood_of_set(g, frontier);
      next -= comp;
      frontier = std::move(next);
    }
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() == 1; }

inline bool has_isolated_vertex(const Graph& g) {
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0)
      return true;
  return false;
}

inline bool is_complete(const Graph& g) {
  return g.edge_count() == g.order() * (g.order() - 1) / 2;
}

// One side of a proper 2-coloring (component roots colored 0), or nullopt.
inline std::optional<VertexSet> bipartition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> color(n, -1);
  std::vector<std::size_t> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != -1)
      continue;
    color[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      bool clash = false;
      g.neighbors(u).for_each([&](std::size_t v) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          clash = true;
        }
      });
      if (clash)
        return std::nullopt;
    }
  }
  VertexSet side(n);
  for (std::size_t v = 0; v < n; ++v)
    if (color[v] == 0)
      side.set(v);
  return side;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

inline bool is_complete_bipartite(const Graph& g) {
  if (!is_connected(g) || g.order() < 2)
    return false;
  const auto side = bipartition(g);
  if (!side)
    return false;
  const std::size_t p = side->count();
  return g.edge_count() == p * (g.order() - p);
}

// Parts of a double nested graph D(p_1..p_h; q_1..q_h).
struct BipartitionSpec {
  std::vector<std::size_t> p_parts;
  std::vector<std::size_t> q_parts;

  std::size_t blocks() const noexcept { return p_parts.size(); }

  std::size_t order() const noexcept {
    std::size_t n = 0;
    for (auto p : p_parts)
      n += p;
    for (auto q : q_parts)
      n += q;
    return n;
  }

  void validate() const {
    if (p_parts.empty() || p_parts.size() != q_parts.size())
      throw domain_error("double nested spec needs h >= 1 blocks on each side");
    for (auto p : p_parts)
      if (p < 1)
        throw domain_error("double nested spec parts must be >= 1");
    for (auto q : q_parts)
      if (q < 1)
        throw domain_error("double nested spec parts must be >= 1");
  }

  // Closed form: X-block i reaches Y-blocks 1..h+1-i.
  std::size_t edge_count() const {
    std::size_t e = 0;
    const std::size_t h = blocks();
    for (std::size_t i = 0; i < h; ++i) {
      std::size_t reach = 0;
      for (std::size_t j = 0; j < h - i; ++j)
        reach += q_parts[j];
      e += p_parts[i] * reach;
    }
    return e;
  }

  // The same graph read from the Y side: D(q_1..q_h; p_1..p_h).
  BipartitionSpec swapped() const { return {q_parts, p_parts}; }

  std::string label() const {
    std::string s = "D(";
    for (std::size_t i = 0; i < p_parts.size(); ++i)
      s += (i ? "," : "") + std::to_string(p_parts[i]);
    s += ";";
    for (std::size_t i = 0; i < q_parts.size(); ++i)
      s += (i ? "," : "") + std::to_string(q_parts[i]);
    return s + ")";
  }

  friend bool operator==(const BipartitionSpec&, const BipartitionSpec&) = default;
};

// X-blocks X_1..X_h are labeled first, then Y_1..Y_h, each in declaration order.
inline Graph double_nested(const BipartitionSpec& spec) {
  spec.validate();
  check_order(spec.order());
  const std::size_t h = spec.blocks();
  std::vector<std::size_t> x_start(h), y_start(h);
  std::size_t next = 0;
  for (std::size_t i = 0; i < h; ++i) {
    x_start[i] = next;
    next += spec.p_parts[i];
  }
  for (std::size_t j = 0; j < h; ++j) {
    y_start[j] = next;
    next += spec.q_parts[j];
  }
  Graph g(next);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h - i; ++j)
      for (std::size_t a = 0; a < spec.p_parts[i]; ++a)
        for (std::size_t b = 0; b < spec.q_parts[j]; ++b)
          g.add_edge(x_start[i] + a, y_start[j] + b);
  return g;
}

// Recovers the canonical spec when g is a double nested graph with X-side x_side
// (no isolated vertices, X neighborhoods form a chain, every edge crosses sides).
inline std::optional<BipartitionSpec> double_nested_shape(const Graph& g, const VertexSet& x_side) {
  const std::size_t n = g.order();
  const VertexSet y_side = x_side.complement();
  if (x_side.empty() || y_side.empty() || has_isolated_vertex(g))
    return std::nullopt;
  for (std::size_t v = 0; v < n; ++v) {
    const VertexSet& own_side = x_side.test(v) ? x_side : y_side;
    if (g.neighbors(v).intersects(own_side))
      return std::nullopt;
  }
  const auto xs = x_side.elements();
  std::vector<std::size_t> order(xs.begin(), xs.end());
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    if (!g.neighbors(order[i + 1]).is_subset_of(g.neighbors(order[i])))
      return std::nullopt;

  // Distinct X degrees d_1 > ... > d_h; block i has the vertices of degree d_i.
  std::vector<std::size_t> degrees, counts;
  for (auto v : order) {
    const std::size_t d = g.degree(v);
    if (degrees.empty() || degrees.back() != d) {
      degrees.push_back(d);
      counts.push_back(0);
    }
    ++counts.back();
  }
  if (degrees.front() != y_side.count())
    return std::nullopt;
  const std::size_t h = degrees.size();
  BipartitionSpec spec;
  spec.p_parts = counts;
  spec.q_parts.resize(h);
  // Y_j is reached by X_1..X_{h+1-j}: |Y_j| = d_{h+1-j} - d_{h+2-j}.
  for (std::size_t j = 0; j < h; ++j) {
    const std::size_t hi = degrees[h - 1 - j];
    const std::size_t lo = (j == 0) ? 0 : degrees[h - j];
    spec.q_parts[j] = hi - lo;
  }
  return spec;
}

// Vertex blocks in the labeling order double_nested() uses.
inline std::vector<VertexSet> double_nested_blocks(const BipartitionSpec& spec) {
  const std::size_t n = spec.order();
  std::vector<VertexSet> blocks;
  std::size_t next = 0;
  auto add = [&](std::size_t size) {
    VertexSet b(n);
    for (std::size_t k = 0; k < size; ++k)
      b.set(next++);
    blocks.push_back(std::move(b));
  };
  for (auto p : spec.p_parts)
    add(p);
  for (auto q : spec.q_parts)
    add(q);
  return blocks;
}

} // namespace bindex
