#pragma once

// Slow reference implementations that share no code with the library beyond
// Graph::adjacent.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <bindex/graph.hpp>
#include <bindex/rational.hpp>

namespace oracle {

using bindex::Graph;
using bindex::Rational;
using Matrix = std::vector<std::vector<bool>>;

inline Matrix adjacency(const Graph& g) {
  const std::size_t n = g.order();
  Matrix a(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      a[u][v] = g.adjacent(u, v);
  return a;
}

inline std::vector<std::size_t> members(std::uint64_t s, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v)
    if ((s >> v) & 1u)
      out.push_back(v);
  return out;
}

inline std::size_t neighborhood_size(const Matrix& a, std::uint64_t s) {
  const std::size_t n = a.size();
  std::size_t count = 0;
  for (std::size_t w = 0; w < n; ++w) {
    bool hit = false;
    for (std::size_t v = 0; v < n && !hit; ++v)
      hit = ((s >> v) & 1u) && a[v][w];
    count += hit;
  }
  return count;
}

struct Ratio {
  std::size_t num, den;
  bool operator<(const Ratio& o) const { return num * o.den < o.num * den; }
  bool operator==(const Ratio& o) const { return num * o.den == o.num * den; }
};

// min |N(S)|/|S| over nonempty S with N(S) != V, together with every minimizer.
inline std::pair<Rational, std::vector<std::uint64_t>> binding(const Graph& g) {
  const Matrix a = adjacency(g);
  const std::size_t n = a.size();
  bool have = false;
  Ratio best{0, 1};
  std::vector<std::uint64_t> sets;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const std::size_t nb = neighborhood_size(a, s);
    if (nb == n)
      continue;
    const Ratio r{nb, members(s, n).size()};
    if (!have || r < best) {
      have = true;
      best = r;
      sets.clear();
    }
    if (r == best)
      sets.push_back(s);
  }
  return {Rational(static_cast<std::int64_t>(best.num), static_cast<std::int64_t>(best.den)), sets};
}

inline std::size_t components_without(const Matrix& a, std::uint64_t removed) {
  const std::size_t n = a.size();
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s] || ((removed >> s) & 1u))
      continue;
    ++count;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w)
        if (a[v][w] && !seen[w] && !((removed >> w) & 1u)) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
  }
  return count;
}

// min |S|/c(G-S) over cut sets S; 0 when G is disconnected.
inline Rational toughness(const Graph& g) {
  const Matrix a = adjacency(g);
  const std::size_t n = a.size();
  if (components_without(a, 0) > 1)
    return Rational(0);
  bool have = false;
  Ratio best{0, 1};
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const std::size_t c = components_without(a, s);
    if (c < 2)
      continue;
    const Ratio r{members(s, n).size(), c};
    if (!have || r < best) {
      have = true;
      best = r;
    }
  }
  return Rational(static_cast<std::int64_t>(best.num), static_cast<std::int64_t>(best.den));
}

inline std::size_t edge_count(const Graph& g) {
  std::size_t e = 0;
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      e += g.adjacent(u, v);
  return e;
}

// X-block i joined to Y-blocks 0..h-1-i, blocks laid out X first.
inline Graph double_nested(const std::vector<std::size_t>& ps, const std::vector<std::size_t>& qs) {
  std::size_t nx = 0, ny = 0;
  for (auto p : ps)
    nx += p;
  for (auto q : qs)
    ny += q;
  Graph g(nx + ny);
  const std::size_t h = ps.size();
  std::size_t x0 = 0;
  for (std::size_t i = 0; i < h; ++i) {
    std::size_t y0 = nx;
    for (std::size_t j = 0; j + i < h; ++j) {
      for (std::size_t x = x0; x < x0 + ps[i]; ++x)
        for (std::size_t y = y0; y < y0 + qs[j]; ++y)
          g.add_edge(x, y);
      y0 += qs[j];
    }
    x0 += ps[i];
  }
  return g;
}

inline Graph random_graph(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng))
        g.add_edge(u, v);
  return g;
}

// Random bipartite graph on X = {0..p-1}, Y = {p..p+q-1}.
inline Graph random_bipartite(std::size_t p, std::size_t q, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  Graph g(p + q);
  for (std::size_t x = 0; x < p; ++x)
    for (std::size_t y = 0; y < q; ++y)
      if (coin(rng))
        g.add_edge(x, p + y);
  return g;
}

using Dec = boost::multiprecision::cpp_dec_float_100;
using DecMatrix = std::vector<std::vector<Dec>>;

// det(xI - m) by Gaussian elimination with partial pivoting.
inline Dec char_value(const DecMatrix& m, const Dec& x) {
  const std::size_t k = m.size();
  DecMatrix a(k, std::vector<Dec>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      a[i][j] = (i == j ? x : Dec(0)) - m[i][j];
  Dec det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    for (std::size_t i = c + 1; i < k; ++i)
      if (abs(a[i][c]) > abs(a[piv][c]))
        piv = i;
    if (a[piv][c] == 0)
      return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < k; ++i) {
      const Dec f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < k; ++j)
        a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

// Perron root of a nonnegative irreducible matrix to ~90 digits: power
// iteration on m + I for a bracket, then bisection on det(xI - m).
inline Dec perron_root(const DecMatrix& m) {
  const std::size_t k = m.size();
  std::vector<Dec> x(k, Dec(1)), y(k);
  Dec est = 0;
  for (int it = 0; it < 4000; ++it) {
    Dec norm = 0;
    for (std::size_t i = 0; i < k; ++i) {
      y[i] = x[i];
      for (std::size_t j = 0; j < k; ++j)
        y[i] += m[i][j] * x[j];
      norm += y[i] * y[i];
    }
    norm = sqrt(norm);
    Dec xn = 0;
    for (std::size_t i = 0; i < k; ++i)
      xn += x[i] * x[i];
    est = norm / sqrt(xn) - 1;
    for (std::size_t i = 0; i < k; ++i)
      x[i] = y[i] / norm;
  }
  Dec lo = est - Dec("1e-30"), hi = est + Dec("1e-30");
  const Dec flo = char_value(m, lo);
  if (flo > 0 || char_value(m, hi) < 0)
    throw std::runtime_error("oracle bracket has no sign change");
  for (int it = 0; it < 240; ++it) {
    const Dec mid = (lo + hi) / 2;
    if (char_value(m, mid) < 0)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

// Block matrix counted from the graph: entry (i, j) is the number of
// neighbors in block j of the first vertex of block i.
inline DecMatrix block_counts(const Graph& g, const std::vector<std::vector<std::size_t>>& blocks) {
  DecMatrix m(blocks.size(), std::vector<Dec>(blocks.size(), Dec(0)));
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      int c = 0;
      for (auto w : blocks[j])
        c += g.adjacent(blocks[i].front(), w);
      m[i][j] = c;
    }
  return m;
}

// Radius of a double nested graph from its blocks.
inline Dec double_nested_radius(const std::vector<std::size_t>& ps, const std::vector<std::size_t>& qs) {
  const Graph g = double_nested(ps, qs);
  std::vector<std::vector<std::size_t>> blocks;
  std::size_t v = 0;
  for (auto sizes : {ps, qs})
    for (auto s : sizes) {
      std::vector<std::size_t> b;
      for (std::size_t i = 0; i < s; ++i)
        b.push_back(v++);
      blocks.push_back(b);
    }
  return perron_root(block_counts(g, blocks));
}

} // namespace oracle
