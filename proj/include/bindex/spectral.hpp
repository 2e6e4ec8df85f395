#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "polynomial.hpp"
#include "vertex_set.hpp"

namespace bindex {

inline constexpr double default_power_tolerance = 1e-12;
inline constexpr std::size_t default_power_iterations = 200000;

namespace detail {

// Perron root of one connected component by power iteration on A + I. The
// shift keeps bipartite components from oscillating; the estimate is the
// Rayleigh quotient of A.
inline double component_radius(const std::vector<std::vector<std::size_t>>& adj,
                               const std::vector<std::size_t>& members,
                               const std::vector<std::size_t>& local, double tol,
                               std::size_t max_iter) {
  const std::size_t m = members.size();
  if (m == 1)
    return 0.0;
  std::vector<double> x(m, 1.0 / std::sqrt(static_cast<double>(m))), y(m);
  double estimate = 0.0;
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    double rayleigh = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      double acc = 0.0;
      for (auto w : adj[members[i]])
        acc += x[local[w]];
      rayleigh += x[i] * acc;
      y[i] = acc + x[i];
    }
    double norm = 0.0;
    for (double v : y)
      norm += v * v;
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < m; ++i)
      x[i] = y[i] / norm;
    if (iter > 0 && std::fabs(rayleigh - estimate) < tol)
      return rayleigh;
    estimate = rayleigh;
  }
  throw convergence_error(estimate, "power iteration did not converge within " +
                                        std::to_string(max_iter) + " iterations");
}

} // namespace detail

// Largest adjacency eigenvalue: the maximum Perron root over the components.
inline double spectral_radius_power(const Graph& g, double tol = default_power_tolerance,
                                    std::size_t max_iter = default_power_iterations) {
  if (!(tol > 0))
    throw domain_error("power iteration tolerance must be positive");
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t v = 0; v < n; ++v)
    adj[v] = g.neighbors(v).elements();
  std::vector<std::size_t> local(n);
  double best = 0.0;
  for (const auto& comp : components(g)) {
    const auto members = comp.elements();
    for (std::size_t i = 0; i < members.size(); ++i)
      local[members[i]] = i;
    best = std::max(best, detail::component_radius(adj, members, local, tol, max_iter));
  }
  return best;
}

inline constexpr std::size_t max_quotient_blocks = 8;

// b(i, j) = number of neighbors in block j of any vertex of block i.
class QuotientMatrix {
public:
  QuotientMatrix() = default;

  explicit QuotientMatrix(std::vector<std::vector<std::int64_t>> rows) : rows_(std::move(rows)) {
    if (rows_.empty() || rows_.size() > max_quotient_blocks)
      throw domain_error("quotient matrix needs 1..8 blocks");
    for (const auto& row : rows_)
      if (row.size() != rows_.size())
        throw domain_error("quotient matrix must be square");
  }

  std::size_t size() const noexcept { return rows_.size(); }
  std::int64_t at(std::size_t i, std::size_t j) const { return rows_.at(i).at(j); }
  const std::vector<std::vector<std::int64_t>>& rows() const noexcept { return rows_; }

  friend bool operator==(const QuotientMatrix&, const QuotientMatrix&) = default;

private:
  std::vector<std::vector<std::int64_t>> rows_;
};

// Quotient of g by an equitable partition; every vertex is checked.
inline QuotientMatrix quotient_matrix(const Graph& g, const std::vector<VertexSet>& partition) {
  const std::size_t n = g.order();
  const std::size_t k = partition.size();
  if (k == 0 || k > max_quotient_blocks)
    throw domain_error("partition must have 1..8 blocks, got " + std::to_string(k));
  VertexSet covered(n);
  for (const auto& block : partition) {
    if (block.universe() != n)
      throw domain_error("partition block not bound to this graph");
    if (block.empty())
      throw domain_error("partition blocks must be nonempty");
    if (block.intersects(covered))
      throw domain_error("partition blocks overlap");
    covered |= block;
  }
  if (!covered.is_full())
    throw domain_error("partition does not cover every vertex");

  std::vector<std::vector<std::int64_t>> rows(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t rep = *partition[i].first();
    for (std::size_t j = 0; j < k; ++j)
      rows[i][j] = static_cast<std::int64_t>((g.neighbors(rep) & partition[j]).count());
    partition[i].for_each([&](std::size_t v) {
      for (std::size_t j = 0; j < k; ++j) {
        const auto c = static_cast<std::int64_t>((g.neighbors(v) & partition[j]).count());
        if (c != rows[i][j])
          throw equitability_error(v, i, j,
                                   "vertex " + std::to_string(v) + " of block " + std::to_string(i) +
                                       " has " + std::to_string(c) + " neighbors in block " +
                                       std::to_string(j) + ", expected " +
                                       std::to_string(rows[i][j]));
      }
    });
  }
  return QuotientMatrix(std::move(rows));
}

// det(xI - M) by Faddeev-LeVerrier over big integers; the divisions are exact.
inline IntPolynomial charpoly(const QuotientMatrix& m) {
  const std::size_t k = m.size();
  using Matrix = std::vector<std::vector<BigInt>>;
  Matrix a(k, std::vector<BigInt>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      a[i][j] = m.at(i, j);
  std::vector<BigInt> coeff(k + 1); // coeff[d] multiplies x^d
  coeff[k] = 1;
  Matrix mk(k, std::vector<BigInt>(k, 0));
  for (std::size_t step = 1; step <= k; ++step) {
    // mk <- a * mk + coeff[k - step + 1] * I
    Matrix next(k, std::vector<BigInt>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l)
        for (std::size_t j = 0; j < k; ++j)
          next[i][j] += a[i][l] * mk[l][j];
    for (std::size_t i = 0; i < k; ++i)
      next[i][i] += coeff[k - step + 1];
    mk = std::move(next);
    BigInt trace = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l)
        trace += a[i][l] * mk[l][i];
    coeff[k - step] = -trace / static_cast<long long>(step);
  }
  return to_int_polynomial(coeff);
}

struct SqrtEdgeCheck {
  double rho = 0;
  double sqrt_edges = 0;
  bool bound_holds = false;
  bool equality = false;
  bool equality_checked = false;   // only connected inputs with an edge
  bool equality_consistent = true; // equality iff complete bipartite
};

inline constexpr double sqrt_edge_slack = 1e-9;

inline SqrtEdgeCheck rho_vs_sqrt_edges(const Graph& g) {
  if (!is_bipartite(g))
    throw domain_error("rho <= sqrt(e) check needs a bipartite graph");
  SqrtEdgeCheck out;
  out.rho = spectral_radius_power(g);
  out.sqrt_edges = std::sqrt(static_cast<double>(g.edge_count()));
  out.bound_holds = out.rho <= out.sqrt_edges + sqrt_edge_slack;
  out.equality = std::fabs(out.rho - out.sqrt_edges) <= sqrt_edge_slack;
  if (g.edge_count() > 0 && is_connected(g)) {
    out.equality_checked = true;
    out.equality_consistent = out.equality == is_complete_bipartite(g);
  }
  return out;
}

inline bool check_rho_le_sqrt_e(const Graph& g) {
  const auto c = rho_vs_sqrt_edges(g);
  return c.bound_holds && c.equality_consistent;
}

// Certified radius of a graph from an equitable partition.
inline RootInterval certified_radius(const Graph& g, const std::vector<VertexSet>& partition) {
  return largest_real_root(charpoly(quotient_matrix(g, partition)));
}

} // namespace bindex
