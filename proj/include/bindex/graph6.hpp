#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "graph.hpp"

namespace bindex {

// graph6: N(n) followed by the upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ...
// packed big-endian into 6-bit groups, each group offset by 63.
inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  unsigned group = 0;
  int filled = 0;
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u) {
      group = (group << 1) | (g.adjacent(u, v) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view text) {
  // Trailing newline is tolerated; anything else outside 63..126 is rejected.
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty())
    throw parse_error(0, "empty graph6 string");
  auto value_at = [&](std::size_t i) -> unsigned {
    if (i >= text.size())
      throw parse_error(i, "graph6 string truncated");
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw parse_error(i, "invalid graph6 byte " + std::to_string(c));
    return c - 63u;
  };
  std::size_t n = 0;
  std::size_t pos = 0;
  if (static_cast<unsigned char>(text[0]) == 126) {
    if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126)
      throw parse_error(1, "graph6 8-byte order prefix exceeds vertex cap");
    n = (value_at(1) << 12) | (value_at(2) << 6) | value_at(3);
    pos = 4;
  } else {
    n = value_at(0);
    pos = 1;
  }
  if (n < 1 || n > max_vertices)
    throw parse_error(0, "graph6 order " + std::to_string(n) + " unsupported");
  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t expected = pos + (bits + 5) / 6;
  if (text.size() != expected)
    throw parse_error(std::min(text.size(), expected),
                      "graph6 length " + std::to_string(text.size()) + ", expected " +
                          std::to_string(expected));
  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u, ++bit) {
      const unsigned group = value_at(pos + bit / 6);
      if ((group >> (5 - bit % 6)) & 1u)
        g.add_edge(u, v);
    }
  }
  if (bits % 6 != 0) {
    const unsigned last = value_at(expected - 1);
    if ((last & ((1u << (6 - bits % 6)) - 1)) != 0)
      throw parse_error(expected - 1, "graph6 padding bits are not zero");
  }
  return g;
}

// Edge list text: a line "n m" followed by m lines "u v", 0-indexed.
inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  const auto edges = g.edges();
  os << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges)
    os << u << ' ' << v << '\n';
  return os.str();
}

inline Graph from_edge_list(std::istream& in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m))
    throw parse_error(0, "edge list header \"n m\" missing");
  if (n < 1 || static_cast<std::size_t>(n) > max_vertices || m < 0)
    throw parse_error(0, "edge list header out of range");
  Graph g(static_cast<std::size_t>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    const auto offset = static_cast<std::size_t>(in.tellg());
    if (!(in >> u >> v))
      throw parse_error(offset, "edge " + std::to_string(i) + " missing");
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw parse_error(offset, "edge " + std::to_string(i) + " invalid");
    g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  std::string extra;
  if (in >> extra)
    throw parse_error(0, "edge list has content after the declared " + std::to_string(m) + " edges");
  return g;
}

inline Graph from_edge_list(const std::string& text) {
  std::istringstream in(text);
  return from_edge_list(in);
}

} // namespace bindex
