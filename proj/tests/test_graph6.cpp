#include <random>

#include <gtest/gtest.h>

#include <bindex/errors.hpp>
#include <bindex/graph6.hpp>

#include "oracle.hpp"

using namespace bindex;

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(to_graph6(complete(3)), "Bw");
  EXPECT_EQ(to_graph6(complete(4)), "C~");
  EXPECT_EQ(to_graph6(cycle_graph(5)), "Dhc");
  EXPECT_EQ(to_graph6(complete(2)), "A_");
  EXPECT_EQ(to_graph6(empty_graph(2)), "A?");
  const Graph k3 = from_graph6("Bw");
  EXPECT_EQ(k3.order(), 3u);
  EXPECT_EQ(k3.edge_count(), 3u);
}

TEST(Graph6, RoundTrip) {
  std::mt19937_64 rng(21);
  for (std::size_t n : {1u, 2u, 7u, 12u, 62u, 63u, 64u, 100u, 300u}) {
    for (int it = 0; it < 5; ++it) {
      const Graph g = oracle::random_graph(n, 0.3, rng);
      const Graph h = from_graph6(to_graph6(g));
      ASSERT_EQ(h.order(), n);
      EXPECT_EQ(h.edges(), g.edges());
    }
  }
}

TEST(Graph6, ErrorsNameOffset) {
  try {
    from_graph6("C~~");
    FAIL() << "trailing byte accepted";
  } catch (const parse_error& e) {
    EXPECT_NE(std::string(e.what()).find("byte offset"), std::string::npos);
  }
  try {
    from_graph6("D!c");
    FAIL() << "invalid byte accepted";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.offset(), 1u);
  }
  EXPECT_THROW(from_graph6(""), parse_error);
  EXPECT_THROW(from_graph6("D"), parse_error);
  EXPECT_THROW(from_graph6("Bx"), parse_error); // nonzero padding
}

TEST(EdgeList, RoundTripAndErrors) {
  std::mt19937_64 rng(22);
  const Graph g = oracle::random_graph(15, 0.4, rng);
  const Graph h = from_edge_list(to_edge_list(g));
  EXPECT_EQ(h.edges(), g.edges());
  EXPECT_THROW(from_edge_list("3 2\n0 1\n"), parse_error);
  EXPECT_THROW(from_edge_list("3 1\n0 7\n"), parse_error);
  EXPECT_THROW(from_edge_list(""), parse_error);
  EXPECT_THROW(from_edge_list("3 1\n0 1\n1 2\n"), parse_error);
}
