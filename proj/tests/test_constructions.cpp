#include <gtest/gtest.h>

#include <bindex/binding.hpp>
#include <bindex/constructions.hpp>
#include <bindex/errors.hpp>

#include "oracle.hpp"

using namespace bindex;

TEST(Formulas, Examples) {
  EXPECT_EQ(f_formula(9, 1), 20);
  EXPECT_EQ(f_formula(13, 2), 36);
  EXPECT_EQ(f_formula(25, 3), 114);
  EXPECT_EQ(g_formula(13, 2), 28);
  EXPECT_EQ(g_formula(21, 4), 69);
  EXPECT_EQ(g_formula(25, 3), 114);
  EXPECT_THROW(f_formula(3, 2), domain_error);
  EXPECT_THROW(g_formula(5, 0), domain_error);
}

TEST(General, Examples) {
  const Construction a = general_extremal(14, 1);
  EXPECT_EQ(a.label, "K1_join(14,1)");
  EXPECT_EQ(a.graph.edge_count(), 68u);
  EXPECT_TRUE(is_connected(a.graph));
  EXPECT_EQ(general_extremal(15, 2).graph.edge_count(), 69u);
  EXPECT_LT(binding_number(general_extremal(10, 2).graph).value, Rational(1, 2));
  EXPECT_EQ(general_extremal(4, 1).graph.edge_count(), 3u);
  EXPECT_THROW(general_extremal(4, 2), domain_error);
}

TEST(General, FamilyMembers) {
  EXPECT_EQ(family_general(16, 1, 1).graph.edge_count(), 93u);
  EXPECT_EQ(family_general(16, 1, 2).graph.edge_count(), 84u);
  EXPECT_EQ(family_general(16, 1, 2).label, "Kt_join(16,1,2)");
  // Counted edge by edge: the maximum is unique at t1 = 1 but the sequence is
  // not monotone.
  std::vector<std::size_t> edges;
  for (std::int64_t t = 1; t <= 6; ++t)
    edges.push_back(oracle::edge_count(family_general(16, 1, t).graph));
  EXPECT_EQ(edges, (std::vector<std::size_t>{93, 84, 78, 75, 75, 78}));
  EXPECT_THROW(family_general(16, 1, 7), domain_error);
  EXPECT_THROW(family_general(16, 1, 0), domain_error);
}

TEST(General, PartitionIsEquitableAndBindingBelow) {
  for (std::int64_t r = 1; r <= 5; ++r)
    for (std::int64_t n = r + 4; n <= 30; ++n)
      for (std::int64_t t = 1; t <= family_general_max_t(n, r); ++t) {
        const Construction c = family_general(n, r, t);
        EXPECT_NO_THROW(quotient_matrix(c.graph, c.partition));
        EXPECT_EQ(c.graph.edge_count(), c.closed_form_edges);
        // The K_t side of the join is a binding-type set of ratio t/(rt+1).
        EXPECT_TRUE(binding_below(c.graph, Rational(1, r))) << c.label;
        if (c.graph.order() <= 14) {
          EXPECT_LE(binding_number(c.graph).value, Rational(t, r * t + 1));
        }
      }
}

TEST(Bipartite, Examples) {
  const Construction k = bipartite_extremal_K(13, 2);
  EXPECT_EQ(k.label, "Kab(9,4)");
  EXPECT_EQ(k.graph.edge_count(), 36u);
  EXPECT_EQ(binding_number_bruteforce(k.graph).value, Rational(4, 9));
  const auto ds = bipartite_extremal_D(21, 4);
  ASSERT_EQ(ds.size(), 1u); // n-r-1 even: the mirrors coincide
  EXPECT_EQ(ds.front().label, "D(8,5;1,7)");
  EXPECT_EQ(ds.front().graph.edge_count(), 69u);
  const auto odd = bipartite_extremal_D(25, 3);
  ASSERT_EQ(odd.size(), 2u);
  EXPECT_EQ(odd[0].label, "D(11,4;1,9)");
  EXPECT_EQ(odd[1].label, "D(10,4;1,10)");
  for (const auto& d : odd)
    EXPECT_EQ(d.graph.edge_count(), 114u);
  EXPECT_THROW(bipartite_extremal_D(7, 3), domain_error);
}

TEST(Bipartite, GridClosedFormsAndBinding) {
  for (std::int64_t r = 1; r <= 5; ++r)
    for (std::int64_t n = r + 3; n <= 40; ++n) {
      const Construction k = bipartite_extremal_K(n, r);
      EXPECT_EQ(static_cast<std::int64_t>(k.graph.edge_count()), f_formula(n, r));
      EXPECT_TRUE(binding_below(k.graph, Rational(1, r)));
      if (n < r + 5)
        continue;
      for (const auto& d : bipartite_extremal_D(n, r)) {
        EXPECT_EQ(static_cast<std::int64_t>(d.graph.edge_count()), g_formula(n, r));
        EXPECT_TRUE(is_bipartite(d.graph));
        EXPECT_TRUE(binding_below(d.graph, Rational(1, r))) << d.label;
        if (d.graph.order() <= 16) {
          EXPECT_EQ(binding_number(d.graph).value, oracle::binding(d.graph).first);
        }
      }
    }
}

TEST(Bipartite, DoubleNestedPartitionMatchesOracle) {
  const Construction c = double_nested_construction(make_spec(3, 2, 1, 4));
  const Graph o = oracle::double_nested({3, 2}, {1, 4});
  for (std::size_t u = 0; u < o.order(); ++u)
    for (std::size_t v = 0; v < o.order(); ++v)
      ASSERT_EQ(c.graph.adjacent(u, v), o.adjacent(u, v));
  EXPECT_EQ(double_nested_construction(make_spec(4, 1, 3, 2)).label, "D(4,1;3,2)");
  EXPECT_EQ(double_nested_construction(BipartitionSpec{{4}, {3}}).label, "Kab(4,3)");
}

TEST(Lemma6, Cases) {
  const auto a = lemma6_max(7, 2, 3);
  EXPECT_EQ(a.regime, Regime::le6_case_i);
  EXPECT_EQ(a.claimed_max, 14);
  EXPECT_EQ(a.extremal_labels(), std::vector<std::string>{"Kab(7,2)"});
  const auto b = lemma6_max(8, 3, 3);
  EXPECT_EQ(b.regime, Regime::le6_case_ii);
  EXPECT_EQ(b.claimed_max, 17);
  EXPECT_EQ(b.extremal_labels(), std::vector<std::string>{"D(1,7;2,1)"});
  const auto c = lemma6_max(7, 4, 2);
  EXPECT_EQ(c.regime, Regime::le6_case_iii);
  EXPECT_EQ(c.claimed_max, 19);
  EXPECT_EQ(c.extremal_labels(), std::vector<std::string>{"D(4,3;1,3)"});
  const auto d = lemma6_max(3, 3, 2);
  EXPECT_FALSE(d.hypothesis_ok);
  EXPECT_FALSE(d.claimed_max.has_value());
  EXPECT_THROW(lemma6_max(2, 3, 1), domain_error);
}

TEST(Lemma6, ClaimedMaxMatchesExtremal) {
  for (std::int64_t r = 1; r <= 4; ++r)
    for (std::int64_t q = 1; q <= 8; ++q)
      for (std::int64_t p = q; p <= 20; ++p) {
        const auto rep = lemma6_max(p, q, r);
        for (const auto& c : rep.extremal)
          EXPECT_EQ(static_cast<std::int64_t>(c.graph.edge_count()), *rep.claimed_max);
      }
}

TEST(Theorem6, Regimes) {
  const auto a = theorem6_regime(13, 2);
  EXPECT_EQ(a.regime, Regime::bip_f_gt_g);
  EXPECT_EQ(a.claimed_max, 36);
  EXPECT_EQ(a.extremal_labels(), std::vector<std::string>{"Kab(9,4)"});
  const auto b = theorem6_regime(21, 4);
  EXPECT_EQ(b.regime, Regime::bip_f_lt_g);
  EXPECT_EQ(b.claimed_max, 69);
  EXPECT_EQ(b.extremal_labels(), std::vector<std::string>{"D(8,5;1,7)"});
  const auto c = theorem6_regime(25, 3);
  EXPECT_EQ(c.regime, Regime::bip_tie);
  EXPECT_EQ(c.claimed_max, 114);
  EXPECT_EQ(c.extremal.size(), 3u);
  EXPECT_TRUE(c.hypothesis_ok);
  EXPECT_FALSE(theorem6_regime(9, 3).hypothesis_ok);
  EXPECT_EQ(theorem6_regime(9, 1).regime, Regime::bip_r1);
  EXPECT_THROW(theorem6_regime(4, 2), domain_error);
  for (std::int64_t r = 1; r <= 5; ++r)
    for (std::int64_t n = r + 3; n <= 50; ++n) {
      const auto rep = theorem6_regime(n, r);
      for (const auto& e : rep.extremal)
        EXPECT_EQ(static_cast<std::int64_t>(e.graph.edge_count()), *rep.claimed_max);
    }
}

TEST(Theorem7, CertifiedComparison) {
  const auto a = theorem7_regime(13, 2);
  EXPECT_EQ(a.regime, Regime::bip_f_gt_g);
  EXPECT_EQ(a.details["comparison"], "rho' > rho''");
  EXPECT_EQ(a.details["certified"], true);
  EXPECT_EQ(a.extremal_labels(), std::vector<std::string>{"Kab(9,4)"});
  const auto b = theorem7_regime(25, 3);
  EXPECT_EQ(b.regime, Regime::bip_f_gt_g);
  EXPECT_EQ(theorem7_regime(9, 1).regime, Regime::bip_r1);
  EXPECT_THROW(theorem7_regime(7, 3), domain_error);
}

TEST(Regime, JsonShape) {
  const json j = to_json(theorem6_regime(25, 3));
  EXPECT_EQ(j["regime"], "bip_tie");
  EXPECT_EQ(j["claimed_max"], 114);
  EXPECT_EQ(j["extremal"].size(), 3u);
  EXPECT_TRUE(j.contains("hypothesis_ok"));
}
