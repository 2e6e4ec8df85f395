#include <random>
#include <set>

#include <gtest/gtest.h>

#include <bindex/errors.hpp>
#include <bindex/verify.hpp>

#include "oracle.hpp"

using namespace bindex;

namespace {

// Every bipartite graph on sides p, q without isolated vertices and with
// b < 1/r, by plain loops: (max edges, number of labeled maximizers).
std::pair<int, std::size_t> oracle_bipartite_max(std::size_t p, std::size_t q, std::int64_t r) {
  int best = -1;
  std::size_t count = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << (p * q)); ++m) {
    Graph g(p + q);
    for (std::size_t x = 0; x < p; ++x)
      for (std::size_t y = 0; y < q; ++y)
        if ((m >> (x * q + y)) & 1u)
          g.add_edge(x, p + y);
    bool isolated = false;
    for (std::size_t v = 0; v < p + q; ++v)
      isolated |= g.degree(v) == 0;
    if (isolated)
      continue;
    const int e = static_cast<int>(g.edge_count());
    if (e < best)
      continue;
    if (!(oracle::binding(g).first < Rational(1, r)))
      continue;
    if (e > best) {
      best = e;
      count = 0;
    }
    ++count;
  }
  return {best, count};
}

} // namespace

TEST(Kernel, MatchesExactBinding) {
  std::mt19937_64 rng(61);
  int tested = 0;
  while (tested < 600) {
    const std::size_t q = 1 + rng() % 4, p = q + rng() % 4;
    const std::int64_t r = 1 + static_cast<std::int64_t>(rng() % 3);
    detail::BipartiteKernel k(p, q, r);
    std::vector<std::uint32_t> rows(p);
    for (auto& row : rows)
      row = static_cast<std::uint32_t>(rng()) & k.qmask();
    if (!k.spanning(rows.data()))
      continue;
    ++tested;
    const Graph g = k.graph(k.key(rows.data()));
    EXPECT_EQ(k.below(rows.data()), oracle::binding(g).first < Rational(1, r));
  }
}

TEST(Kernel, Limits) {
  EXPECT_THROW(detail::BipartiteKernel(3, 4, 1), domain_error);
  EXPECT_THROW(detail::BipartiteKernel(9, 8, 1), limit_error);
  EXPECT_THROW(scan_bipartite_max(8, 3, 3, ScanOrder::full), limit_error);
}

TEST(Combinations, UnrankFollowsGosperOrder) {
  for (std::uint64_t m : {6u, 9u, 12u})
    for (std::uint64_t k = 1; k <= 4; ++k) {
      std::uint64_t c = (std::uint64_t{1} << k) - 1;
      const std::uint64_t total = detail::binomial(m, k);
      for (std::uint64_t rank = 0; rank < total; ++rank) {
        ASSERT_EQ(detail::unrank_combination(rank, m, k), c) << m << " " << k << " " << rank;
        if (rank + 1 < total)
          c = detail::next_combination(c);
      }
      EXPECT_LT(c, std::uint64_t{1} << m);
    }
}

TEST(EnumerateBipartite, Examples) {
  const auto a = enumerate_bipartite_max(5, 3, 2);
  EXPECT_EQ(a.verdict, Verdict::pass);
  EXPECT_EQ(a.counters["max_found"], 9);
  EXPECT_EQ(a.counters["predicted"], json::array({"D(2,3;1,2)"}));
  const auto b = enumerate_bipartite_max(7, 2, 3);
  EXPECT_EQ(b.verdict, Verdict::pass);
  EXPECT_EQ(b.counters["max_found"], 14);
  EXPECT_EQ(b.witnesses.size(), 1u);
  const auto c = enumerate_bipartite_max(4, 4, 1);
  EXPECT_EQ(c.verdict, Verdict::pass);
  EXPECT_EQ(c.counters["max_found"], 10);
  EXPECT_EQ(c.counters["audit_mismatches"], 0);
  EXPECT_FALSE(c.witnesses.empty());
}

TEST(EnumerateBipartite, DegenerateCaseIsHypothesisNotMet) {
  const auto rep = enumerate_bipartite_max(3, 3, 2);
  EXPECT_EQ(rep.verdict, Verdict::hypothesis_not_met);
  EXPECT_TRUE(rep.counters["max_found"].is_null());
}

TEST(EnumerateBipartite, MatchesPlainOracle) {
  for (auto [p, q, r] : std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>{
           {3, 2, 1}, {4, 2, 1}, {4, 3, 1}, {5, 2, 2}, {4, 3, 2}, {5, 3, 2}}) {
    const auto [best, count] = oracle_bipartite_max(p, q, r);
    const BipartiteScan s = scan_bipartite_max(p, q, r);
    ASSERT_TRUE(s.max_edges.has_value());
    EXPECT_EQ(*s.max_edges, best) << p << q << r;
    EXPECT_EQ(s.maximizers.size(), count) << p << q << r;
  }
}

TEST(EnumerateBipartite, LevelOrderMatchesFullScan) {
  for (auto [p, q, r] : std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>{
           {4, 3, 1}, {5, 3, 2}, {4, 4, 1}, {6, 3, 2}, {7, 3, 3}}) {
    const auto full = scan_bipartite_max(p, q, r, ScanOrder::full);
    const auto level = scan_bipartite_max(p, q, r, ScanOrder::level);
    EXPECT_EQ(full.max_edges, level.max_edges);
    EXPECT_EQ(full.maximizers, level.maximizers);
  }
}

TEST(EnumerateBipartite, ParallelEqualsSerial) {
  for (auto order : {ScanOrder::full, ScanOrder::level}) {
    const auto one = enumerate_bipartite_max(6, 3, 2, order, 1);
    const auto four = enumerate_bipartite_max(6, 3, 2, order, 4);
    EXPECT_EQ(one.verdict, four.verdict);
    EXPECT_EQ(one.witnesses, four.witnesses);
    EXPECT_EQ(one.counters["graphs_scanned"], four.counters["graphs_scanned"]);
    EXPECT_EQ(one.counters["audited"], four.counters["audited"]);
  }
}

TEST(Theorem6Scan, Examples) {
  const auto a = enumerate_bipartite_theorem6(7, 2);
  EXPECT_EQ(a.verdict, Verdict::pass);
  EXPECT_EQ(a.counters["max_found"], 10);
  EXPECT_EQ(a.counters["realized"], json::array({"Kab(5,2)"}));
  const auto b = enumerate_bipartite_theorem6(8, 2);
  EXPECT_EQ(b.verdict, Verdict::pass);
  EXPECT_EQ(b.counters["max_found"], f_formula(8, 2));
  const auto c = enumerate_bipartite_theorem6(6, 2);
  EXPECT_EQ(c.verdict, Verdict::hypothesis_not_met);
  EXPECT_THROW(enumerate_bipartite_theorem6(11, 1), limit_error);
}

TEST(Properties, Exhaustive5) {
  const auto rep = enumerate_general_properties(5);
  EXPECT_EQ(rep.verdict, Verdict::pass);
  EXPECT_EQ(rep.counters["graphs"], 1024);
  EXPECT_EQ(rep.counters["flow_brute_agree"], 1024);
  EXPECT_EQ(rep.counters["violations"], 0);
}

TEST(Properties, SampledDeterministicAcrossThreads) {
  const auto a = enumerate_general_properties(10, 1000, default_seed, 1);
  const auto b = enumerate_general_properties(10, 1000, default_seed, 3);
  EXPECT_EQ(a.verdict, Verdict::pass);
  EXPECT_EQ(a.counters["graphs"], 1000);
  EXPECT_EQ(a.counters["independence_checked"], b.counters["independence_checked"]);
  EXPECT_EQ(a.counters["toughness_checked"], b.counters["toughness_checked"]);
  const auto c = enumerate_general_properties(10, 1000, default_seed + 1, 1);
  EXPECT_EQ(c.verdict, Verdict::pass);
  EXPECT_THROW(enumerate_general_properties(17), limit_error);
}

TEST(FamilyScan, Examples) {
  const auto a = scan_family_general(16, 1);
  EXPECT_EQ(a.verdict, Verdict::pass);
  EXPECT_EQ(a.counters["edge_argmax"], json::array({1}));
  EXPECT_EQ(a.counters["max_edges"], 93);
  EXPECT_EQ(a.counters["radius_hypothesis_ok"], false);
  const auto b = scan_family_general(20, 2);
  EXPECT_EQ(b.verdict, Verdict::pass);
  EXPECT_EQ(b.counters["edge_argmax"], json::array({1}));
  EXPECT_EQ(b.counters["radius_argmax"], json::array({1}));
  const auto c = scan_family_general(14, 1);
  EXPECT_EQ(c.counters["max_edges"], 68);
  const auto d = scan_family_general(10, 1);
  EXPECT_EQ(d.verdict, Verdict::hypothesis_not_met);
  EXPECT_THROW(scan_family_general(4, 2), domain_error);
}

TEST(Identities, GridPassesWithEnoughTuples) {
  const auto rep = check_polynomial_identities();
  EXPECT_EQ(rep.verdict, Verdict::pass);
  for (const char* id : {"f3-f4=(t1-1)f5", "g1-g2=(t-1)g3", "g5-g6=(q-t-1)g7", "g5-g4=(t-1)g8", "h1-h2=h3"})
    EXPECT_GE(rep.counters[id].get<std::size_t>(), 500u) << id;
}

TEST(Identities, SpotTuplesByEvaluation) {
  using F = PolyFamily;
  auto at = [](const IntPolynomial& p, std::int64_t x) { return p.evaluate(BigInt(x)); };
  for (std::int64_t x = -5; x <= 5; ++x) {
    const PolyParams f{.n = 20, .r = 2, .t = 3};
    EXPECT_EQ(at(family_polynomial(F::f3, f), x) - at(family_polynomial(F::f4, f), x),
              2 * at(family_polynomial(F::f5, f), x));
    const PolyParams g{.r = 2, .t = 2, .p = 9, .q = 5};
    EXPECT_EQ(at(family_polynomial(F::g5, g), x) - at(family_polynomial(F::g4, g), x),
              at(family_polynomial(F::g8, g), x));
    const PolyParams h{.n = 21, .r = 4, .q = 8, .beta = 8};
    EXPECT_EQ(at(family_polynomial(F::h1, h), x) - at(family_polynomial(F::h2, h), x),
              at(family_polynomial(F::h3, h), x));
  }
}

TEST(Transcriptions, SmallGrid) {
  const auto rep = check_transcriptions({.r_max = 3, .n_max = 24, .side_max = 12});
  EXPECT_EQ(rep.verdict, Verdict::pass);
  for (const char* f : {"g1", "g2", "g4", "g5", "g6", "h1"})
    EXPECT_GT(rep.counters["per_family"][f].get<std::size_t>(), 0u) << f;
}

TEST(Grids, ConstructionsAndSpectral) {
  const auto a = check_construction_grid({.r_max = 3, .n_max = 30}, 2);
  EXPECT_EQ(a.verdict, Verdict::pass);
  EXPECT_EQ(a.counters["instances"], a.counters["binding_below_ok"]);
  const auto b = check_spectral_grid({.r_max = 3, .n_max = 30}, 2);
  EXPECT_EQ(b.verdict, Verdict::pass);
  EXPECT_EQ(b.counters["instances"], b.counters["radius_within_slack"]);
  EXPECT_EQ(b.counters["transcriptions_checked"], b.counters["transcriptions_ok"]);
}

TEST(BipartiteFamily, Examples) {
  const auto a = scan_bipartite_family(8, 3, 3);
  EXPECT_EQ(a.verdict, Verdict::pass);
  EXPECT_EQ(a.counters["x_edge_argmax"], json::array({2}));
  const auto b = scan_bipartite_family(7, 4, 2);
  EXPECT_EQ(b.verdict, Verdict::pass);
  EXPECT_EQ(b.counters["x_edge_argmax"], json::array({1}));
  const auto c = scan_bipartite_family(13, 9, 2);
  EXPECT_EQ(c.verdict, Verdict::pass);
  ASSERT_EQ(c.counters["radius_vs_t1"].size(), 4u);
  for (const auto& row : c.counters["radius_vs_t1"])
    EXPECT_EQ(row["vs_t1"], "less");
  EXPECT_THROW(scan_bipartite_family(3, 4, 1), domain_error);
}

TEST(Lemma12Scan, Examples) {
  const auto a = scan_lemma12(21, 4);
  EXPECT_EQ(a.verdict, Verdict::pass);
  EXPECT_EQ(a.counters["argmax"], json::array({8}));
  const auto b = scan_lemma12(20, 2);
  EXPECT_EQ(b.verdict, Verdict::pass);
  EXPECT_EQ(b.counters["argmax"], json::array({8}));
  const auto c = scan_lemma12(13, 2);
  EXPECT_EQ(c.verdict, Verdict::pass);
  EXPECT_EQ(c.counters["theorem_size_ok"], true);
  EXPECT_THROW(scan_lemma12(20, 1), domain_error);
}

TEST(Report, Serialization) {
  const auto rep = scan_lemma12(13, 2);
  const json j = to_json(rep);
  for (const char* key : {"claim_id", "params", "verdict", "witnesses", "counters"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(json::parse(j.dump()), j);
  const std::string csv = to_csv(rep);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "q,label,rho,vs_beta");
}

TEST(Threads, Resolution) {
  EXPECT_EQ(resolve_threads(3), 3u);
  EXPECT_THROW(resolve_threads(0), domain_error);
  EXPECT_GE(resolve_threads(), 1u);
}
