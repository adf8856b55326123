#include <gtest/gtest.h>

#include <random>

#include "sparc/benchmatch.hpp"
#include "support/oracles.hpp"

namespace sparc {
namespace {

ProteinSet range_set(const std::string& prefix, int lo, int hi) {
  ProteinSet s;
  for (int i = lo; i <= hi; ++i) s.insert(prefix + std::to_string(i));
  return s;
}

TEST(Jaccard, Cases) {
  const ProteinSet a{"A", "B", "C"};
  EXPECT_DOUBLE_EQ(jaccard(a, a), 1.0);
  EXPECT_DOUBLE_EQ(jaccard(a, ProteinSet{"X", "Y"}), 0.0);
  EXPECT_DOUBLE_EQ(jaccard(a, ProteinSet{"B", "C", "D"}), 0.5);
  EXPECT_DOUBLE_EQ(jaccard(a, ProteinSet{}), 0.0);
  EXPECT_THROW(jaccard(ProteinSet{}, ProteinSet{}), ArgumentError);
}

TEST(Jaccard, EightByEightNeedsSixShared) {
  EXPECT_EQ(min_overlap_half(8, 8), 6u);
  const auto b = range_set("p", 1, 8);
  EXPECT_GE(jaccard(b, range_set("p", 3, 10)), 0.5);  // 6 shared
  EXPECT_LT(jaccard(b, range_set("p", 4, 11)), 0.5);  // 5 shared
}

TEST(Jaccard, SymmetricOnRandomSets) {
  std::mt19937_64 rng(2);
  std::vector<std::string> pool;
  for (int i = 0; i < 15; ++i) pool.push_back(testing::node_name(i));
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = testing::random_subset(rng, pool, 10);
    const auto b = testing::random_subset(rng, pool, 10);
    EXPECT_DOUBLE_EQ(jaccard(a, b), jaccard(b, a));
  }
}

Network network_of(const ProteinSet& nodes) {
  NetworkBuilder b;
  for (const auto& n : nodes) b.add_node(n);
  return b.build();
}

TEST(Evaluate, IdentityGivesPerfectScores) {
  ComplexSet bench;
  bench.add({"b1", range_set("p", 1, 5)});
  bench.add({"b2", range_set("q", 1, 6)});
  auto nodes = range_set("p", 1, 5);
  auto q = range_set("q", 1, 6);
  nodes.insert(q.begin(), q.end());
  const auto rep = evaluate(bench, bench, network_of(nodes));
  EXPECT_DOUBLE_EQ(rep.precision, 1.0);
  EXPECT_DOUBLE_EQ(rep.recall, 1.0);
  EXPECT_EQ(rep.pair_matches.size(), 2u);
}

TEST(Evaluate, NonDerivableBenchmarksAreIgnored) {
  ComplexSet bench;
  bench.add({"b1", range_set("p", 1, 5)});
  bench.add({"gone", range_set("z", 1, 5)});
  ComplexSet pred;
  pred.add({"c1", range_set("p", 1, 5)});
  pred.add({"c2", range_set("z", 1, 5)});
  const auto rep = evaluate(bench, pred, network_of(range_set("p", 1, 5)));
  EXPECT_EQ(rep.derivable_count, 1u);
  EXPECT_EQ(rep.derived_count, 1u);
  EXPECT_EQ(rep.matched_count, 1u);
  EXPECT_DOUBLE_EQ(rep.precision, 0.5);
  EXPECT_DOUBLE_EQ(rep.recall, 1.0);

  MatchConfig all;
  all.recall_denominator = RecallDenominator::AllBenchmarks;
  EXPECT_DOUBLE_EQ(evaluate(bench, pred, network_of(range_set("p", 1, 5)), all).recall, 0.5);
}

TEST(Evaluate, EmptyInputsGiveZeroRates) {
  const auto rep = evaluate(ComplexSet{}, ComplexSet{}, Network{});
  EXPECT_EQ(rep.precision, 0.0);
  EXPECT_EQ(rep.recall, 0.0);
}

TEST(Evaluate, MatchesExhaustiveOracle) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const auto dense = testing::random_dense_graph(rng, 12, 0.2);
    const auto g = dense.to_network();
    std::vector<std::string> pool = dense.names;
    for (int i = 0; i < 4; ++i) pool.push_back("x" + std::to_string(i));
    ComplexSet bench, pred;
    for (int i = 0; i < 6; ++i) bench.add({"b" + std::to_string(i), testing::random_subset(rng, pool, 7)});
    for (int i = 0; i < 6; ++i) pred.add({"c" + std::to_string(i), testing::random_subset(rng, pool, 7)});
    MatchConfig cfg;
    cfg.k = 2;
    cfg.j_min = std::uniform_real_distribution<double>(0.2, 1.0)(rng);
    const auto rep = evaluate(bench, pred, g, cfg);
    const auto oracle = testing::oracle_evaluate(bench, pred, dense, cfg.j_min, cfg.k);
    EXPECT_EQ(rep.derivable_count, oracle.derivable);
    EXPECT_EQ(rep.derived_count, oracle.derived);
    EXPECT_EQ(rep.matched_count, oracle.matched);
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& pm : rep.pair_matches) {
      pairs.emplace(pm.benchmark_id, pm.prediction_id);
      EXPECT_GE(pm.jaccard, cfg.j_min);
    }
    EXPECT_EQ(pairs, oracle.pairs);
  }
}

TEST(Evaluate, RaisingJminNeverIncreasesCounts) {
  std::mt19937_64 rng(13);
  const auto dense = testing::random_dense_graph(rng, 15, 0.2);
  const auto g = dense.to_network();
  ComplexSet bench, pred;
  for (int i = 0; i < 20; ++i) bench.add({"b" + std::to_string(i), testing::random_subset(rng, dense.names, 8, 2)});
  for (int i = 0; i < 20; ++i) pred.add({"c" + std::to_string(i), testing::random_subset(rng, dense.names, 8, 2)});
  std::size_t prev_matched = SIZE_MAX, prev_derived = SIZE_MAX;
  for (int step = 1; step <= 10; ++step) {
    MatchConfig cfg;
    cfg.k = 2;
    cfg.j_min = step / 10.0;
    const auto rep = evaluate(bench, pred, g, cfg);
    EXPECT_LE(rep.matched_count, prev_matched);
    EXPECT_LE(rep.derived_count, prev_derived);
    prev_matched = rep.matched_count;
    prev_derived = rep.derived_count;
  }
}

TEST(Evaluate, AddingPredictionNeverLowersDerived) {
  std::mt19937_64 rng(14);
  const auto dense = testing::random_dense_graph(rng, 15, 0.2);
  const auto g = dense.to_network();
  ComplexSet bench, pred;
  for (int i = 0; i < 15; ++i) bench.add({"b" + std::to_string(i), testing::random_subset(rng, dense.names, 6, 2)});
  MatchConfig cfg;
  cfg.k = 2;
  std::size_t prev = 0;
  for (int i = 0; i < 25; ++i) {
    pred.add({"c" + std::to_string(i), testing::random_subset(rng, dense.names, 6, 2)});
    const auto d = evaluate(bench, pred, g, cfg).derived_count;
    EXPECT_GE(d, prev);
    prev = d;
  }
}

TEST(Pearson, PerfectCorrelations) {
  const std::vector<double> x{1, 2, 3};
  EXPECT_NEAR(pearson(x, std::vector<double>{2, 4, 6}), 1.0, 1e-12);
  EXPECT_NEAR(pearson(x, std::vector<double>{3, 2, 1}), -1.0, 1e-12);
}

TEST(Pearson, MatchesTwoPassFormula) {
  std::mt19937_64 rng(20);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> x(20), y(20);
    for (int i = 0; i < 20; ++i) {
      x[i] = n(rng);
      y[i] = 0.3 * x[i] + n(rng);
    }
    EXPECT_NEAR(pearson(x, y), testing::oracle_pearson(x, y), 1e-12);
  }
}

TEST(Pearson, Errors) {
  const std::vector<double> x{1, 1, 1};
  EXPECT_THROW(pearson(x, std::vector<double>{1, 2, 3}), ArgumentError);
  EXPECT_THROW(pearson(std::vector<double>{1}, std::vector<double>{2}), ArgumentError);
}

TEST(Correlate, UsesBestJaccardOrZero) {
  // Three derivable benchmarks; CE 1, 0.5 and 0 on this graph.
  NetworkBuilder b;
  for (auto [u, v] : {std::pair{"a1", "a2"}, {"a2", "a3"}, {"a1", "a3"}, {"a3", "a4"}, {"a1", "a4"}, {"a2", "a4"}}) {
    b.add_edge(u, v, 1.0);
  }
  b.add_edge("b1", "b2", 1.0);
  b.add_edge("b3", "b4", 1.0);
  for (const auto& n : {"c1", "c2", "c3", "c4"}) b.add_node(n);
  const auto g = b.build();
  ComplexSet bench;
  bench.add({"A", {"a1", "a2", "a3", "a4"}});
  bench.add({"B", {"b1", "b2", "b3", "b4"}});
  bench.add({"C", {"c1", "c2", "c3", "c4"}});
  ComplexSet pred;
  pred.add({"pa", {"a1", "a2", "a3", "a4"}});
  pred.add({"pb", {"b1", "b2", "b3", "b4", "x1"}});
  pred.add({"pc", {"c1", "x2", "x3"}});
  const auto rep = derivability_report(g, bench, 4, 0.4);
  const auto ev = evaluate(bench, pred, g);
  ASSERT_EQ(ev.accuracies.size(), 3u);
  EXPECT_DOUBLE_EQ(ev.accuracies[1].best_jaccard, 0.8);
  std::vector<double> ce{rep.records[0].ce, rep.records[1].ce, rep.records[2].ce};
  std::vector<double> acc{1.0, 0.8, 0.0};  // pc reaches J = 1/6 < 0.5
  EXPECT_NEAR(correlate(rep, ev), testing::oracle_pearson(ce, acc), 1e-12);
}

}  // namespace
}  // namespace sparc
