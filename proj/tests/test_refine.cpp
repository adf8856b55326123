#include <gtest/gtest.h>

#include <random>

#include "sparc/derivability.hpp"
#include "sparc/refine.hpp"
#include "support/oracles.hpp"
#include "support/planted.hpp"

namespace sparc {
namespace {

void add_leaf(NetworkBuilder& b, const std::string& at, const std::string& leaf, double w = 1.0) {
  b.add_edge(at, leaf, w);
  for (int t = 0; t < 3; ++t) b.add_edge(leaf, leaf + "_far" + std::to_string(t), 1.0);
}

// Reserved cluster {A,B,C,D}: P has A-B and C-D, F bridges B-C. X is tied
// to A, B, C through F and has external weight 10/3.
struct XFixture {
  Network physical;
  Network functional;
  ComplexSet clusters;
};

XFixture x_fixture() {
  NetworkBuilder p;
  NetworkBuilder f;
  p.add_edge("A", "B", 1.0);
  p.add_edge("C", "D", 1.0);
  for (const auto& m : {"A", "B", "C", "D"}) add_leaf(p, m, std::string("L") + m);
  f.add_edge("B", "C", 1.0);
  for (const auto& m : {"A", "B", "C"}) f.add_edge("X", m, 1.0);
  add_leaf(f, "X", "E1");
  add_leaf(f, "X", "E2");
  add_leaf(f, "X", "E3");
  add_leaf(f, "X", "E4", 1.0 / 3.0);
  XFixture out{p.build(), f.build(), {}};
  out.clusters.add({"c", {"A", "B", "C", "D"}});
  return out;
}

TEST(Sparc, DenseClusterAcceptedUntouched) {
  NetworkBuilder p;
  for (const auto& a : {"A", "B", "C", "D"}) {
    for (const auto& b : {"A", "B", "C", "D"}) {
      if (std::string(a) < b) p.add_edge(a, b, 1.0);
    }
  }
  ComplexSet in;
  in.add({"k4", {"A", "B", "C", "D"}});
  const auto r = sparc(in, p.build(), Network{});
  ASSERT_EQ(r.accepted.size(), 1u);
  EXPECT_EQ(r.accepted[0], in[0]);
  EXPECT_DOUBLE_EQ(r.accepted_ce[0], 1.0);
  EXPECT_TRUE(r.rescued.empty());
  EXPECT_TRUE(r.rejected.empty());
}

TEST(Sparc, FunctionalBridgeRescuesWithoutGrowth) {
  NetworkBuilder p;
  NetworkBuilder f;
  for (auto [a, b] : {std::pair{"A", "B"}, {"B", "C"}, {"A", "C"}, {"D", "E"}, {"E", "F"}, {"D", "F"}}) {
    p.add_edge(a, b, 1.0);
  }
  for (const auto& m : {"A", "B", "C", "D", "E", "F"}) p.add_edge(m, std::string("L") + m, 1.0);
  f.add_edge("C", "D", 0.95);
  ComplexSet in;
  in.add({"two", {"A", "B", "C", "D", "E", "F"}});
  const auto phys = p.build();
  EXPECT_LT(ce_score(phys, in[0]), 0.4);
  const auto r = sparc(in, phys, f.build());
  ASSERT_EQ(r.rescued.size(), 1u);
  EXPECT_TRUE(r.rescued[0].added.empty());
  EXPECT_EQ(r.rescued[0].members, in[0].members);
  EXPECT_DOUBLE_EQ(r.rescued[0].ce_before, ce_score(phys, in[0]));
  EXPECT_GE(r.rescued[0].ce_after, 0.4);
}

TEST(Sparc, XFixtureGrowsByX) {
  const auto fx = x_fixture();
  const auto ga = merge_networks(fx.physical, fx.functional);
  EXPECT_NEAR(ce_score(ga, fx.clusters[0]), 0.30, 1e-12);

  // Brute force over every single-protein extension.
  std::string best;
  double best_ce = -1.0;
  for (const auto& name : ga.names()) {
    if (fx.clusters[0].members.count(name)) continue;
    auto trial = fx.clusters[0].members;
    trial.insert(name);
    const double ce = ce_score(ga, trial);
    if (ce > best_ce) {
      best_ce = ce;
      best = name;
    }
  }
  EXPECT_EQ(best, "X");
  EXPECT_NEAR(best_ce, 0.45, 1e-12);

  const auto r = sparc(fx.clusters, fx.physical, fx.functional);
  ASSERT_EQ(r.rescued.size(), 1u);
  const auto& rc = r.rescued[0];
  ASSERT_EQ(rc.added.size(), 1u);
  EXPECT_EQ(rc.added[0], (AddedProtein{"X", false}));
  EXPECT_NEAR(rc.ce_after, 0.45, 1e-12);
  EXPECT_DOUBLE_EQ(rc.ce_before, ce_score(fx.physical, fx.clusters[0]));
}

TEST(Sparc, CapZeroMeansUnlimitedAndCapOneStops) {
  const auto fx = x_fixture();
  SparcConfig cfg;
  cfg.max_growth = 0;
  EXPECT_EQ(sparc(fx.clusters, fx.physical, fx.functional, cfg).rescued.size(), 1u);
  cfg.delta = 0.9;
  cfg.max_growth = 1;
  const auto r = sparc(fx.clusters, fx.physical, fx.functional, cfg);
  ASSERT_EQ(r.rejected.size(), 1u);
  EXPECT_EQ(r.rejected[0].added.size(), 1u);
}

TEST(ReplayGrowth, Cases) {
  const auto fx = x_fixture();
  const auto ga = merge_networks(fx.physical, fx.functional);
  const auto& c = fx.clusters[0];
  EXPECT_EQ(replay_growth(c, {}, ga), std::vector<double>{ce_score(ga, c)});

  const auto rc = sparc(fx.clusters, fx.physical, fx.functional).rescued.at(0);
  std::vector<std::string> adds;
  for (const auto& a : rc.added) adds.push_back(a.protein);
  const auto seq = replay_growth(c, adds, ga);
  EXPECT_TRUE(strictly_increasing(seq));
  EXPECT_GE(seq.back(), 0.40);
  EXPECT_DOUBLE_EQ(seq.back(), rc.ce_after);

  // Negative control: an unrelated protein put ahead of X lowers CE first.
  const auto shuffled = replay_growth(c, {"E1", "X"}, ga);
  EXPECT_FALSE(strictly_increasing(shuffled));

  EXPECT_THROW(replay_growth(c, {"nowhere"}, ga), IntegrityError);
}

TEST(Sparc, ConfigValidation) {
  const auto fx = x_fixture();
  SparcConfig cfg;
  cfg.delta = 1.2;
  EXPECT_THROW(sparc(fx.clusters, fx.physical, fx.functional, cfg), ConfigError);
  cfg.delta = -0.1;
  EXPECT_THROW(sparc(fx.clusters, fx.physical, fx.functional, cfg), ConfigError);
  EXPECT_THROW(sparc(ComplexSet{}, fx.physical, fx.functional), ArgumentError);
}

TEST(Sparc, PlantedCorpusContract) {
  const auto corpus = testing::planted_corpus(1, 10, 10);
  const auto r = sparc(corpus.clusters, corpus.physical, corpus.functional);
  EXPECT_EQ(r.accepted.size() + r.rescued.size() + r.rejected.size(), corpus.clusters.size());
  EXPECT_EQ(r.rescued.size(), corpus.sparse_ids.size());
  const auto ga = merge_networks(corpus.physical, corpus.functional);
  for (const auto& rc : r.rescued) {
    EXPECT_GE(rc.ce_after, 0.40 - 1e-9);
    if (corpus.growth_ids.count(rc.cluster_id)) {
      EXPECT_EQ(rc.members, corpus.truth[corpus.truth.index_of(rc.cluster_id)].members);
    } else {
      EXPECT_TRUE(rc.added.empty());
    }
    std::vector<std::string> adds;
    for (const auto& a : rc.added) adds.push_back(a.protein);
    EXPECT_TRUE(strictly_increasing(replay_growth(corpus.clusters[corpus.clusters.index_of(rc.cluster_id)], adds, ga)));
  }
  for (const auto& c : r.accepted) EXPECT_EQ(c, corpus.clusters[corpus.clusters.index_of(c.id)]);
}

TEST(Sparc, LoweringDeltaNeverRejectsMore) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto pd = testing::random_dense_graph(rng, 25, 0.12);
    const auto fd = testing::random_dense_graph(rng, 25, 0.08);
    const auto p = pd.to_network();
    const auto f = fd.to_network();
    ComplexSet in;
    for (int i = 0; i < 8; ++i) in.add({"c" + std::to_string(i), testing::random_subset(rng, pd.names, 7, 3)});
    std::set<std::string> prev_rejected;
    bool first = true;
    for (int step = 10; step >= 0; --step) {
      SparcConfig cfg;
      cfg.delta = step / 10.0;
      cfg.max_growth = 5;
      const auto r = sparc(in, p, f, cfg);
      std::set<std::string> rejected;
      for (const auto& x : r.rejected) rejected.insert(x.cluster_id);
      if (!first) {
        EXPECT_TRUE(std::includes(prev_rejected.begin(), prev_rejected.end(), rejected.begin(), rejected.end()))
            << "delta " << cfg.delta;
      }
      prev_rejected = rejected;
      first = false;
    }
  }
}

TEST(Sparc, Deterministic) {
  const auto corpus = testing::planted_corpus(5, 6, 6);
  EXPECT_EQ(sparc(corpus.clusters, corpus.physical, corpus.functional),
            sparc(corpus.clusters, corpus.physical, corpus.functional));
}

TEST(Sparc, GrowthStepsStrictlyIncreaseOnRandomInputs) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const auto pd = testing::random_dense_graph(rng, 30, 0.1);
    const auto fd = testing::random_dense_graph(rng, 30, 0.1);
    const auto p = pd.to_network();
    const auto f = fd.to_network();
    const auto ga = merge_networks(p, f);
    ComplexSet in;
    for (int i = 0; i < 6; ++i) in.add({"c" + std::to_string(i), testing::random_subset(rng, pd.names, 6, 2)});
    SparcConfig cfg;
    cfg.delta = 0.9;
    cfg.max_growth = 0;
    const auto r = sparc(in, p, f, cfg);
    for (const auto* group : {&r.rescued, &r.rejected}) {
      for (const auto& rc : *group) {
        std::vector<std::string> adds;
        for (const auto& a : rc.added) adds.push_back(a.protein);
        const auto seq = replay_growth(in[in.index_of(rc.cluster_id)], adds, ga);
        EXPECT_TRUE(strictly_increasing(seq));
        EXPECT_DOUBLE_EQ(seq.back(), rc.ce_after);
      }
    }
  }
}

TEST(PredictedCatalog, SizeFilterAndRejectedFlag) {
  const auto fx = x_fixture();
  SparcConfig cfg;
  auto r = sparc(fx.clusters, fx.physical, fx.functional, cfg);
  auto out = predicted_catalog(r, fx.clusters, cfg);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].members, (ProteinSet{"A", "B", "C", "D", "X"}));
  cfg.min_output_size = 6;
  EXPECT_TRUE(predicted_catalog(r, fx.clusters, cfg).empty());

  cfg = {};
  cfg.delta = 0.95;
  r = sparc(fx.clusters, fx.physical, fx.functional, cfg);
  EXPECT_TRUE(predicted_catalog(r, fx.clusters, cfg).empty());
  EXPECT_EQ(predicted_catalog(r, fx.clusters, cfg, true).size(), 1u);
}

}  // namespace
}  // namespace sparc
