#include <gtest/gtest.h>

#include <random>

#include "sparc/derivability.hpp"
#include "support/oracles.hpp"

namespace sparc {
namespace {

Network from_edges(std::initializer_list<Edge> edges, std::initializer_list<std::string> extra = {}) {
  NetworkBuilder b;
  for (const auto& n : extra) b.add_node(n);
  for (const auto& e : edges) b.add_edge(e.a, e.b, e.weight);
  return b.build();
}

Network clique(const std::vector<std::string>& nodes) {
  NetworkBuilder b;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) b.add_edge(nodes[i], nodes[j], 1.0);
  }
  return b.build();
}

// Components {A,B,C} and {D,E} inside {A..E}.
Network split_complex() {
  return from_edges({{"A", "B", 1}, {"A", "C", 1}, {"D", "E", 1}});
}

Network triangle_with_leaves() {
  return from_edges({{"A", "B", 1}, {"B", "C", 1}, {"A", "C", 1}, {"A", "L1", 1}, {"A", "L2", 1}, {"A", "L3", 1}});
}

TEST(ComponentScore, Cases) {
  EXPECT_DOUBLE_EQ(component_score(clique({"A", "B", "C", "D"}), ProteinSet{"A", "B", "C", "D"}), 1.0);
  EXPECT_DOUBLE_EQ(component_score(split_complex(), ProteinSet{"A", "B", "C", "D", "E"}), 0.6);
  const auto g = from_edges({{"A", "X", 1}, {"B", "Y", 1}});
  EXPECT_DOUBLE_EQ(component_score(g, ProteinSet{"A", "B"}), 0.0);
}

TEST(ComponentScore, IsolatedAndAbsentMembersIgnored) {
  const auto g = from_edges({{"A", "B", 1}}, {"C"});
  EXPECT_DOUBLE_EQ(component_score(g, ProteinSet{"A", "B", "C", "Q"}), 1.0);
}

TEST(EdgeScore, Cases) {
  EXPECT_DOUBLE_EQ(edge_score(clique({"A", "B", "C"}), ProteinSet{"A", "B", "C"}), 1.0);
  EXPECT_DOUBLE_EQ(edge_score(triangle_with_leaves(), ProteinSet{"A", "B", "C"}), 0.5);
  const auto g = from_edges({}, {"A", "B"});
  EXPECT_DOUBLE_EQ(edge_score(g, ProteinSet{"A", "B"}), 0.0);
}

TEST(EdgeScore, NeighborNeighborEdgesCount) {
  auto g = from_edges({{"A", "B", 1}, {"A", "X", 1}, {"B", "Y", 1}, {"X", "Y", 1}});
  EXPECT_DOUBLE_EQ(edge_score(g, ProteinSet{"A", "B"}), 0.25);
}

TEST(EdgeScore, Weighted) {
  auto g = from_edges({{"A", "B", 0.6}, {"A", "X", 0.2}});
  EXPECT_DOUBLE_EQ(edge_score(g, ProteinSet{"A", "B"}), 0.6 / 0.8);
}

TEST(CeScore, Cases) {
  EXPECT_DOUBLE_EQ(ce_score(clique({"A", "B", "C", "D"}), ProteinSet{"A", "B", "C", "D"}), 1.0);
  // CS = 0.6 from the split, ES = 3/6 from three leaf edges on A.
  auto g = from_edges({{"A", "B", 1}, {"A", "C", 1}, {"D", "E", 1}, {"A", "L1", 1}, {"A", "L2", 1}, {"A", "L3", 1}});
  const ProteinSet five{"A", "B", "C", "D", "E"};
  EXPECT_DOUBLE_EQ(component_score(g, five), 0.6);
  EXPECT_DOUBLE_EQ(edge_score(g, five), 0.5);
  EXPECT_DOUBLE_EQ(ce_score(g, five), 0.3);
  EXPECT_DOUBLE_EQ(ce_score(from_edges({}, {"A", "B"}), ProteinSet{"A", "B"}), 0.0);
}

TEST(EdgeDensity, Cases) {
  // Seven members joined by a path of six edges plus two chords.
  auto g = from_edges({{"m1", "m2", 1}, {"m2", "m3", 1}, {"m3", "m4", 1}, {"m4", "m5", 1}, {"m5", "m6", 1},
                       {"m6", "m7", 1}, {"m1", "m3", 1}, {"m5", "m7", 1}});
  const ProteinSet seven{"m1", "m2", "m3", "m4", "m5", "m6", "m7"};
  EXPECT_NEAR(edge_density(g, seven), 0.1905, 5e-5);
  EXPECT_DOUBLE_EQ(edge_density(g, seven), 8.0 / 42.0);
  EXPECT_DOUBLE_EQ(edge_density(from_edges({{"A", "B", 1}}), ProteinSet{"A", "B"}), 0.5);
  EXPECT_DOUBLE_EQ(edge_density(from_edges({}, {"A", "B"}), ProteinSet{"A", "B"}), 0.0);
  EXPECT_THROW(edge_density(g, ProteinSet{"m1", "zz"}), ArgumentError);
}

TEST(DerivabilityReport, RecordFields) {
  auto g = from_edges({{"A", "B", 1}, {"C", "D", 1}}, {"E"});
  ComplexSet cat;
  cat.add({"split", {"A", "B", "C", "D", "E", "Q"}});
  cat.add({"pair", {"A", "B"}});
  const auto rep = derivability_report(g, cat, 2, 0.4, "P");
  ASSERT_EQ(rep.records.size(), 2u);
  const auto& r = rep.records[0];
  EXPECT_EQ(r.present_count, 5u);
  EXPECT_EQ(r.nonisolated_count, 4u);
  EXPECT_EQ(r.component_sizes, (std::vector<std::size_t>{2, 2, 1}));
  EXPECT_DOUBLE_EQ(r.cs, 0.5);
  EXPECT_TRUE(r.k_protein);
  EXPECT_FALSE(r.k_network);
  EXPECT_DOUBLE_EQ(*r.density, 2.0 / 20.0);
  EXPECT_TRUE(rep.records[1].k_network);
  EXPECT_EQ(rep.index_counts, (IndexCounts{2, 1, 2}));
}

TEST(DerivabilityReport, IsolatedPresentMemberBreaksNetworkDerivability) {
  auto g = from_edges({{"A", "B", 1}, {"B", "C", 1}}, {"D"});
  ComplexSet cat;
  cat.add({"c", {"A", "B", "C", "D"}});
  const auto& r = derivability_report(g, cat, 1, 0.0).records[0];
  EXPECT_DOUBLE_EQ(r.cs, 1.0);
  EXPECT_FALSE(r.k_network);
}

TEST(DerivabilityReport, EmptyCatalogAndValidation) {
  const auto g = clique({"A", "B"});
  const auto rep = derivability_report(g, ComplexSet{}, 4, 0.4);
  EXPECT_EQ(rep.index_counts, (IndexCounts{0, 0, 0}));
  EXPECT_THROW(derivability_report(g, ComplexSet{}, 0, 0.4), ArgumentError);
  EXPECT_THROW(derivability_report(g, ComplexSet{}, 1, 1.5), ArgumentError);
}

TEST(DerivabilityReport, MissingDensityWhenFewerThanTwoPresent) {
  const auto g = clique({"A", "B"});
  ComplexSet cat;
  cat.add({"one", {"A", "Z"}});
  EXPECT_FALSE(derivability_report(g, cat, 1, 0.0).records[0].density.has_value());
}

TEST(CeProfile, StartsAtDerivableCountAndDecreases) {
  std::mt19937_64 rng(3);
  const auto dense = testing::random_dense_graph(rng, 30, 0.15);
  const auto g = dense.to_network();
  ComplexSet cat;
  for (int i = 0; i < 40; ++i) cat.add({"c" + std::to_string(i), testing::random_subset(rng, dense.names, 7, 2)});
  std::vector<double> ts;
  for (int i = 0; i <= 10; ++i) ts.push_back(i / 10.0);
  const auto prof = ce_profile(g, cat, 3, ts);
  ASSERT_EQ(prof.size(), ts.size());
  EXPECT_EQ(prof[0].second, derivability_report(g, cat, 3, 0.0).index_counts.protein);
  for (std::size_t i = 1; i < prof.size(); ++i) EXPECT_LE(prof[i].second, prof[i - 1].second);
}

TEST(PartitionSparse, Threshold) {
  // CE 0.3 for "low"; CE 0.5 for "mid": triangle with three leaf edges.
  auto g = from_edges({{"A", "B", 1}, {"A", "C", 1}, {"D", "E", 1}, {"A", "L1", 1}, {"A", "L2", 1}, {"A", "L3", 1},
                       {"X", "Y", 1}, {"Y", "Z", 1}, {"X", "Z", 1}, {"X", "M1", 1}, {"X", "M2", 1}, {"X", "M3", 1}});
  ComplexSet cat;
  cat.add({"low", {"A", "B", "C", "D", "E"}});
  cat.add({"mid", {"X", "Y", "Z"}});
  cat.add({"tiny", {"Q"}});
  const auto rep = derivability_report(g, cat, 2, 0.4);
  EXPECT_DOUBLE_EQ(rep.records[0].ce, 0.3);
  EXPECT_DOUBLE_EQ(rep.records[1].ce, 0.5);
  const auto part = partition_sparse(rep, cat);
  ASSERT_EQ(part.sparse.size(), 1u);
  ASSERT_EQ(part.dense.size(), 1u);
  EXPECT_EQ(part.sparse[0].id, "low");
  EXPECT_EQ(part.dense[0].id, "mid");

  EXPECT_TRUE(partition_sparse(derivability_report(g, cat, 2, 0.0), cat).sparse.empty());
  EXPECT_TRUE(partition_sparse(derivability_report(g, cat, 2, 1.0), cat).dense.empty());
}

TEST(PartitionSparse, UnknownIdIsIntegrityError) {
  const auto g = clique({"A", "B"});
  ComplexSet cat;
  cat.add({"x", {"A", "B"}});
  const auto rep = derivability_report(g, cat, 1, 0.5);
  EXPECT_THROW(partition_sparse(rep, ComplexSet{}), IntegrityError);
}

TEST(ComponentScore, MatchesReachabilityOracle) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    const auto dense = testing::random_dense_graph(rng, 10, 0.3);
    const auto g = dense.to_network();
    const auto members = testing::random_subset(rng, dense.names, 6);
    EXPECT_DOUBLE_EQ(component_score(g, members), testing::oracle_component_score(dense, members));
    EXPECT_NEAR(edge_score(g, members), testing::oracle_edge_score(dense, members), 1e-12);
  }
}

TEST(Scores, RangeAndProduct) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto dense = testing::random_dense_graph(rng, 12, 0.25);
    const auto g = dense.to_network();
    const auto m = testing::random_subset(rng, dense.names, 8);
    const double cs = component_score(g, m), es = edge_score(g, m), ce = ce_score(g, m);
    EXPECT_GE(cs, 0.0);
    EXPECT_LE(cs, 1.0);
    EXPECT_GE(es, 0.0);
    EXPECT_LE(es, 1.0);
    EXPECT_DOUBLE_EQ(ce, cs * es);
  }
}

TEST(ComponentScore, IntraEdgeToIsolatedMemberCanLowerScore) {
  // Triangle {A,B,C}, pair {D,E}, isolated F: CS = 3/5. Linking F to E
  // enlarges B' without enlarging the largest component: CS = 3/6.
  auto before = from_edges({{"A", "B", 1}, {"B", "C", 1}, {"A", "C", 1}, {"D", "E", 1}}, {"F"});
  auto after = from_edges({{"A", "B", 1}, {"B", "C", 1}, {"A", "C", 1}, {"D", "E", 1}, {"E", "F", 1}});
  const ProteinSet six{"A", "B", "C", "D", "E", "F"};
  EXPECT_DOUBLE_EQ(component_score(before, six), 0.6);
  EXPECT_DOUBLE_EQ(component_score(after, six), 0.5);
  EXPECT_GE(edge_score(after, six), edge_score(before, six));
}

TEST(ComponentScore, IntraEdgeBetweenNonIsolatedMembersNeverLowersScore) {
  std::mt19937_64 rng(41);
  int checked = 0;
  while (checked < 500) {
    const auto dense = testing::random_dense_graph(rng, 10, 0.25);
    const auto g = dense.to_network();
    const auto m = testing::random_subset(rng, dense.names, 7, 2);
    std::vector<std::string> linked;
    for (const auto& x : m) {
      for (const auto& y : m) {
        if (x != y && g.weight(*g.find(x), *g.find(y)) > 0.0) {
          linked.push_back(x);
          break;
        }
      }
    }
    for (std::size_t i = 0; i < linked.size(); ++i) {
      for (std::size_t j = i + 1; j < linked.size(); ++j) {
        if (g.weight(*g.find(linked[i]), *g.find(linked[j])) > 0.0) continue;
        NetworkBuilder b;
        for (const auto& e : g.edges()) b.add_edge(e.a, e.b, e.weight);
        for (const auto& n : g.names()) b.add_node(n);
        b.add_edge(linked[i], linked[j], 0.5);
        EXPECT_GE(component_score(b.build(), m), component_score(g, m));
        ++checked;
      }
    }
  }
}

TEST(DerivabilityReport, KMonotonicity) {
  std::mt19937_64 rng(31);
  const auto dense = testing::random_dense_graph(rng, 20, 0.2);
  const auto g = dense.to_network();
  std::vector<std::string> pool = dense.names;
  pool.push_back("absent1");
  pool.push_back("absent2");
  ComplexSet cat;
  for (int i = 0; i < 60; ++i) cat.add({"c" + std::to_string(i), testing::random_subset(rng, pool, 8)});
  for (std::size_t k = 1; k < 8; ++k) {
    const auto a = derivability_report(g, cat, k, 0.3);
    const auto b = derivability_report(g, cat, k + 1, 0.3);
    for (std::size_t i = 0; i < cat.size(); ++i) {
      if (b.records[i].k_protein) EXPECT_TRUE(a.records[i].k_protein);
      if (b.records[i].k_network) EXPECT_TRUE(a.records[i].k_network);
      if (a.records[i].k_network) EXPECT_TRUE(a.records[i].k_protein);
    }
  }
}

}  // namespace
}  // namespace sparc
