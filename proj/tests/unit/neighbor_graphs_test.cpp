#include <gtest/gtest.h>

#include <random>

#include "../support/expect_error.hpp"
#include "../support/oracle.hpp"
#include "proxigraph/neighbor_graphs.hpp"

using namespace proxigraph;
using oracle::Combine;
using oracle::Rel;

namespace {

const PointSet kLine{{0, 0}, {1, 0}, {3, 0}};

oracle::EdgeSet build(const PointSet& ps, NeighborKind kind, std::optional<std::size_t> k = {}) {
  return oracle::edge_set(neighbor_graph(ps, NeighborVariant(kind, k)));
}

struct Case {
  NeighborKind kind;
  Rel rel;
  Combine how;
  bool takes_k;
};

constexpr Case kCases[] = {
    {NeighborKind::Nearest, Rel::Among, Combine::Or, false},
    {NeighborKind::Knn, Rel::Among, Combine::Or, true},
    {NeighborKind::Kth, Rel::Exactly, Combine::Or, true},
    {NeighborKind::Mutual, Rel::Among, Combine::And, false},
    {NeighborKind::MutualK, Rel::Among, Combine::And, true},
    {NeighborKind::MutualKth, Rel::Exactly, Combine::And, true},
    {NeighborKind::Asym, Rel::Among, Combine::Xor, false},
    {NeighborKind::AsymK, Rel::Among, Combine::Xor, true},
    {NeighborKind::AsymKth, Rel::Exactly, Combine::Xor, true},
    {NeighborKind::Furthest, Rel::Furthest, Combine::Or, false},
};

}  // namespace

TEST(NeighborGraph, LineExamples) {
  EXPECT_EQ(build(kLine, NeighborKind::Nearest), (oracle::EdgeSet{{0, 1}, {1, 2}}));
  EXPECT_EQ(build(kLine, NeighborKind::Mutual), (oracle::EdgeSet{{0, 1}}));
  EXPECT_EQ(build(kLine, NeighborKind::Asym), (oracle::EdgeSet{{1, 2}}));
  EXPECT_EQ(build({{0, 0}, {5, 0}}, NeighborKind::Furthest), (oracle::EdgeSet{{0, 1}}));
}

TEST(NeighborGraph, KnnWithAllOthersIsComplete) {
  std::mt19937_64 gen(1);
  const auto ps = oracle::random_points(gen, 9);
  EXPECT_EQ(neighbor_graph(ps, {NeighborKind::Knn, 8}).edge_count(), 9u * 8 / 2);
}

TEST(NeighborGraph, DefaultK) { EXPECT_EQ(kDefaultNeighborK, 3u); }

TEST(NeighborGraph, VariantValidation) {
  EXPECT_PG_ERROR(NeighborVariant(NeighborKind::Knn), ErrorKind::MissingParameter);
  EXPECT_PG_ERROR(NeighborVariant(NeighborKind::Knn, 0), ErrorKind::KOutOfRange);
  EXPECT_PG_ERROR(NeighborVariant(NeighborKind::Nearest, 2), ErrorKind::InvalidParameter);
  EXPECT_PG_ERROR(neighbor_graph(kLine, {NeighborKind::Kth, 3}), ErrorKind::KOutOfRange);
  EXPECT_PG_ERROR(neighbor_graph({{0, 0}}, {NeighborKind::Nearest}), ErrorKind::TooFewPoints);
  EXPECT_PG_ERROR(neighbor_graph({{0, 0}, {0, 0}}, {NeighborKind::Nearest}), ErrorKind::DuplicatePoints);
}

TEST(NeighborGraph, TiesResolveByIndex) {
  // 0 is equidistant from 1 and 2: its nearest neighbor is 1, its furthest 2.
  const PointSet ps{{0, 0}, {1, 0}, {-1, 0}};
  EXPECT_EQ(build(ps, NeighborKind::Kth, 1), (oracle::EdgeSet{{0, 1}, {0, 2}}));
  EXPECT_EQ(build(ps, NeighborKind::MutualK, 1), (oracle::EdgeSet{{0, 1}}));
  EXPECT_EQ(build(ps, NeighborKind::Furthest), (oracle::EdgeSet{{0, 2}, {1, 2}}));
}

TEST(NeighborGraph, AllVariantsMatchOracle) {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial * 3;
    const auto ps = trial % 4 == 0 ? oracle::random_grid_points(gen, n, 10) : oracle::random_points(gen, n);
    for (const auto& c : kCases) {
      if (!c.takes_k) {
        EXPECT_EQ(build(ps, c.kind), oracle::neighbor_graph(ps, c.rel, 1, c.how)) << trial;
        continue;
      }
      for (std::size_t k : {1u, 2u, 3u, 5u}) {
        if (k > n - 1) continue;
        EXPECT_EQ(build(ps, c.kind, k), oracle::neighbor_graph(ps, c.rel, k, c.how)) << trial << " k=" << k;
      }
    }
  }
}

TEST(NeighborGraph, PartitionAndContainmentProperties) {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto ps = oracle::random_points(gen, 10 + trial * 9);
    EXPECT_EQ(neighbor_graph(ps, {NeighborKind::Nearest}), neighbor_graph(ps, {NeighborKind::Knn, 1}));
    EXPECT_EQ(neighbor_graph(ps, {NeighborKind::Mutual}), neighbor_graph(ps, {NeighborKind::MutualK, 1}));
    for (std::size_t k : {1u, 2u, 3u, 5u}) {
      const auto knn = build(ps, NeighborKind::Knn, k), mutual = build(ps, NeighborKind::MutualK, k),
                 asym = build(ps, NeighborKind::AsymK, k);
      oracle::EdgeSet both = mutual;
      both.insert(asym.begin(), asym.end());
      EXPECT_EQ(both, knn);
      for (const auto& e : mutual) EXPECT_FALSE(asym.count(e));

      const auto kth = neighbor_graph(ps, {NeighborKind::Kth, k});
      const auto knn_g = neighbor_graph(ps, {NeighborKind::Knn, k});
      EXPECT_TRUE(kth.subset_of(knn_g));
      EXPECT_TRUE(knn_g.subset_of(neighbor_graph(ps, {NeighborKind::Knn, k + 1})));
    }
    const auto far = neighbor_graph(ps, {NeighborKind::Furthest});
    std::vector<int> degree(ps.size());
    for (const auto& [a, b] : far.edges()) ++degree[a], ++degree[b];
    for (int d : degree) EXPECT_GE(d, 1);
  }
}

TEST(NeighborGraph, GridPathMatchesOracleRelation) {
  std::mt19937_64 gen(4);
  const auto ps = oracle::random_points(gen, 1300);
  // Compare with the full-order definition on a subset of vertices.
  const auto g = build(ps, NeighborKind::Knn, 3);
  const auto lat = oracle::lattice(ps);
  for (std::size_t p = 0; p < ps.size(); p += 97)
    for (std::size_t q = 0; q < ps.size(); ++q) {
      if (p == q) continue;
      const bool expected = oracle::rank(lat, p, q) < 3 || oracle::rank(lat, q, p) < 3;
      ASSERT_EQ(g.count(oracle::ordered(p, q)) == 1, expected) << p << ' ' << q;
    }
}
