/*
 * Copyright 2026 The pathent Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "pathent/pose_graph/pose_graph.h"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "Eigen/LU"
#include "gtest/gtest.h"
#include "pathent/testing/graph_oracles.h"

namespace pathent {
namespace {

using testing::EnumerateSpanningTrees;
using testing::GraphFromMask;
using testing::PairCount;

WeightedGraph Complete(int n) {
  return GraphFromMask(n, (1u << PairCount(n)) - 1);
}

WeightedGraph PathGraph(int n) {
  WeightedGraph g;
  g.node_count = n;
  for (int i = 0; i + 1 < n; ++i) g.AddEdge(i, i + 1, 1.0);
  return g;
}

Eigen::Matrix3d RandomSpd(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::Matrix3d a;
  for (int i = 0; i < 9; ++i) a(i / 3, i % 3) = u(rng);
  Eigen::Matrix3d spd = a * a.transpose() + 0.1 * Eigen::Matrix3d::Identity();
  return 0.5 * (spd + spd.transpose());
}

TEST(NormalizeAngleTest, HalfOpenInterval) {
  constexpr double kPi = std::numbers::pi;
  EXPECT_DOUBLE_EQ(NormalizeAngle(kPi), kPi);
  EXPECT_DOUBLE_EQ(NormalizeAngle(-kPi), kPi);
  EXPECT_NEAR(NormalizeAngle(3 * kPi / 2), -kPi / 2, 1e-12);
  EXPECT_NEAR(NormalizeAngle(-5 * kPi / 2), -kPi / 2, 1e-12);
  EXPECT_DOUBLE_EQ(NormalizeAngle(0.25), 0.25);
}

TEST(EdgeDOptimalityTest, Examples) {
  EXPECT_NEAR(EdgeDOptimality(Eigen::Matrix3d::Identity()), 1.0, 1e-12);
  EXPECT_NEAR(EdgeDOptimality(Eigen::Vector3d(1, 4, 16).asDiagonal()), 4.0,
              1e-12);
  EXPECT_NEAR(EdgeDOptimality(7.5 * Eigen::Matrix3d::Identity()), 7.5, 1e-12);
}

TEST(EdgeDOptimalityTest, MatchesCubeRootOfDeterminant) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Eigen::Matrix3d info = RandomSpd(rng);
    const double d = EdgeDOptimality(info);
    EXPECT_NEAR(d, std::cbrt(info.determinant()), 1e-10 * d);
    const double c = 0.01 + 10.0 * (rng() % 1000) / 1000.0;
    EXPECT_NEAR(EdgeDOptimality(c * info), c * d, 1e-10 * c * d);
  }
}

TEST(EdgeDOptimalityTest, RejectsMalformed) {
  Eigen::Matrix3d asym = Eigen::Matrix3d::Identity();
  asym(0, 1) = 1e-3;
  EXPECT_THROW(EdgeDOptimality(asym), NotPositiveDefinite);
  EXPECT_THROW(EdgeDOptimality(Eigen::Vector3d(1, 0, 1).asDiagonal()),
               NotPositiveDefinite);
  EXPECT_THROW(EdgeDOptimality(Eigen::Vector3d(1, -2, 1).asDiagonal()),
               NotPositiveDefinite);
}

TEST(PoseGraphTest, IntegrityChecks) {
  PoseGraph g;
  EXPECT_EQ(g.AddNode({0, 0, 0}), 0);
  EXPECT_EQ(g.AddNode({1, 0, 4.0}), 1);
  EXPECT_LE(g.node(1).pose.theta, std::numbers::pi);
  EXPECT_THROW(g.AddEdge(0, 0, Eigen::Matrix3d::Identity(), EdgeKind::kOdometry),
               std::invalid_argument);
  EXPECT_THROW(g.AddEdge(0, 2, Eigen::Matrix3d::Identity(), EdgeKind::kOdometry),
               std::invalid_argument);
  EXPECT_THROW(g.AddEdge(0, 1, -Eigen::Matrix3d::Identity(), EdgeKind::kOdometry),
               NotPositiveDefinite);
  EXPECT_EQ(g.edge_count(), 0);
  g.AddEdge(0, 1, 2.0 * Eigen::Matrix3d::Identity(), EdgeKind::kOdometry);
  EXPECT_NEAR(g.edges()[0].d_optimality, 2.0, 1e-12);
}

TEST(WeightedLaplacianTest, Examples) {
  WeightedGraph single;
  single.node_count = 1;
  EXPECT_EQ(WeightedLaplacian(single), Eigen::MatrixXd::Zero(1, 1));

  WeightedGraph pair;
  pair.node_count = 2;
  pair.AddEdge(0, 1, 1.0);
  Eigen::MatrixXd expected(2, 2);
  expected << 1, -1, -1, 1;
  EXPECT_EQ(WeightedLaplacian(pair), expected);

  WeightedGraph tri;
  tri.node_count = 3;
  tri.AddEdge(0, 1, 2.0);
  tri.AddEdge(1, 2, 3.0);
  tri.AddEdge(0, 2, 5.0);
  const Eigen::MatrixXd L = WeightedLaplacian(tri);
  EXPECT_EQ(L(0, 1), -2.0);
  EXPECT_EQ(L(1, 2), -3.0);
  EXPECT_EQ(L(0, 2), -5.0);
  EXPECT_EQ(L, L.transpose());
  EXPECT_LT(L.rowwise().sum().cwiseAbs().maxCoeff(), 1e-15);
}

TEST(WeightedLaplacianTest, ParallelEdgesAccumulate) {
  WeightedGraph g;
  g.node_count = 2;
  g.AddEdge(0, 1, 1.5);
  g.AddEdge(1, 0, 2.5);
  EXPECT_EQ(WeightedLaplacian(g)(0, 1), -4.0);
  EXPECT_NEAR(std::exp(LogSpanningTrees(g)), 4.0, 1e-12);
}

TEST(LogSpanningTreesTest, Examples) {
  for (int n = 2; n <= 12; ++n) {
    EXPECT_NEAR(LogSpanningTrees(PathGraph(n)), 0.0, 1e-12);
  }
  EXPECT_NEAR(LogSpanningTrees(Complete(3)), std::log(3.0), 1e-12);
  EXPECT_NEAR(LogSpanningTrees(Complete(4)), std::log(16.0), 1e-12);
  EXPECT_NEAR(EnumerateSpanningTrees(Complete(4)), 16.0, 0.0);
  for (int n = 2; n <= 8; ++n) {
    EXPECT_NEAR(LogSpanningTrees(Complete(n)), (n - 2) * std::log(n), 1e-10);
  }
  WeightedGraph single;
  single.node_count = 1;
  EXPECT_EQ(LogSpanningTrees(single), 0.0);
}

TEST(LogSpanningTreesTest, DisconnectedIsDistinctError) {
  WeightedGraph g;
  g.node_count = 4;
  g.AddEdge(0, 1, 1.0);
  g.AddEdge(2, 3, 1.0);
  EXPECT_THROW(LogSpanningTrees(g), DisconnectedGraph);
  EXPECT_THROW(NormalizedTreeConnectivity(g), DisconnectedGraph);
}

TEST(LogSpanningTreesTest, MatrixTreeOnAllSmallUnitGraphs) {
  for (int n = 2; n <= 5; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << PairCount(n)); ++mask) {
      const WeightedGraph g = GraphFromMask(n, mask);
      if (testing::ComponentCount(g) != 1) {
        EXPECT_THROW(LogSpanningTrees(g), DisconnectedGraph);
        continue;
      }
      const double trees = EnumerateSpanningTrees(g);
      ASSERT_NEAR(std::exp(LogSpanningTrees(g)), trees, 1e-9 * trees)
          << "n=" << n << " mask=" << mask;
    }
  }
}

TEST(LogSpanningTreesTest, MatrixTreeOnSampledSixNodeGraphs) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    const WeightedGraph g =
        GraphFromMask(6, static_cast<std::uint32_t>(rng() & 0x7fff));
    if (testing::ComponentCount(g) != 1) continue;
    const double trees = EnumerateSpanningTrees(g);
    ASSERT_NEAR(std::exp(LogSpanningTrees(g)), trees, 1e-9 * trees);
  }
}

TEST(LogSpanningTreesTest, WeightedMatrixTree) {
  std::mt19937_64 rng(17);
  // Rational weights k/8.
  std::uniform_int_distribution<int> numerator(1, 40);
  int checked = 0;
  while (checked < 100) {
    const int n = 2 + static_cast<int>(rng() % 4);
    std::vector<double> w(static_cast<std::size_t>(PairCount(n)));
    for (double& x : w) x = numerator(rng) / 8.0;
    const WeightedGraph g = GraphFromMask(
        n, static_cast<std::uint32_t>(rng() % (1u << PairCount(n))), w);
    if (testing::ComponentCount(g) != 1) continue;
    const double trees = EnumerateSpanningTrees(g);
    ASSERT_NEAR(std::exp(LogSpanningTrees(g)), trees, 1e-9 * trees);
    ++checked;
  }
}

TEST(LogSpanningTreesTest, LargeChainStaysFinite) {
  // Raw determinant would overflow: 2000 nodes of weight 1e3.
  WeightedGraph g;
  g.node_count = 2000;
  for (int i = 0; i + 1 < g.node_count; ++i) g.AddEdge(i, i + 1, 1e3);
  for (int i = 0; i + 10 < g.node_count; i += 10) g.AddEdge(i, i + 10, 1e3);
  const double log_t = LogSpanningTrees(g);
  EXPECT_TRUE(std::isfinite(log_t));
  EXPECT_GT(log_t, 1999 * std::log(1e3));
}

TEST(AlgebraicConnectivityTest, Examples) {
  EXPECT_NEAR(AlgebraicConnectivity(PathGraph(3)), 1.0, 1e-9);
  EXPECT_NEAR(AlgebraicConnectivity(Complete(4)), 4.0, 1e-9);
  WeightedGraph split;
  split.node_count = 4;
  split.AddEdge(0, 1, 1.0);
  split.AddEdge(2, 3, 1.0);
  EXPECT_NEAR(AlgebraicConnectivity(split), 0.0, 1e-9);
  // Path graph P_n: 2 - 2 cos(pi / n).
  for (int n = 2; n <= 20; ++n) {
    EXPECT_NEAR(AlgebraicConnectivity(PathGraph(n)),
                2.0 - 2.0 * std::cos(std::numbers::pi / n), 1e-9);
  }
}

TEST(AlgebraicConnectivityTest, PositiveIffConnected) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> weight(0.5, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const int m = static_cast<int>(rng() % (2 * n));
    const WeightedGraph g = testing::RandomGraph(rng, n, m, weight);
    const double lambda2 = AlgebraicConnectivity(g);
    EXPECT_GE(lambda2, 0.0);
    EXPECT_EQ(lambda2 > 1e-9, testing::ComponentCount(g) == 1);
    EXPECT_EQ(IsConnected(g), testing::ComponentCount(g) == 1);
  }
}

TEST(GraphMetricsTest, MonotoneUnderEdgeAddition) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> weight(0.5, 5.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    WeightedGraph g = PathGraph(n);
    for (auto& e : g.edges) e.weight = weight(rng);
    const double t0 = LogSpanningTrees(g);
    const double l0 = AlgebraicConnectivity(g);
    const double d0 = AverageDegree(g);
    const int a = static_cast<int>(rng() % n);
    const int b = (a + 1 + static_cast<int>(rng() % (n - 1))) % n;
    g.AddEdge(a, b, weight(rng));
    EXPECT_GT(LogSpanningTrees(g), t0);
    EXPECT_GE(AlgebraicConnectivity(g), l0 - 1e-12);
    EXPECT_GT(AverageDegree(g), d0);
  }
}

TEST(AverageDegreeTest, Examples) {
  EXPECT_EQ(AverageDegree(Complete(3)), 2.0);
  WeightedGraph star;
  star.node_count = 4;
  for (int i = 1; i < 4; ++i) star.AddEdge(0, i, 1.0);
  EXPECT_EQ(AverageDegree(star), 1.5);
}

TEST(NormalizedTreeConnectivityTest, Examples) {
  EXPECT_NEAR(NormalizedTreeConnectivity(PathGraph(7)), 0.0, 1e-12);
  EXPECT_NEAR(NormalizedTreeConnectivity(Complete(3)), std::log(3.0) / 2,
              1e-12);
  EXPECT_NEAR(NormalizedTreeConnectivity(Complete(3)), 0.5493, 1e-4);
  EXPECT_NEAR(NormalizedTreeConnectivity(Complete(4)), 0.9242, 1e-4);
}

TEST(GraphUncertaintyTest, Examples) {
  PoseGraph g;
  for (int i = 0; i < 3; ++i) g.AddNode({static_cast<double>(i), 0, 0});
  EXPECT_THROW(GraphUncertainty(g), std::invalid_argument);
  g.AddEdge(0, 1, 2.0 * Eigen::Matrix3d::Identity(), EdgeKind::kOdometry);
  g.AddEdge(1, 2, 4.0 * Eigen::Matrix3d::Identity(), EdgeKind::kOdometry);
  EXPECT_NEAR(GraphUncertainty(g), 3.0, 1e-12);
  const auto [lo, hi] = DOptimalityRange(g);
  EXPECT_NEAR(lo, 2.0, 1e-12);
  EXPECT_NEAR(hi, 4.0, 1e-12);
}

TEST(GraphUncertaintyTest, MatchesRecomputation) {
  std::mt19937_64 rng(41);
  PoseGraph g;
  for (int i = 0; i < 8; ++i) g.AddNode({0.5 * i, 0, 0});
  std::vector<Eigen::Matrix3d> infos;
  for (int k = 0; k < 10; ++k) {
    infos.push_back(RandomSpd(rng));
    const int a = static_cast<int>(rng() % 8);
    g.AddEdge(a, (a + 1 + static_cast<int>(rng() % 7)) % 8, infos.back(),
              EdgeKind::kLoopClosure);
  }
  double mean = 0.0;
  for (const auto& info : infos) mean += std::cbrt(info.determinant());
  EXPECT_NEAR(GraphUncertainty(g), mean / 10.0, 1e-10 * mean);
}

TEST(G2oTest, RoundTrip) {
  PoseGraph g;
  g.AddNode({0.0, 0.0, 0.0});
  g.AddNode({1.0, 0.5, 0.3});
  g.AddNode({1.2, 2.0, -2.9});
  NoiseModel noise;
  g.AddEdge(0, 1, noise.odometry, EdgeKind::kOdometry);
  g.AddEdge(1, 2, noise.odometry, EdgeKind::kOdometry);
  g.AddEdge(0, 2, noise.loop_closure, EdgeKind::kLoopClosure);
  std::stringstream text;
  g.WriteG2o(text);
  EXPECT_EQ(text.str().rfind("VERTEX_SE2 0 0 0 0\n", 0), 0u);
  const PoseGraph back = PoseGraph::ReadG2o(text);
  ASSERT_EQ(back.node_count(), 3);
  ASSERT_EQ(back.edge_count(), 3);
  EXPECT_EQ(back.node(2).pose.theta, g.node(2).pose.theta);
  EXPECT_EQ(back.edges()[2].kind, EdgeKind::kLoopClosure);
  EXPECT_EQ(back.edges()[2].info, noise.loop_closure);
  EXPECT_EQ(LogSpanningTrees(back), LogSpanningTrees(g));
}

TEST(G2oTest, RelativeMeasurement) {
  const Pose2 d = RelativePose({1.0, 1.0, std::numbers::pi / 2}, {1.0, 3.0, 0});
  EXPECT_NEAR(d.x, 2.0, 1e-12);
  EXPECT_NEAR(d.y, 0.0, 1e-12);
  EXPECT_NEAR(d.theta, -std::numbers::pi / 2, 1e-12);
}

TEST(G2oTest, MalformedInputThrows) {
  std::istringstream bad("VERTEX_SE2 0 0 0\n");
  EXPECT_THROW(PoseGraph::ReadG2o(bad), std::invalid_argument);
  std::istringstream gap("VERTEX_SE2 1 0 0 0\n");
  EXPECT_THROW(PoseGraph::ReadG2o(gap), std::invalid_argument);
}

}  // namespace
}  // namespace pathent
