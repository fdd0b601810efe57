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


#include "pathent/simulator/lidar.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "pathent/grid_map/map_metrics.h"
#include "pathent/simulator/synthetic_maps.h"

namespace pathent {
namespace {

Pose2 CentreOf(const OccupancyGrid& grid, const Cell& c) {
  const Point2 p = grid.CellCenter(c);
  return {p.x, p.y, 0.0};
}

// Continuous ray against the interior [1, n-1)^2 of an n x n room, in cells:
// distance from the robot centre to the centre of the wall cell the ray
// enters first.
double RoomWallDistance(int n, const Cell& robot, double angle) {
  const double ox = robot.x + 0.5;
  const double oy = robot.y + 0.5;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  double t = 1e18;
  if (c > 1e-12) t = std::min(t, (n - 1 - ox) / c);
  if (c < -1e-12) t = std::min(t, (1 - ox) / c);
  if (s > 1e-12) t = std::min(t, (n - 1 - oy) / s);
  if (s < -1e-12) t = std::min(t, (1 - oy) / s);
  const double px = std::clamp(ox + (t + 1e-9) * c, 0.0, n - 1e-9);
  const double py = std::clamp(oy + (t + 1e-9) * s, 0.0, n - 1e-9);
  const double cx = std::floor(px) + 0.5;
  const double cy = std::floor(py) + 0.5;
  return std::hypot(cx - ox, cy - oy);
}

TEST(SensorConfigTest, Validation) {
  EXPECT_NO_THROW(SensorConfig{}.Validate());
  SensorConfig bad;
  bad.beam_count = 3;
  EXPECT_THROW(bad.Validate(), std::invalid_argument);
  bad = {};
  bad.max_range = 0.0;
  EXPECT_THROW(bad.Validate(), std::invalid_argument);
}

TEST(LidarScanTest, OpenSpaceAllMaxRange) {
  const OccupancyGrid truth(100, 100, 0.1, {}, kFreeRaw);
  const auto scan = LidarScan(truth, CentreOf(truth, {50, 50}), {});
  ASSERT_EQ(scan.size(), 360u);
  for (const Beam& b : scan) {
    EXPECT_FALSE(b.hit);
    EXPECT_EQ(b.range, 2.0);
    EXPECT_EQ(b.cells.front(), (Cell{50, 50}));
  }
}

TEST(LidarScanTest, WallDueEast) {
  OccupancyGrid truth(100, 40, 0.1, {}, kFreeRaw);
  for (int y = 0; y < 40; ++y) truth.set_raw({50, y}, kOccupiedRaw);
  SensorConfig sensor;
  sensor.max_range = 4.0;
  const auto scan = LidarScan(truth, CentreOf(truth, {20, 20}), sensor);
  EXPECT_TRUE(scan[0].hit);
  EXPECT_NEAR(scan[0].range, 3.0, 0.1);
  EXPECT_EQ(scan[0].cells.back(), (Cell{50, 20}));
  // Due west there is 2 m of room and then the map edge.
  EXPECT_FALSE(scan[180].hit);
}

TEST(LidarScanTest, ClosedBoxEveryBeamHits) {
  const OccupancyGrid truth = MakeRoom(10, 10);
  for (const Cell robot : {Cell{5, 5}, Cell{2, 3}, Cell{7, 1}}) {
    const auto scan = LidarScan(truth, CentreOf(truth, robot), {});
    int close = 0;
    for (const Beam& b : scan) {
      ASSERT_TRUE(b.hit);
      EXPECT_EQ(truth.raw(b.cells.back()), kOccupiedRaw);
      for (std::size_t i = 0; i + 1 < b.cells.size(); ++i) {
        EXPECT_EQ(truth.raw(b.cells[i]), kFreeRaw);
      }
      // The discrete line aims at the centre of the max-range cell, so near
      // a corner it can land on the neighbouring wall.
      const double expected = 0.1 * RoomWallDistance(10, robot, b.angle);
      EXPECT_NEAR(b.range, expected, 0.25) << "angle " << b.angle;
      close += std::abs(b.range - expected) <= 0.1 * std::numbers::sqrt2;
    }
    EXPECT_GE(close, 340) << robot;
  }
}

TEST(LidarScanTest, UnknownTruthEndsBeamWithoutHit) {
  OccupancyGrid truth(40, 40, 0.1, {}, kFreeRaw);
  for (int x = 25; x < 40; ++x)
    for (int y = 0; y < 40; ++y) truth.set_raw({x, y}, kUnknown);
  const auto scan = LidarScan(truth, CentreOf(truth, {20, 20}), {});
  EXPECT_FALSE(scan[0].hit);
  EXPECT_EQ(scan[0].cells.back(), (Cell{24, 20}));
  EXPECT_NEAR(scan[0].range, 2.0, 0.0);
}

TEST(LidarScanTest, NoiseIsSeededAndDeterministic) {
  const OccupancyGrid truth = MakeRoom(30, 30);
  SensorConfig sensor;
  sensor.hit_noise_std = 0.05;
  std::mt19937_64 a(5), b(5), c(6);
  const auto sa = LidarScan(truth, CentreOf(truth, {15, 15}), sensor, &a);
  const auto sb = LidarScan(truth, CentreOf(truth, {15, 15}), sensor, &b);
  const auto sc = LidarScan(truth, CentreOf(truth, {15, 15}), sensor, &c);
  int differ = 0;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    EXPECT_EQ(sa[i].range, sb[i].range);
    EXPECT_EQ(sa[i].cells, sb[i].cells);
    differ += sa[i].range != sc[i].range;
  }
  EXPECT_GT(differ, 0);
  EXPECT_THROW(LidarScan(truth, CentreOf(truth, {15, 15}), sensor),
               std::invalid_argument);
}

TEST(IntegrateScanTest, SingleBeamMovesCellsApart) {
  OccupancyGrid truth(20, 5, 0.1, {}, kFreeRaw);
  truth.set_raw({10, 2}, kOccupiedRaw);
  SensorConfig sensor;
  sensor.beam_count = 4;
  const auto scan = LidarScan(truth, CentreOf(truth, {2, 2}), sensor);
  OccupancyGrid belief(20, 5, 0.1);
  IntegrateScan(belief, {scan[0]}, LogOddsParams{});
  for (int x = 2; x < 10; ++x) EXPECT_LT(belief.raw({x, 2}), 50) << x;
  EXPECT_GT(belief.raw({10, 2}), 50);
  EXPECT_EQ(belief.raw({11, 2}), kUnknown);
}

TEST(IntegrateScanTest, RepeatedScansAddUpToClamp) {
  OccupancyGrid truth(20, 5, 0.1, {}, kFreeRaw);
  truth.set_raw({10, 2}, kOccupiedRaw);
  SensorConfig sensor;
  sensor.beam_count = 4;
  const std::vector<Beam> beam = {
      LidarScan(truth, CentreOf(truth, {2, 2}), sensor)[0]};
  OccupancyGrid belief(20, 5, 0.1);
  const LogOddsParams params;
  for (int k = 1; k <= 6; ++k) {
    IntegrateScan(belief, beam, params);
    EXPECT_NEAR(belief.log_odds({10, 2}), std::min(4.0, 0.85 * k), 1e-12);
    EXPECT_NEAR(belief.log_odds({6, 2}), std::max(-4.0, -0.85 * k), 1e-12);
  }
}

TEST(IntegrateScanTest, FullScanRevealsClosedBox) {
  const OccupancyGrid truth = MakeRoom(15, 15);
  OccupancyGrid belief(15, 15, 0.1);
  IntegrateScan(belief, LidarScan(truth, CentreOf(truth, {7, 7}), {}),
                LogOddsParams{});
  EXPECT_GT(CoveragePercent(belief, truth, MakeCoverageMask(truth, Cell{7, 7})),
            95.0);
}

TEST(IntegrateScanTest, BeliefNeverContradictsTruth) {
  const OccupancyGrid truth = MakeMultiRoom(3);
  OccupancyGrid belief(truth.width(), truth.height(), truth.resolution());
  for (const Cell robot : {Cell{10, 10}, Cell{30, 12}, Cell{45, 45}}) {
    if (truth.raw(robot) != kFreeRaw) continue;
    IntegrateScan(belief, LidarScan(truth, CentreOf(truth, robot), {}),
                  LogOddsParams{});
  }
  for (std::size_t i = 0; i < belief.size(); ++i) {
    const Cell c = belief.CellAt(i);
    if (belief.raw(c) == kUnknown) continue;
    EXPECT_EQ(belief.raw(c) > 50, truth.raw(c) == kOccupiedRaw) << c;
  }
}

}  // namespace
}  // namespace pathent
