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


#ifndef PATHENT_SIMULATOR_LIDAR_H_
#define PATHENT_SIMULATOR_LIDAR_H_

#include <random>
#include <vector>

#include "pathent/grid_map/cell.h"
#include "pathent/grid_map/log_odds.h"
#include "pathent/grid_map/occupancy_grid.h"
#include "pathent/pose_graph/pose_graph.h"

namespace pathent {

struct SensorConfig {
  double max_range = 2.0;  // m
  int beam_count = 360;
  double hit_noise_std = 0.0;  // m

  void Validate() const;
};

struct Beam {
  double angle = 0.0;  // rad, world frame
  double range = 0.0;  // m
  bool hit = false;
  // Cells the beam covers, robot cell first; when `hit` the last one is the
  // obstacle.
  std::vector<Cell> cells;
};

// Beams at angles 2*pi*k/beam_count. Each marches a Bresenham line from the
// robot cell towards the max-range endpoint and stops at the first Occupied
// truth cell (hit). Truth cells that are Unknown or off the map end the beam
// without a hit and are not included. `rng` is only used when
// hit_noise_std > 0.
std::vector<Beam> LidarScan(const OccupancyGrid& truth, const Pose2& pose,
                            const SensorConfig& sensor,
                            std::mt19937_64* rng = nullptr,
                            const Thresholds& thresholds = {});

void IntegrateScan(OccupancyGrid& belief, const std::vector<Beam>& scan,
                   const LogOddsParams& params);

}  // namespace pathent

#endif  // PATHENT_SIMULATOR_LIDAR_H_
