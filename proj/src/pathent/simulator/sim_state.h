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


#ifndef PATHENT_SIMULATOR_SIM_STATE_H_
#define PATHENT_SIMULATOR_SIM_STATE_H_

#include <cstdint>
#include <random>

#include "pathent/frontier/frontier.h"
#include "pathent/grid_map/map_metrics.h"
#include "pathent/grid_map/occupancy_grid.h"
#include "pathent/pose_graph/pose_graph.h"

namespace pathent {

// Everything one exploration run owns. Poses are ground truth.
struct SimState {
  OccupancyGrid truth;
  OccupancyGrid belief;
  Thresholds thresholds;
  Pose2 robot_pose;
  Cell robot_cell;
  PoseGraph graph;
  Blacklist blacklist;
  int tick = 0;
  std::uint64_t seed = 0;
  std::mt19937_64 rng;
  double distance = 0.0;    // m travelled in total
  double since_node = 0.0;  // m travelled since the last pose node
  int scans = 0;
  CoverageMask coverage_mask;
};

}  // namespace pathent

#endif  // PATHENT_SIMULATOR_SIM_STATE_H_
