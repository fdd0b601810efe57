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


#ifndef PATHENT_SIMULATOR_EXPLORATION_H_
#define PATHENT_SIMULATOR_EXPLORATION_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "pathent/grid_map/log_odds.h"
#include "pathent/metrics/trace.h"
#include "pathent/simulator/lidar.h"
#include "pathent/simulator/sim_state.h"
#include "pathent/utility/utility.h"

namespace pathent {

struct SimConfig {
  SensorConfig sensor;
  LogOddsParams log_odds;
  UtilityParams utility;
  int min_cluster_size = kDefaultMinClusterSize;
  int goal_tolerance_cells = 2;
  double fd_blacklist_radius = 3.0;           // cells
  double unreachable_blacklist_radius = 3.0;  // cells
  int tick_budget = 150;
  // Start cell; when unset the run's seed picks a Free, non-inflated cell.
  std::optional<Cell> start;

  // Throws std::invalid_argument describing the first bad field.
  void Validate() const;
};

enum class ExplorationStatus { kCompleted, kStuck, kBudgetExhausted };

const char* StatusName(ExplorationStatus status);

struct ExplorationOutcome {
  ExplorationStatus status = ExplorationStatus::kCompleted;
  Trace trace;
  SimState final_state;
};

enum class AdvanceResult {
  kPathEnd,        // walked the whole path
  kArrived,        // within goal tolerance
  kGoalDissolved,  // the goal stopped being a frontier cell
  kBlocked,        // next cell is not Free after sensing it
};

struct RunHooks {
  // Called after every recorded tick, including tick 0.
  std::function<void(const SimState&, const TickRecord&)> on_tick;
  // Receives the per-candidate CSV (header first) when set.
  std::ostream* candidates_csv = nullptr;
};

// One closed-loop run. Deterministic given (truth, method, config, seed).
class Exploration {
 public:
  // Validates the config and truth, places the robot, adds pose node 0 and
  // integrates the first scan. Throws std::invalid_argument on bad input.
  Exploration(OccupancyGrid truth, Method method, const SimConfig& config,
              std::uint64_t seed);

  const SimState& state() const { return state_; }
  SimState& mutable_state() { return state_; }
  Method method() const { return method_; }

  // Takes one decision and acts on it. Returns the terminal status if the
  // run ended instead; the tick counter then stays unchanged.
  std::optional<ExplorationStatus> Step(const RunHooks& hooks = {});

  // Records tick 0, then steps until a terminal status.
  ExplorationOutcome Run(const RunHooks& hooks = {});

  // Moves the robot along `path` (path.front() must be the robot cell),
  // adding a node and scan every node_spacing meters and one more where it
  // stops. Stops early within goal tolerance, when a goal that started as a
  // frontier cell stops being one, or before a cell that is not Free.
  AdvanceResult AdvanceAlong(const std::vector<Cell>& path, const Cell& goal);

  void ScanAndIntegrate();
  // Appends a pose node at the robot pose with its odometry edge and, if any,
  // one loop-closure edge, then scans.
  void AddNodeAndScan();

  // Free in belief with at least one Unknown 8-neighbour.
  bool IsFrontierCell(const Cell& c) const;

 private:
  Method method_;
  SimConfig config_;
  SimState state_;
  Trace trace_;
  bool candidates_header_written_ = false;
};

ExplorationOutcome RunExploration(const OccupancyGrid& truth, Method method,
                                  const SimConfig& config, std::uint64_t seed,
                                  const RunHooks& hooks = {});

}  // namespace pathent

#endif  // PATHENT_SIMULATOR_EXPLORATION_H_
