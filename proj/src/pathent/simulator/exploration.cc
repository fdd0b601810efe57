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


#include "pathent/simulator/exploration.h"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "pathent/metrics/record_tick.h"
#include "pathent/raycast/bresenham.h"
#include "pathent/simulator/planner.h"

namespace pathent {
namespace {

constexpr double kSpacingSlack = 1e-9;

Cell PickStart(const OccupancyGrid& truth, const SimConfig& config,
               std::mt19937_64& rng) {
  const Thresholds& t = config.utility.planner.thresholds;
  if (config.start) {
    if (!truth.Contains(*config.start) ||
        truth.state(*config.start, t) != CellState::kFree) {
      throw std::invalid_argument("start cell is not Free in the map");
    }
    return *config.start;
  }
  // Free cells clear of the inflation band, so the robot can leave.
  const int r = config.utility.planner.inflation_cells;
  std::vector<Cell> candidates;
  std::vector<Cell> free_cells;
  for (int y = 0; y < truth.height(); ++y) {
    for (int x = 0; x < truth.width(); ++x) {
      if (truth.state({x, y}, t) != CellState::kFree) continue;
      free_cells.push_back({x, y});
      bool clear = true;
      for (int dy = -r; dy <= r && clear; ++dy) {
        for (int dx = -r; dx <= r && clear; ++dx) {
          const Cell n{x + dx, y + dy};
          clear = truth.Contains(n) && truth.state(n, t) == CellState::kFree;
        }
      }
      if (clear) candidates.push_back({x, y});
    }
  }
  if (free_cells.empty()) {
    throw std::invalid_argument("map has no Free cell to start from");
  }
  const auto& pool = candidates.empty() ? free_cells : candidates;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return pool[pick(rng)];
}

}  // namespace

void SimConfig::Validate() const {
  sensor.Validate();
  log_odds.Validate();
  utility.Validate();
  if (min_cluster_size < 1) {
    throw std::invalid_argument("min_cluster_size must be >= 1");
  }
  if (goal_tolerance_cells < 0) {
    throw std::invalid_argument("goal_tolerance_cells must be >= 0");
  }
  if (!(fd_blacklist_radius >= 0.0) || !(unreachable_blacklist_radius >= 0.0)) {
    throw std::invalid_argument("blacklist radii must be >= 0");
  }
  if (tick_budget < 0) throw std::invalid_argument("tick_budget must be >= 0");
}

const char* StatusName(ExplorationStatus status) {
  switch (status) {
    case ExplorationStatus::kCompleted:
      return "completed";
    case ExplorationStatus::kStuck:
      return "stuck";
    case ExplorationStatus::kBudgetExhausted:
      return "budget_exhausted";
  }
  return "?";
}

Exploration::Exploration(OccupancyGrid truth, Method method,
                         const SimConfig& config, std::uint64_t seed)
    : method_(method), config_(config) {
  config_.Validate();
  if (truth.size() == 0) throw std::invalid_argument("empty map");
  state_.thresholds = config_.utility.planner.thresholds;
  state_.seed = seed;
  state_.rng.seed(seed);
  const Cell start = PickStart(truth, config_, state_.rng);
  state_.belief = OccupancyGrid(truth.width(), truth.height(),
                                truth.resolution(), truth.origin());
  state_.coverage_mask = MakeCoverageMask(truth, start, state_.thresholds);
  state_.truth = std::move(truth);
  state_.robot_cell = start;
  const Point2 p = state_.truth.CellCenter(start);
  state_.robot_pose = {p.x, p.y, 0.0};
  AddNodeAndScan();
}

void Exploration::ScanAndIntegrate() {
  const auto scan = LidarScan(state_.truth, state_.robot_pose, config_.sensor,
                              &state_.rng, state_.thresholds);
  IntegrateScan(state_.belief, scan, config_.log_odds);
  ++state_.scans;
}

void Exploration::AddNodeAndScan() {
  PoseGraph& graph = state_.graph;
  const GraphGrowthParams& growth = config_.utility.growth;
  const int id = graph.AddNode(state_.robot_pose);
  if (id > 0) {
    graph.AddEdge(id - 1, id, growth.noise.odometry, EdgeKind::kOdometry);
  }
  const auto visible = [this](const Pose2& a, const Pose2& b) {
    const Cell ca = state_.belief.WorldToCell({a.x, a.y});
    const Cell cb = state_.belief.WorldToCell({b.x, b.y});
    bool clear = true;
    VisitBresenham(ca, cb, [&](const Cell& c) {
      clear = state_.belief.Contains(c) &&
              state_.belief.state(c, state_.thresholds) !=
                  CellState::kOccupied;
      return clear;
    });
    return clear;
  };
  if (const auto loop = FindLoopClosure(graph, id, id, growth, visible)) {
    graph.AddEdge(*loop, id, growth.noise.loop_closure,
                  EdgeKind::kLoopClosure);
  }
  state_.since_node = 0.0;
  ScanAndIntegrate();
}

bool Exploration::IsFrontierCell(const Cell& c) const {
  const OccupancyGrid& b = state_.belief;
  if (!b.Contains(c) || b.state(c, state_.thresholds) != CellState::kFree) {
    return false;
  }
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      const Cell n{c.x + dx, c.y + dy};
      if ((dx || dy) && b.Contains(n) &&
          b.state(n, state_.thresholds) == CellState::kUnknown) {
        return true;
      }
    }
  }
  return false;
}

AdvanceResult Exploration::AdvanceAlong(const std::vector<Cell>& path,
                                        const Cell& goal) {
  if (path.empty() || path.front() != state_.robot_cell) {
    throw std::invalid_argument("path must start at the robot cell");
  }
  const double res = state_.truth.resolution();
  const double spacing = config_.utility.growth.node_spacing;
  const auto free_in_belief = [this](const Cell& c) {
    return state_.belief.state(c, state_.thresholds) == CellState::kFree;
  };
  // Only a goal that is a frontier now can dissolve on the way.
  const bool watch_goal = IsFrontierCell(goal);
  AdvanceResult result = AdvanceResult::kPathEnd;
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (ChebyshevDistance(state_.robot_cell, goal) <=
        config_.goal_tolerance_cells) {
      result = AdvanceResult::kArrived;
      break;
    }
    const Cell next = path[i];
    if (!free_in_belief(next)) {
      // Look before stepping into a cell that is not known to be free.
      ScanAndIntegrate();
      if (!free_in_belief(next)) {
        result = AdvanceResult::kBlocked;
        break;
      }
      if (watch_goal && !IsFrontierCell(goal)) {
        result = AdvanceResult::kGoalDissolved;
        break;
      }
    }
    if (state_.truth.state(next, state_.thresholds) != CellState::kFree) {
      // Only reachable with a noisy sensor; never step into an obstacle.
      result = AdvanceResult::kBlocked;
      break;
    }
    const double dx = next.x - state_.robot_cell.x;
    const double dy = next.y - state_.robot_cell.y;
    const double step = std::hypot(dx, dy) * res;
    const Point2 p = state_.truth.CellCenter(next);
    state_.robot_cell = next;
    state_.robot_pose = {p.x, p.y, std::atan2(dy, dx)};
    state_.distance += step;
    state_.since_node += step;
    if (state_.since_node + kSpacingSlack >= spacing) {
      AddNodeAndScan();
      if (watch_goal && !IsFrontierCell(goal)) {
        result = AdvanceResult::kGoalDissolved;
        break;
      }
    }
  }
  if (result == AdvanceResult::kPathEnd &&
      ChebyshevDistance(state_.robot_cell, goal) <=
          config_.goal_tolerance_cells) {
    result = AdvanceResult::kArrived;
  }
  if (state_.since_node > 0.0) AddNodeAndScan();
  return result;
}

std::optional<ExplorationStatus> Exploration::Step(const RunHooks& hooks) {
  if (state_.tick >= config_.tick_budget) {
    return ExplorationStatus::kBudgetExhausted;
  }
  const auto all = ClusterFrontiers(
      DetectFrontierCells(state_.belief, state_.thresholds),
      config_.min_cluster_size);
  if (all.empty()) return ExplorationStatus::kCompleted;
  const auto clusters = FilterBlacklist(all, state_.blacklist);
  if (clusters.empty()) return ExplorationStatus::kStuck;

  const auto scores = ScoreCandidates(state_.belief, state_.graph,
                                      state_.robot_cell, clusters,
                                      config_.utility);
  for (const CandidateScore& s : scores) {
    if (!s.reachable) {
      state_.blacklist.Add(s.frontier.centroid,
                           config_.unreachable_blacklist_radius);
    }
  }
  const auto chosen = Select(method_, scores, state_.blacklist);
  if (hooks.candidates_csv != nullptr) {
    if (!candidates_header_written_) {
      WriteCandidateCsvHeader(*hooks.candidates_csv);
      candidates_header_written_ = true;
    }
    WriteCandidateCsvRows(*hooks.candidates_csv, state_.tick + 1, scores,
                          chosen);
  }
  if (!chosen) return ExplorationStatus::kStuck;

  const CandidateScore& target = scores[*chosen];
  const Cell goal = target.frontier.centroid;
  if (method_ == Method::kFd) {
    state_.blacklist.Add(goal, config_.fd_blacklist_radius);
  }
  ++state_.tick;
  const double before = state_.distance;
  AdvanceAlong(target.path, goal);
  if (state_.distance == before) {
    // No progress possible towards this goal; do not pick it again.
    state_.blacklist.Add(goal, config_.unreachable_blacklist_radius);
  }
  RecordTick(trace_, state_, goal);
  if (hooks.on_tick) hooks.on_tick(state_, trace_.back());
  return std::nullopt;
}

ExplorationOutcome Exploration::Run(const RunHooks& hooks) {
  trace_.clear();
  RecordTick(trace_, state_, std::nullopt);
  if (hooks.on_tick) hooks.on_tick(state_, trace_.back());
  std::optional<ExplorationStatus> status;
  while (!(status = Step(hooks))) {
  }
  ExplorationOutcome outcome;
  outcome.status = *status;
  outcome.trace = std::move(trace_);
  outcome.final_state = state_;
  return outcome;
}

ExplorationOutcome RunExploration(const OccupancyGrid& truth, Method method,
                                  const SimConfig& config, std::uint64_t seed,
                                  const RunHooks& hooks) {
  Exploration exploration(truth, method, config, seed);
  return exploration.Run(hooks);
}

}  // namespace pathent
