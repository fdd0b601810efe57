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


#include "pathent/simulator/planner.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <utility>

namespace pathent {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Step {
  int dx;
  int dy;
  double cost;
};

constexpr Step kSteps[8] = {
    {0, -1, 1.0},  {-1, 0, 1.0},  {1, 0, 1.0},  {0, 1, 1.0},
    {-1, -1, std::numbers::sqrt2}, {1, -1, std::numbers::sqrt2},
    {-1, 1, std::numbers::sqrt2},  {1, 1, std::numbers::sqrt2}};

}  // namespace

void PlannerParams::Validate() const {
  if (inflation_cells < 0) {
    throw std::invalid_argument("inflation_cells must be >= 0");
  }
  thresholds.Validate();
}

PathTree::PathTree(const OccupancyGrid& grid, const Cell& start,
                   const PlannerParams& params)
    : grid_(grid),
      start_(start),
      params_(params),
      blocked_(grid.size(), 0),
      cost_(grid.size(), kInf),
      parent_(grid.size(), -1) {
  if (!grid.Contains(start)) {
    throw std::out_of_range("planner start outside grid");
  }
  const int r = params.inflation_cells;
  for (int y = 0; y < grid.height(); ++y) {
    for (int x = 0; x < grid.width(); ++x) {
      if (grid.state({x, y}, params.thresholds) != CellState::kOccupied) {
        continue;
      }
      for (int yy = std::max(0, y - r); yy <= std::min(grid.height() - 1, y + r);
           ++yy) {
        for (int xx = std::max(0, x - r);
             xx <= std::min(grid.width() - 1, x + r); ++xx) {
          blocked_[grid.Index({xx, yy})] = 1;
        }
      }
    }
  }
  blocked_[grid.Index(start)] = 0;

  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> open;
  const std::size_t s = grid.Index(start);
  cost_[s] = 0.0;
  open.push({0.0, s});
  while (!open.empty()) {
    const auto [c, i] = open.top();
    open.pop();
    if (c > cost_[i]) continue;
    const Cell cell = grid.CellAt(i);
    for (const Step& step : kSteps) {
      const Cell n{cell.x + step.dx, cell.y + step.dy};
      if (!Traversable(n)) continue;
      if (step.dx != 0 && step.dy != 0 &&
          (!Traversable({cell.x + step.dx, cell.y}) ||
           !Traversable({cell.x, cell.y + step.dy}))) {
        continue;
      }
      const std::size_t j = grid.Index(n);
      const double nc = c + step.cost;
      if (nc < cost_[j]) {
        cost_[j] = nc;
        parent_[j] = static_cast<std::int32_t>(i);
        open.push({nc, j});
      }
    }
  }
}

bool PathTree::Traversable(const Cell& c) const {
  return grid_.Contains(c) && !blocked_[grid_.Index(c)];
}

std::vector<Cell> PathTree::Walk(std::size_t goal) const {
  std::vector<Cell> path;
  for (std::int32_t i = static_cast<std::int32_t>(goal); i >= 0;
       i = parent_[i]) {
    path.push_back(grid_.CellAt(static_cast<std::size_t>(i)));
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<std::size_t> PathTree::FinalApproach(const Cell& goal,
                                                   double* cost) const {
  if (grid_.state(goal, params_.thresholds) == CellState::kOccupied) {
    return std::nullopt;
  }
  std::optional<std::size_t> best;
  double best_cost = kInf;
  for (const Step& step : kSteps) {
    const Cell n{goal.x - step.dx, goal.y - step.dy};
    if (!grid_.Contains(n)) continue;
    if (step.dx != 0 && step.dy != 0 &&
        (grid_.state({goal.x - step.dx, goal.y}, params_.thresholds) ==
             CellState::kOccupied ||
         grid_.state({goal.x, goal.y - step.dy}, params_.thresholds) ==
             CellState::kOccupied)) {
      continue;
    }
    const std::size_t j = grid_.Index(n);
    const double c = cost_[j] + step.cost;
    if (c < best_cost || (c == best_cost && best && j < *best)) {
      best = j;
      best_cost = c;
    }
  }
  if (!best || best_cost == kInf) return std::nullopt;
  *cost = best_cost;
  return best;
}

std::optional<std::vector<Cell>> PathTree::PathTo(const Cell& goal) const {
  if (!grid_.Contains(goal)) return std::nullopt;
  const std::size_t g = grid_.Index(goal);
  if (cost_[g] < kInf) return Walk(g);
  double cost;
  const auto via = FinalApproach(goal, &cost);
  if (!via) return std::nullopt;
  std::vector<Cell> path = Walk(*via);
  path.push_back(goal);
  return path;
}

double PathTree::CostTo(const Cell& goal) const {
  if (!grid_.Contains(goal)) return kInf;
  const std::size_t g = grid_.Index(goal);
  if (cost_[g] < kInf) return cost_[g];
  double cost = kInf;
  FinalApproach(goal, &cost);
  return cost;
}

std::optional<std::vector<Cell>> PlanPath(const OccupancyGrid& grid,
                                          const Cell& start, const Cell& goal,
                                          const PlannerParams& params) {
  return PathTree(grid, start, params).PathTo(goal);
}

double PathLengthCells(const std::vector<Cell>& path) {
  double length = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    length += CellDistance(path[i - 1], path[i]);
  }
  return length;
}

}  // namespace pathent
