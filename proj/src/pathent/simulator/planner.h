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


#ifndef PATHENT_SIMULATOR_PLANNER_H_
#define PATHENT_SIMULATOR_PLANNER_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "pathent/grid_map/cell.h"
#include "pathent/grid_map/occupancy_grid.h"

namespace pathent {

struct PlannerParams {
  // Cells within this Chebyshev distance of an Occupied cell are blocked.
  int inflation_cells = 1;
  Thresholds thresholds;

  void Validate() const;
};

// Single-source Dijkstra over the belief grid. Free and Unknown cells are
// traversable unless inflated; axis steps cost 1, diagonal steps sqrt(2), and
// a diagonal step may not cut the corner of a blocked cell. The start cell is
// always traversable, and a non-Occupied goal inside the inflation band may be
// entered as the final step.
class PathTree {
 public:
  PathTree(const OccupancyGrid& grid, const Cell& start,
           const PlannerParams& params = {});

  const Cell& start() const { return start_; }

  // Cell path start..goal inclusive, or nullopt if unreachable.
  std::optional<std::vector<Cell>> PathTo(const Cell& goal) const;
  // Path cost in cells (infinity if unreachable).
  double CostTo(const Cell& goal) const;

  bool Traversable(const Cell& c) const;

 private:
  // Predecessor-walk to `goal`, which must have been settled.
  std::vector<Cell> Walk(std::size_t goal) const;
  // Best settled neighbour from which `goal` can be entered as the last step.
  std::optional<std::size_t> FinalApproach(const Cell& goal,
                                           double* cost) const;

  const OccupancyGrid& grid_;
  Cell start_;
  PlannerParams params_;
  std::vector<std::uint8_t> blocked_;
  std::vector<double> cost_;
  std::vector<std::int32_t> parent_;
};

std::optional<std::vector<Cell>> PlanPath(const OccupancyGrid& grid,
                                          const Cell& start, const Cell& goal,
                                          const PlannerParams& params = {});

// Length of a cell path in cells (sum of 1 / sqrt(2) steps).
double PathLengthCells(const std::vector<Cell>& path);

}  // namespace pathent

#endif  // PATHENT_SIMULATOR_PLANNER_H_
