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

#ifndef PATHENT_RAYCAST_PATH_ENTROPY_H_
#define PATHENT_RAYCAST_PATH_ENTROPY_H_

#include <vector>

#include "pathent/grid_map/cell.h"
#include "pathent/grid_map/occupancy_grid.h"

namespace pathent {

// Straight-line scan from the robot cell to a frontier cell together with the
// cell states seen along it at trace time. The line is not cut at obstacles:
// it measures what lies between robot and frontier, not what is visible.
struct RayPath {
  std::vector<Cell> cells;
  std::vector<CellState> states;

  std::size_t length_cells() const { return cells.size(); }
};

// Probabilities substituted for cell states when scoring a path. Unknown
// cells get the low-entropy value so that paths through unexplored space
// score lower normalized entropy.
struct EntropyParams {
  double p_unk = 0.1;
  double p_ofree = 0.45;

  // Throws std::invalid_argument unless both lie in (0,1) and
  // h(p_unk) < h(p_ofree).
  void Validate() const;
};

// Both cells must lie inside `grid`; throws std::out_of_range otherwise.
RayPath TracePath(const OccupancyGrid& grid, const Cell& robot,
                  const Cell& frontier, const Thresholds& thresholds = {});

// E^n: sum over the path of the binary entropy (bits) of the substituted
// probability of each cell.
double PathEntropy(const RayPath& path, const EntropyParams& params = {});

// K^n: number of cells on the path.
std::size_t PathCellCount(const RayPath& path);

// E^n / K^n, strictly inside (0, 1).
double NormalizedPathEntropy(const RayPath& path,
                             const EntropyParams& params = {});

}  // namespace pathent

#endif  // PATHENT_RAYCAST_PATH_ENTROPY_H_
