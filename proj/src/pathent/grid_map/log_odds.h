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

#ifndef PATHENT_GRID_MAP_LOG_ODDS_H_
#define PATHENT_GRID_MAP_LOG_ODDS_H_

#include <span>

#include "pathent/grid_map/cell.h"
#include "pathent/grid_map/occupancy_grid.h"

namespace pathent {

// Inverse sensor model increments. Defaults clamp p to [0.018, 0.982].
struct LogOddsParams {
  double l_free = -0.85;
  double l_occ = 0.85;
  double l_min = -4.0;
  double l_max = 4.0;

  void Validate() const;
};

// Applies one beam to the belief grid. Every cell before the terminal one gets
// l_free. The terminal cell gets l_occ when `hit`, otherwise l_free (the beam
// passed through it). Cells outside the grid are skipped silently.
void ApplyRayUpdate(OccupancyGrid& grid, std::span<const Cell> cells, bool hit,
                    const LogOddsParams& params);

}  // namespace pathent

#endif  // PATHENT_GRID_MAP_LOG_ODDS_H_
