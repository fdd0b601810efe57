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

#ifndef PATHENT_GRID_MAP_MAP_METRICS_H_
#define PATHENT_GRID_MAP_MAP_METRICS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "pathent/grid_map/occupancy_grid.h"

namespace pathent {

// Binary Shannon entropy in bits; 0 at p in {0, 1}.
double CellEntropy(double p);

// Mean per-cell entropy of the probability view, in [0, 1]. UNKNOWN cells
// count as p = 0.5.
double MapEntropy(const OccupancyGrid& grid);

// Cells of `truth` that coverage is measured against: 1 = counted.
using CoverageMask = std::vector<std::uint8_t>;

// Without a seed: every Free or Occupied truth cell. With a seed: the Free
// cells 8-connected to the seed plus the Occupied cells bordering them.
CoverageMask MakeCoverageMask(const OccupancyGrid& truth,
                              std::optional<Cell> seed = std::nullopt,
                              const Thresholds& thresholds = {});

// Percentage of masked truth cells that are observed (not UNKNOWN) in
// `belief`. Returns 0 for an empty mask.
double CoveragePercent(const OccupancyGrid& belief, const OccupancyGrid& truth,
                       const CoverageMask& mask);
double CoveragePercent(const OccupancyGrid& belief, const OccupancyGrid& truth);

// Root mean squared difference of the probability views.
double Rmse(const OccupancyGrid& a, const OccupancyGrid& b);

inline constexpr int kDefaultSsimWindow = 7;

// Mean SSIM over all fully contained window x window placements of the
// probability views (uniform weights, L = 1, C1 = 1e-4, C2 = 9e-4).
double Ssim(const OccupancyGrid& a, const OccupancyGrid& b,
            int window = kDefaultSsimWindow);

// As Ssim(), averaged only over windows whose centre cell is observed in
// `belief`. NaN when no such window exists.
double SsimMasked(const OccupancyGrid& belief, const OccupancyGrid& truth,
                  int window = kDefaultSsimWindow);

}  // namespace pathent

#endif  // PATHENT_GRID_MAP_MAP_METRICS_H_
