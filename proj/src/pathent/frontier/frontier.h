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


#ifndef PATHENT_FRONTIER_FRONTIER_H_
#define PATHENT_FRONTIER_FRONTIER_H_

#include <cstddef>
#include <vector>

#include "pathent/grid_map/cell.h"
#include "pathent/grid_map/occupancy_grid.h"

namespace pathent {

inline constexpr int kDefaultMinClusterSize = 4;

// One 8-connected run of frontier cells. Members are stored in row-major
// order; the centroid is the member nearest their arithmetic mean.
struct FrontierCluster {
  std::vector<Cell> cells;
  Cell centroid;

  std::size_t size() const { return cells.size(); }
};

struct BlacklistEntry {
  Cell cell;
  double radius = 0.0;  // cells
};

class Blacklist {
 public:
  // Throws std::invalid_argument for a negative or non-finite radius.
  void Add(const Cell& cell, double radius);
  void Clear() { entries_.clear(); }

  // True if `c` lies within (distance <= radius) of any entry.
  bool Covers(const Cell& c) const;

  const std::vector<BlacklistEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<BlacklistEntry> entries_;
};

// Free cells with at least one Unknown 8-neighbour, in row-major order.
std::vector<Cell> DetectFrontierCells(const OccupancyGrid& grid,
                                      const Thresholds& thresholds = {});

// Groups cells into 8-connected components and drops those smaller than
// `min_size`. Output is ordered by size (descending), then centroid row-major.
std::vector<FrontierCluster> ClusterFrontiers(
    const std::vector<Cell>& cells, int min_size = kDefaultMinClusterSize);

std::vector<FrontierCluster> FilterBlacklist(
    std::vector<FrontierCluster> clusters, const Blacklist& blacklist);

// Member of `cells` nearest their mean; ties go to the row-major first.
// `cells` must be non-empty.
Cell NearestToMean(const std::vector<Cell>& cells);

}  // namespace pathent

#endif  // PATHENT_FRONTIER_FRONTIER_H_
