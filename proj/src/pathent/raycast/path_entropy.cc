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

#include "pathent/raycast/path_entropy.h"

#include <sstream>
#include <stdexcept>

#include "pathent/grid_map/map_metrics.h"
#include "pathent/raycast/bresenham.h"

namespace pathent {

void EntropyParams::Validate() const {
  const auto interior = [](double p) { return p > 0.0 && p < 1.0; };
  if (!interior(p_unk) || !interior(p_ofree)) {
    throw std::invalid_argument("entropy probabilities must lie in (0,1)");
  }
  if (!(CellEntropy(p_unk) < CellEntropy(p_ofree))) {
    std::ostringstream msg;
    msg << "entropy of p_unk (" << p_unk
        << ") must be below entropy of p_ofree (" << p_ofree << ")";
    throw std::invalid_argument(msg.str());
  }
}

RayPath TracePath(const OccupancyGrid& grid, const Cell& robot,
                  const Cell& frontier, const Thresholds& thresholds) {
  if (!grid.Contains(robot) || !grid.Contains(frontier)) {
    throw std::out_of_range("trace_path: endpoint outside grid");
  }
  RayPath path;
  path.cells = Bresenham(robot, frontier);
  path.states.reserve(path.cells.size());
  for (const Cell& c : path.cells) path.states.push_back(grid.state(c, thresholds));
  return path;
}

double PathEntropy(const RayPath& path, const EntropyParams& params) {
  const double h_unknown = CellEntropy(params.p_unk);
  const double h_known = CellEntropy(params.p_ofree);
  double total = 0.0;
  for (const CellState s : path.states) {
    total += s == CellState::kUnknown ? h_unknown : h_known;
  }
  return total;
}

std::size_t PathCellCount(const RayPath& path) { return path.cells.size(); }

double NormalizedPathEntropy(const RayPath& path,
                             const EntropyParams& params) {
  if (path.cells.empty()) {
    throw std::invalid_argument("normalized_path_entropy: empty path");
  }
  return PathEntropy(path, params) / static_cast<double>(PathCellCount(path));
}

}  // namespace pathent
