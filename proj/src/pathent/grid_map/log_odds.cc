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

#include "pathent/grid_map/log_odds.h"

#include <stdexcept>

namespace pathent {

void LogOddsParams::Validate() const {
  if (!(l_free < 0.0)) throw std::invalid_argument("l_free must be < 0");
  if (!(l_occ > 0.0)) throw std::invalid_argument("l_occ must be > 0");
  if (!(l_min < 0.0 && l_max > 0.0)) {
    throw std::invalid_argument("log-odds clamp must satisfy l_min < 0 < l_max");
  }
}

void ApplyRayUpdate(OccupancyGrid& grid, std::span<const Cell> cells, bool hit,
                    const LogOddsParams& params) {
  if (cells.empty()) return;
  const std::size_t last = cells.size() - 1;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!grid.Contains(cells[i])) continue;
    const double delta = (i == last && hit) ? params.l_occ : params.l_free;
    grid.AddLogOdds(cells[i], delta, params.l_min, params.l_max);
  }
}

}  // namespace pathent
