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

#include "pathent/raycast/bresenham.h"

namespace pathent {

std::vector<Cell> Bresenham(const Cell& start, const Cell& end) {
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(ChebyshevDistance(start, end)) + 1);
  VisitBresenham(start, end, [&cells](const Cell& c) {
    cells.push_back(c);
    return true;
  });
  return cells;
}

}  // namespace pathent
