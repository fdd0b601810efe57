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

#ifndef PATHENT_RAYCAST_BRESENHAM_H_
#define PATHENT_RAYCAST_BRESENHAM_H_

#include <vector>

#include "pathent/grid_map/cell.h"

namespace pathent {

// Integer Bresenham line from `start` to `end`, both included. Consecutive
// cells are 8-connected and the line has max(|dx|, |dy|) + 1 cells. When the
// ideal minor coordinate falls exactly halfway, it rounds away from `start`.
std::vector<Cell> Bresenham(const Cell& start, const Cell& end);

// Visits the same cells as Bresenham() in order without allocating; stops early
// when `visit` returns false. Returns the number of cells visited.
template <typename Visitor>
int VisitBresenham(const Cell& start, const Cell& end, Visitor&& visit) {
  const int dx = std::abs(end.x - start.x);
  const int dy = -std::abs(end.y - start.y);
  const int sx = start.x < end.x ? 1 : -1;
  const int sy = start.y < end.y ? 1 : -1;
  int err = dx + dy;
  Cell c = start;
  int visited = 0;
  while (true) {
    ++visited;
    if (!visit(c)) return visited;
    if (c == end) return visited;
    const int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      c.x += sx;
    }
    if (e2 <= dx) {
      err += dx;
      c.y += sy;
    }
  }
}

}  // namespace pathent

#endif  // PATHENT_RAYCAST_BRESENHAM_H_
