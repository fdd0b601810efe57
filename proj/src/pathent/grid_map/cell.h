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

#ifndef PATHENT_GRID_MAP_CELL_H_
#define PATHENT_GRID_MAP_CELL_H_

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>

namespace pathent {

// Integer cell index; x is the column, y the row (y grows with world y).
struct Cell {
  int x = 0;
  int y = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

// Row-major order: by row, then by column. Used for every deterministic
// tie-break in the library.
inline bool RowMajorLess(const Cell& a, const Cell& b) {
  return a.y != b.y ? a.y < b.y : a.x < b.x;
}

inline double CellDistance(const Cell& a, const Cell& b) {
  return std::hypot(static_cast<double>(a.x - b.x),
                    static_cast<double>(a.y - b.y));
}

inline int ChebyshevDistance(const Cell& a, const Cell& b) {
  return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

inline std::ostream& operator<<(std::ostream& os, const Cell& c) {
  return os << "(" << c.x << "," << c.y << ")";
}

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

}  // namespace pathent

#endif  // PATHENT_GRID_MAP_CELL_H_
