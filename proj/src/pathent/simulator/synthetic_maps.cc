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


#include "pathent/simulator/synthetic_maps.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace pathent {
namespace {

void Fill(OccupancyGrid& grid, int x0, int y0, int x1, int y1,
          std::int8_t value) {
  for (int y = y0; y <= y1; ++y)
    for (int x = x0; x <= x1; ++x) grid.set_raw({x, y}, value);
}

int UniformInt(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

OccupancyGrid MakeRoom(int width, int height, double resolution) {
  if (width < 3 || height < 3) {
    throw std::invalid_argument("room must be at least 3x3");
  }
  OccupancyGrid grid(width, height, resolution, {}, kOccupiedRaw);
  Fill(grid, 1, 1, width - 2, height - 2, kFreeRaw);
  return grid;
}

OccupancyGrid MakeMultiRoom(std::uint64_t seed,
                            const MultiRoomParams& params) {
  const int nx = params.rooms_x;
  const int ny = params.rooms_y;
  if (nx < 1 || ny < 1) throw std::invalid_argument("need at least one room");
  // Wall lines at x = wall_x[i], y = wall_y[j] including the border.
  std::vector<int> wall_x(nx + 1), wall_y(ny + 1);
  for (int i = 0; i <= nx; ++i) wall_x[i] = i * (params.width - 1) / nx;
  for (int j = 0; j <= ny; ++j) wall_y[j] = j * (params.height - 1) / ny;
  for (int i = 0; i < nx; ++i) {
    if (wall_x[i + 1] - wall_x[i] - 1 < params.door_width + 2) {
      throw std::invalid_argument("rooms too narrow for the door width");
    }
  }
  for (int j = 0; j < ny; ++j) {
    if (wall_y[j + 1] - wall_y[j] - 1 < params.door_width + 2) {
      throw std::invalid_argument("rooms too short for the door width");
    }
  }

  OccupancyGrid grid(params.width, params.height, params.resolution, {},
                     kFreeRaw);
  for (int x : wall_x) Fill(grid, x, 0, x, params.height - 1, kOccupiedRaw);
  for (int y : wall_y) Fill(grid, 0, y, params.width - 1, y, kOccupiedRaw);

  std::mt19937_64 rng(seed);
  // Candidate doors: wall segments between horizontally / vertically adjacent
  // rooms, in a fixed order, then shuffled by the seed.
  struct Door {
    int room_a, room_b;
    bool vertical_wall;  // wall at constant x
    int i, j;
  };
  std::vector<Door> doors;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i + 1 < nx; ++i)
      doors.push_back({j * nx + i, j * nx + i + 1, true, i + 1, j});
  for (int j = 0; j + 1 < ny; ++j)
    for (int i = 0; i < nx; ++i)
      doors.push_back({j * nx + i, (j + 1) * nx + i, false, i, j + 1});
  std::shuffle(doors.begin(), doors.end(), rng);

  std::vector<int> parent(static_cast<std::size_t>(nx * ny));
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&parent](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::bernoulli_distribution extra(params.extra_door_probability);
  for (const Door& d : doors) {
    const int ra = find(d.room_a);
    const int rb = find(d.room_b);
    const bool needed = ra != rb;
    if (needed) parent[ra] = rb;
    if (!extra(rng) && !needed) continue;
    if (d.vertical_wall) {
      const int x = wall_x[d.i];
      const int lo = wall_y[d.j] + 2;
      const int hi = wall_y[d.j + 1] - 1 - params.door_width;
      const int y0 = UniformInt(rng, lo, std::max(lo, hi));
      Fill(grid, x, y0, x, y0 + params.door_width - 1, kFreeRaw);
    } else {
      const int y = wall_y[d.j];
      const int lo = wall_x[d.i] + 2;
      const int hi = wall_x[d.i + 1] - 1 - params.door_width;
      const int x0 = UniformInt(rng, lo, std::max(lo, hi));
      Fill(grid, x0, y, x0 + params.door_width - 1, y, kFreeRaw);
    }
  }

  // Pillars stay at least 4 cells clear of every wall so doors and the
  // inflated corridor around them remain passable.
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const int x_lo = wall_x[i] + 5;
      const int x_hi = wall_x[i + 1] - 6;
      const int y_lo = wall_y[j] + 5;
      const int y_hi = wall_y[j + 1] - 6;
      if (x_hi < x_lo || y_hi < y_lo) continue;
      for (int p = 0; p < params.pillars_per_room; ++p) {
        const int x = UniformInt(rng, x_lo, x_hi);
        const int y = UniformInt(rng, y_lo, y_hi);
        Fill(grid, x, y, x + 1, y + 1, kOccupiedRaw);
      }
    }
  }
  return grid;
}

}  // namespace pathent
