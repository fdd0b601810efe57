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


#ifndef PATHENT_SIMULATOR_SYNTHETIC_MAPS_H_
#define PATHENT_SIMULATOR_SYNTHETIC_MAPS_H_

#include <cstdint>

#include "pathent/grid_map/occupancy_grid.h"

namespace pathent {

// Free interior enclosed by a one-cell Occupied border.
OccupancyGrid MakeRoom(int width, int height, double resolution = 0.1);

struct MultiRoomParams {
  int width = 60;
  int height = 60;
  int rooms_x = 3;
  int rooms_y = 3;
  int door_width = 5;  // cells
  // Chance that a wall between two rooms gets a door beyond the ones needed
  // to connect every room.
  double extra_door_probability = 0.3;
  int pillars_per_room = 1;  // 2x2 obstacles
  double resolution = 0.1;
};

// Grid of rooms separated by one-cell walls. Doors are placed so that every
// room is reachable; positions, extra doors and pillars depend on `seed`.
OccupancyGrid MakeMultiRoom(std::uint64_t seed,
                            const MultiRoomParams& params = {});

}  // namespace pathent

#endif  // PATHENT_SIMULATOR_SYNTHETIC_MAPS_H_
