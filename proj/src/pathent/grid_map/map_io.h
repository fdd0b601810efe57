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

#ifndef PATHENT_GRID_MAP_MAP_IO_H_
#define PATHENT_GRID_MAP_MAP_IO_H_

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "pathent/grid_map/occupancy_grid.h"

namespace pathent {

// Map files follow the ROS map_server layout: a PGM image (P2 or P5) and a
// YAML sidecar. The top image row is the highest cell row. Gray levels used
// when saving:
//   Free     -> 254
//   Occupied -> 0
//   UNKNOWN  -> 205
//   other    -> round(255 * (1 - raw / 100))   (not round-trip safe)

inline constexpr std::uint8_t kFreeGray = 254;
inline constexpr std::uint8_t kOccupiedGray = 0;
inline constexpr std::uint8_t kUnknownGray = 205;

class MapFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MapMode { kTrinary, kScale, kRaw };

struct MapMetadata {
  std::string image;
  double resolution = 0.1;
  MapOrigin origin;
  bool negate = false;
  double occupied_thresh = 0.65;
  double free_thresh = 0.196;
  MapMode mode = MapMode::kTrinary;
};

// Gray level (0..255) to raw cell value under `meta`:
//   occ = negate ? gray/255 : (255 - gray)/255
//   trinary: occ > occupied_thresh -> 100, occ < free_thresh -> 0, else UNKNOWN
//   scale:   as trinary at the extremes, gray 205 -> UNKNOWN, and
//            intermediate levels map to round(99 * (occ - free) / (occ_t - free))
//   raw:     gray <= 100 is taken as the raw value, anything else is UNKNOWN
std::int8_t GrayToRaw(int gray, const MapMetadata& meta);
std::uint8_t RawToGray(std::int8_t raw);

MapMetadata ReadMapYaml(const std::filesystem::path& yaml_path);

OccupancyGrid LoadMap(const std::filesystem::path& pgm_path,
                      const std::filesystem::path& yaml_path);

// Accepts either a YAML file (its `image` key is resolved relative to the
// YAML's directory) or a PGM. For a PGM, a sidecar with the same stem and a
// .yaml extension is used when present; otherwise MapMetadata defaults apply.
OccupancyGrid LoadMap(const std::filesystem::path& path);

// kTrinary and kScale write the gray levels above. kRaw writes each raw
// value as its own gray level (UNKNOWN as 255), which round-trips every cell
// exactly.
void SaveMap(const OccupancyGrid& grid, const std::filesystem::path& pgm_path,
             const std::filesystem::path& yaml_path,
             MapMode mode = MapMode::kTrinary);

}  // namespace pathent

#endif  // PATHENT_GRID_MAP_MAP_IO_H_
