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

#ifndef PATHENT_GRID_MAP_OCCUPANCY_GRID_H_
#define PATHENT_GRID_MAP_OCCUPANCY_GRID_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathent/grid_map/cell.h"

namespace pathent {

// Raw cell values follow the ROS OccupancyGrid convention: -1 for a cell that
// was never observed, otherwise an integer occupancy percent in [0, 100].
inline constexpr std::int8_t kUnknown = -1;
inline constexpr std::int8_t kFreeRaw = 0;
inline constexpr std::int8_t kOccupiedRaw = 100;

enum class CellState : std::uint8_t { kFree, kOccupied, kUnknown };

const char* CellStateName(CellState state);

// Ternary classification of raw values: Free if raw < free_below, Occupied if
// raw > occupied_above, Unknown otherwise (including UNKNOWN itself).
struct Thresholds {
  int free_below = 35;
  int occupied_above = 65;

  // Throws std::invalid_argument unless 0 <= free_below < occupied_above <= 100.
  void Validate() const;
};

CellState Classify(std::int8_t raw, const Thresholds& thresholds);

// Probability view used by every map-level metric: UNKNOWN is maximum
// ignorance (0.5).
inline double ProbabilityOf(std::int8_t raw) {
  return raw < 0 ? 0.5 : static_cast<double>(raw) / 100.0;
}

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// World pose of cell (0,0)'s lower-left corner. The yaw is carried through
// map files but not applied to coordinates.
struct MapOrigin {
  double x = 0.0;
  double y = 0.0;
  double yaw = 0.0;

  friend bool operator==(const MapOrigin&, const MapOrigin&) = default;
};

// 2D occupancy lattice with a parallel log-odds belief layer. Ground-truth maps
// only use the raw layer; belief maps are written through ApplyRayUpdate()
// which keeps raw == round(100 * sigmoid(log_odds)) for every observed cell.
class OccupancyGrid {
 public:
  OccupancyGrid() = default;
  OccupancyGrid(int width, int height, double resolution,
                MapOrigin origin = {}, std::int8_t fill = kUnknown);

  int width() const { return width_; }
  int height() const { return height_; }
  double resolution() const { return resolution_; }
  const MapOrigin& origin() const { return origin_; }
  std::size_t size() const { return raw_.size(); }

  bool Contains(const Cell& c) const {
    return c.x >= 0 && c.y >= 0 && c.x < width_ && c.y < height_;
  }
  std::size_t Index(const Cell& c) const {
    return static_cast<std::size_t>(c.y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(c.x);
  }
  Cell CellAt(std::size_t index) const {
    return {static_cast<int>(index % static_cast<std::size_t>(width_)),
            static_cast<int>(index / static_cast<std::size_t>(width_))};
  }

  std::int8_t raw(const Cell& c) const { return raw_[Index(c)]; }
  // Writes a raw value directly. The log-odds layer is reset to the value's
  // log-odds so that both layers stay consistent.
  void set_raw(const Cell& c, std::int8_t value);
  double log_odds(const Cell& c) const { return log_odds_[Index(c)]; }

  CellState state(const Cell& c, const Thresholds& t) const {
    return Classify(raw(c), t);
  }
  double probability(const Cell& c) const { return ProbabilityOf(raw(c)); }

  // Adds `delta` to the cell's log-odds, clamps to [lo, hi] and re-derives the
  // raw value. The cell becomes observed.
  void AddLogOdds(const Cell& c, double delta, double lo, double hi);

  std::span<const std::int8_t> raw_cells() const { return raw_; }
  std::span<const double> log_odds_cells() const { return log_odds_; }

  // Cell containing the world point; may be outside the grid.
  Cell WorldToCell(const Point2& p) const;
  Point2 CellCenter(const Cell& c) const;

  // Same dimensions and resolution.
  bool SameLattice(const OccupancyGrid& other) const;
  // Throws DimensionMismatch naming `what` unless SameLattice(other).
  void RequireSameLattice(const OccupancyGrid& other,
                          const std::string& what) const;

  // Equality of metadata and raw values; the log-odds layer is not compared.
  friend bool operator==(const OccupancyGrid& a, const OccupancyGrid& b);

 private:
  int width_ = 0;
  int height_ = 0;
  double resolution_ = 1.0;
  MapOrigin origin_;
  std::vector<std::int8_t> raw_;
  std::vector<double> log_odds_;
};

double Sigmoid(double log_odds);
std::int8_t RawFromLogOdds(double log_odds);

}  // namespace pathent

#endif  // PATHENT_GRID_MAP_OCCUPANCY_GRID_H_
