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

#include "pathent/grid_map/occupancy_grid.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pathent {

const char* CellStateName(CellState state) {
  switch (state) {
    case CellState::kFree:
      return "free";
    case CellState::kOccupied:
      return "occupied";
    case CellState::kUnknown:
      return "unknown";
  }
  return "?";
}

void Thresholds::Validate() const {
  if (!(0 <= free_below && free_below < occupied_above &&
        occupied_above <= 100)) {
    std::ostringstream msg;
    msg << "invalid thresholds: need 0 <= free_below (" << free_below
        << ") < occupied_above (" << occupied_above << ") <= 100";
    throw std::invalid_argument(msg.str());
  }
}

CellState Classify(std::int8_t raw, const Thresholds& thresholds) {
  if (raw < 0) return CellState::kUnknown;
  if (raw < thresholds.free_below) return CellState::kFree;
  if (raw > thresholds.occupied_above) return CellState::kOccupied;
  return CellState::kUnknown;
}

double Sigmoid(double log_odds) { return 1.0 / (1.0 + std::exp(-log_odds)); }

std::int8_t RawFromLogOdds(double log_odds) {
  return static_cast<std::int8_t>(std::lround(100.0 * Sigmoid(log_odds)));
}

OccupancyGrid::OccupancyGrid(int width, int height, double resolution,
                             MapOrigin origin, std::int8_t fill)
    : width_(width), height_(height), resolution_(resolution), origin_(origin) {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("grid dimensions must be positive");
  }
  if (!(resolution > 0.0) || !std::isfinite(resolution)) {
    throw std::invalid_argument("grid resolution must be > 0");
  }
  if (fill < kUnknown || fill > kOccupiedRaw) {
    throw std::invalid_argument("raw fill value out of range");
  }
  const std::size_t n =
      static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  raw_.assign(n, kUnknown);
  log_odds_.assign(n, 0.0);
  if (fill != kUnknown) {
    for (std::size_t i = 0; i < n; ++i) set_raw(CellAt(i), fill);
  }
}

void OccupancyGrid::set_raw(const Cell& c, std::int8_t value) {
  if (value < kUnknown || value > kOccupiedRaw) {
    throw std::invalid_argument("raw cell value out of range");
  }
  const std::size_t i = Index(c);
  raw_[i] = value;
  if (value == kUnknown) {
    log_odds_[i] = 0.0;
  } else {
    // Saturated values are pinned just inside (0,1) so that rounding the
    // sigmoid recovers the raw value exactly.
    const double p = std::clamp(static_cast<double>(value) / 100.0, 1e-3,
                                1.0 - 1e-3);
    log_odds_[i] = std::log(p / (1.0 - p));
  }
}

void OccupancyGrid::AddLogOdds(const Cell& c, double delta, double lo,
                               double hi) {
  const std::size_t i = Index(c);
  log_odds_[i] = std::clamp(log_odds_[i] + delta, lo, hi);
  raw_[i] = RawFromLogOdds(log_odds_[i]);
}

Cell OccupancyGrid::WorldToCell(const Point2& p) const {
  return {static_cast<int>(std::floor((p.x - origin_.x) / resolution_)),
          static_cast<int>(std::floor((p.y - origin_.y) / resolution_))};
}

Point2 OccupancyGrid::CellCenter(const Cell& c) const {
  return {origin_.x + (c.x + 0.5) * resolution_,
          origin_.y + (c.y + 0.5) * resolution_};
}

bool OccupancyGrid::SameLattice(const OccupancyGrid& other) const {
  return width_ == other.width_ && height_ == other.height_ &&
         resolution_ == other.resolution_;
}

void OccupancyGrid::RequireSameLattice(const OccupancyGrid& other,
                                       const std::string& what) const {
  if (!SameLattice(other)) {
    std::ostringstream msg;
    msg << what << ": grids differ (" << width_ << "x" << height_ << " @ "
        << resolution_ << " vs " << other.width_ << "x" << other.height_
        << " @ " << other.resolution_ << ")";
    throw DimensionMismatch(msg.str());
  }
}

bool operator==(const OccupancyGrid& a, const OccupancyGrid& b) {
  return a.width_ == b.width_ && a.height_ == b.height_ &&
         a.resolution_ == b.resolution_ && a.origin_ == b.origin_ &&
         a.raw_ == b.raw_;
}

}  // namespace pathent
