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


#include "pathent/simulator/lidar.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pathent/raycast/bresenham.h"

namespace pathent {

void SensorConfig::Validate() const {
  if (!(max_range > 0.0)) throw std::invalid_argument("max_range must be > 0");
  if (beam_count < 4) throw std::invalid_argument("beam_count must be >= 4");
  if (!(hit_noise_std >= 0.0)) {
    throw std::invalid_argument("hit_noise_std must be >= 0");
  }
}

std::vector<Beam> LidarScan(const OccupancyGrid& truth, const Pose2& pose,
                            const SensorConfig& sensor, std::mt19937_64* rng,
                            const Thresholds& thresholds) {
  const Point2 origin{pose.x, pose.y};
  const Cell robot = truth.WorldToCell(origin);
  if (!truth.Contains(robot)) {
    throw std::out_of_range("lidar pose outside the map");
  }
  const bool noisy = sensor.hit_noise_std > 0.0;
  if (noisy && rng == nullptr) {
    throw std::invalid_argument("noisy lidar needs a random generator");
  }
  std::normal_distribution<double> noise(0.0, sensor.hit_noise_std);

  std::vector<Beam> scan(static_cast<std::size_t>(sensor.beam_count));
  for (int k = 0; k < sensor.beam_count; ++k) {
    Beam& beam = scan[static_cast<std::size_t>(k)];
    beam.angle = 2.0 * std::numbers::pi * k / sensor.beam_count;
    const Cell end = truth.WorldToCell(
        {origin.x + sensor.max_range * std::cos(beam.angle),
         origin.y + sensor.max_range * std::sin(beam.angle)});
    beam.range = sensor.max_range;
    VisitBresenham(robot, end, [&](const Cell& c) {
      if (!truth.Contains(c)) return false;
      const CellState s = truth.state(c, thresholds);
      if (s == CellState::kUnknown) return false;
      beam.cells.push_back(c);
      if (s == CellState::kOccupied) {
        beam.hit = true;
        const Point2 centre = truth.CellCenter(c);
        beam.range = std::hypot(centre.x - origin.x, centre.y - origin.y);
        return false;
      }
      return true;
    });
    if (!beam.hit || !noisy) continue;

    // Re-trace the beam up to the perturbed range; the cell reached there is
    // reported as the obstacle.
    const double r =
        std::clamp(beam.range + noise(*rng), 0.0, sensor.max_range);
    const Cell noisy_end =
        truth.WorldToCell({origin.x + r * std::cos(beam.angle),
                           origin.y + r * std::sin(beam.angle)});
    beam.range = r;
    beam.cells.clear();
    VisitBresenham(robot, noisy_end, [&](const Cell& c) {
      if (!truth.Contains(c)) return false;
      beam.cells.push_back(c);
      return true;
    });
  }
  return scan;
}

void IntegrateScan(OccupancyGrid& belief, const std::vector<Beam>& scan,
                   const LogOddsParams& params) {
  for (const Beam& beam : scan) {
    ApplyRayUpdate(belief, beam.cells, beam.hit, params);
  }
}

}  // namespace pathent
