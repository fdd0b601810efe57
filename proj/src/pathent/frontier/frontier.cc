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


#include "pathent/frontier/frontier.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace pathent {
namespace {

constexpr int kNeighbours[8][2] = {{-1, -1}, {0, -1}, {1, -1}, {-1, 0},
                                   {1, 0},   {-1, 1}, {0, 1},  {1, 1}};

std::uint64_t Key(const Cell& c) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.y)) << 32) |
         static_cast<std::uint32_t>(c.x);
}

}  // namespace

void Blacklist::Add(const Cell& cell, double radius) {
  if (!(radius >= 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("blacklist radius must be finite and >= 0");
  }
  entries_.push_back({cell, radius});
}

bool Blacklist::Covers(const Cell& c) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&c](const BlacklistEntry& e) {
                       return CellDistance(e.cell, c) <= e.radius;
                     });
}

std::vector<Cell> DetectFrontierCells(const OccupancyGrid& grid,
                                      const Thresholds& thresholds) {
  std::vector<Cell> out;
  for (int y = 0; y < grid.height(); ++y) {
    for (int x = 0; x < grid.width(); ++x) {
      const Cell c{x, y};
      if (grid.state(c, thresholds) != CellState::kFree) continue;
      for (const auto& d : kNeighbours) {
        const Cell n{x + d[0], y + d[1]};
        if (grid.Contains(n) &&
            grid.state(n, thresholds) == CellState::kUnknown) {
          out.push_back(c);
          break;
        }
      }
    }
  }
  return out;
}

Cell NearestToMean(const std::vector<Cell>& cells) {
  if (cells.empty()) throw std::invalid_argument("NearestToMean: no cells");
  double mx = 0.0;
  double my = 0.0;
  for (const Cell& c : cells) {
    mx += c.x;
    my += c.y;
  }
  mx /= static_cast<double>(cells.size());
  my /= static_cast<double>(cells.size());
  Cell best = cells.front();
  double best_d2 = std::numeric_limits<double>::infinity();
  for (const Cell& c : cells) {
    const double d2 = (c.x - mx) * (c.x - mx) + (c.y - my) * (c.y - my);
    if (d2 < best_d2 || (d2 == best_d2 && RowMajorLess(c, best))) {
      best = c;
      best_d2 = d2;
    }
  }
  return best;
}

std::vector<FrontierCluster> ClusterFrontiers(const std::vector<Cell>& cells,
                                              int min_size) {
  std::vector<Cell> sorted = cells;
  std::sort(sorted.begin(), sorted.end(), RowMajorLess);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::unordered_map<std::uint64_t, std::size_t> index;
  index.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) index[Key(sorted[i])] = i;

  std::vector<bool> seen(sorted.size(), false);
  std::vector<FrontierCluster> clusters;
  std::vector<std::size_t> stack;
  for (std::size_t seed = 0; seed < sorted.size(); ++seed) {
    if (seen[seed]) continue;
    FrontierCluster cluster;
    seen[seed] = true;
    stack.push_back(seed);
    while (!stack.empty()) {
      const Cell c = sorted[stack.back()];
      stack.pop_back();
      cluster.cells.push_back(c);
      for (const auto& d : kNeighbours) {
        const auto it = index.find(Key({c.x + d[0], c.y + d[1]}));
        if (it == index.end() || seen[it->second]) continue;
        seen[it->second] = true;
        stack.push_back(it->second);
      }
    }
    if (static_cast<int>(cluster.cells.size()) < min_size) continue;
    std::sort(cluster.cells.begin(), cluster.cells.end(), RowMajorLess);
    cluster.centroid = NearestToMean(cluster.cells);
    clusters.push_back(std::move(cluster));
  }
  std::sort(clusters.begin(), clusters.end(),
            [](const FrontierCluster& a, const FrontierCluster& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return RowMajorLess(a.centroid, b.centroid);
            });
  return clusters;
}

std::vector<FrontierCluster> FilterBlacklist(
    std::vector<FrontierCluster> clusters, const Blacklist& blacklist) {
  if (blacklist.empty()) return clusters;
  std::erase_if(clusters, [&blacklist](const FrontierCluster& f) {
    return blacklist.Covers(f.centroid);
  });
  return clusters;
}

}  // namespace pathent
