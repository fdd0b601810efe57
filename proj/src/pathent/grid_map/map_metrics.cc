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

#include "pathent/grid_map/map_metrics.h"

#include <cmath>
#include <deque>
#include <limits>
#include <span>
#include <stdexcept>

#include "pathent/simd/kernels.h"

namespace pathent {
namespace {

constexpr double kSsimC1 = 0.01 * 0.01;
constexpr double kSsimC2 = 0.03 * 0.03;

const simd::RawLut& EntropyLut() {
  static const simd::RawLut lut = [] {
    simd::RawLut table{};
    table[0] = CellEntropy(0.5);
    for (int raw = 0; raw <= 100; ++raw) {
      table[static_cast<std::size_t>(raw + 1)] = CellEntropy(raw / 100.0);
    }
    return table;
  }();
  return lut;
}

std::vector<double> ProbabilityView(const OccupancyGrid& grid) {
  std::vector<double> p(grid.size());
  simd::Kernels().to_probability(grid.raw_cells(), p);
  return p;
}

// Sums of `src` (width x height, row-major) over every window x window block
// that fits, as an (width - window + 1) x (height - window + 1) array.
std::vector<double> BoxSums(std::span<const double> src, int width, int height,
                            int window) {
  const auto& k = simd::Kernels();
  const std::size_t out_w = static_cast<std::size_t>(width - window + 1);
  const std::size_t out_h = static_cast<std::size_t>(height - window + 1);
  std::vector<double> rows(static_cast<std::size_t>(height) * out_w, 0.0);
  for (int y = 0; y < height; ++y) {
    std::span<double> row(rows.data() + y * out_w, out_w);
    const auto in = src.subspan(static_cast<std::size_t>(y) * width, width);
    for (int dx = 0; dx < window; ++dx) k.add_into(row, in.subspan(dx, out_w));
  }
  std::vector<double> out(out_h * out_w, 0.0);
  for (std::size_t y = 0; y < out_h; ++y) {
    std::span<double> row(out.data() + y * out_w, out_w);
    for (int dy = 0; dy < window; ++dy) {
      k.add_into(row, std::span<const double>(
                          rows.data() + (y + static_cast<std::size_t>(dy)) * out_w,
                          out_w));
    }
  }
  return out;
}

std::vector<double> LocalSsim(const OccupancyGrid& a, const OccupancyGrid& b,
                              int window) {
  a.RequireSameLattice(b, "ssim");
  if (window < 3 || window % 2 == 0) {
    throw std::invalid_argument("ssim window must be odd and >= 3");
  }
  if (window > a.width() || window > a.height()) {
    throw std::invalid_argument("ssim window larger than grid");
  }
  const auto& k = simd::Kernels();
  const std::vector<double> pa = ProbabilityView(a);
  const std::vector<double> pb = ProbabilityView(b);
  std::vector<double> product(pa.size());
  const int w = a.width();
  const int h = a.height();

  const auto sa = BoxSums(pa, w, h, window);
  const auto sb = BoxSums(pb, w, h, window);
  k.multiply(pa, pa, product);
  const auto saa = BoxSums(product, w, h, window);
  k.multiply(pb, pb, product);
  const auto sbb = BoxSums(product, w, h, window);
  k.multiply(pa, pb, product);
  const auto sab = BoxSums(product, w, h, window);

  std::vector<double> local(sa.size());
  k.ssim_map(sa, sb, saa, sbb, sab, 1.0 / (window * window), kSsimC1, kSsimC2,
             local);
  return local;
}

}  // namespace

double CellEntropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -(p * std::log2(p) + (1.0 - p) * std::log2(1.0 - p));
}

double MapEntropy(const OccupancyGrid& grid) {
  if (grid.size() == 0) throw std::invalid_argument("map_entropy: empty grid");
  return simd::Kernels().lut_sum(grid.raw_cells(), EntropyLut()) /
         static_cast<double>(grid.size());
}

CoverageMask MakeCoverageMask(const OccupancyGrid& truth,
                              std::optional<Cell> seed,
                              const Thresholds& thresholds) {
  CoverageMask mask(truth.size(), 0);
  if (!seed) {
    for (std::size_t i = 0; i < truth.size(); ++i) {
      mask[i] = Classify(truth.raw_cells()[i], thresholds) !=
                CellState::kUnknown;
    }
    return mask;
  }
  if (!truth.Contains(*seed) ||
      truth.state(*seed, thresholds) != CellState::kFree) {
    return mask;
  }
  std::vector<std::uint8_t> visited(truth.size(), 0);
  std::deque<Cell> queue{*seed};
  visited[truth.Index(*seed)] = 1;
  while (!queue.empty()) {
    const Cell c = queue.front();
    queue.pop_front();
    mask[truth.Index(c)] = 1;
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        const Cell n{c.x + dx, c.y + dy};
        if ((dx == 0 && dy == 0) || !truth.Contains(n)) continue;
        const std::size_t ni = truth.Index(n);
        const CellState s = truth.state(n, thresholds);
        if (s == CellState::kOccupied) {
          mask[ni] = 1;
        } else if (s == CellState::kFree && !visited[ni]) {
          visited[ni] = 1;
          queue.push_back(n);
        }
      }
    }
  }
  return mask;
}

double CoveragePercent(const OccupancyGrid& belief, const OccupancyGrid& truth,
                       const CoverageMask& mask) {
  belief.RequireSameLattice(truth, "coverage_percent");
  if (mask.size() != truth.size()) {
    throw DimensionMismatch("coverage_percent: mask size differs from grid");
  }
  std::size_t total = 0;
  std::size_t seen = 0;
  const auto raw = belief.raw_cells();
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (!mask[i]) continue;
    ++total;
    if (raw[i] != kUnknown) ++seen;
  }
  return total == 0 ? 0.0 : 100.0 * static_cast<double>(seen) / total;
}

double CoveragePercent(const OccupancyGrid& belief,
                       const OccupancyGrid& truth) {
  return CoveragePercent(belief, truth, MakeCoverageMask(truth));
}

double Rmse(const OccupancyGrid& a, const OccupancyGrid& b) {
  a.RequireSameLattice(b, "rmse");
  const auto pa = ProbabilityView(a);
  const auto pb = ProbabilityView(b);
  return std::sqrt(simd::Kernels().squared_diff_sum(pa, pb) /
                   static_cast<double>(pa.size()));
}

double Ssim(const OccupancyGrid& a, const OccupancyGrid& b, int window) {
  const auto local = LocalSsim(a, b, window);
  return simd::Kernels().sum(local) / static_cast<double>(local.size());
}

double SsimMasked(const OccupancyGrid& belief, const OccupancyGrid& truth,
                  int window) {
  const auto local = LocalSsim(belief, truth, window);
  const int out_w = belief.width() - window + 1;
  const int radius = window / 2;
  double total = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < local.size(); ++i) {
    const Cell centre{static_cast<int>(i % out_w) + radius,
                      static_cast<int>(i / out_w) + radius};
    if (belief.raw(centre) == kUnknown) continue;
    total += local[i];
    ++count;
  }
  return count == 0 ? std::numeric_limits<double>::quiet_NaN()
                    : total / static_cast<double>(count);
}

}  // namespace pathent
