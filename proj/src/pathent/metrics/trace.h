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


#ifndef PATHENT_METRICS_TRACE_H_
#define PATHENT_METRICS_TRACE_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pathent/grid_map/cell.h"
#include "pathent/grid_map/map_metrics.h"
#include "pathent/grid_map/occupancy_grid.h"

namespace pathent {

// Metrics after one decision tick. Graph metrics that are undefined for the
// current graph (fewer than two nodes, no edges) are NaN.
struct TickRecord {
  int tick = 0;
  double distance = 0.0;  // cumulative travel, m
  double coverage = 0.0;  // percent
  double map_entropy = 0.0;
  double algebraic_connectivity = 0.0;
  double average_degree = 0.0;
  double normalized_tree_connectivity = 0.0;
  double graph_uncertainty = 0.0;  // mean edge D-optimality
  int node_count = 0;
  int edge_count = 0;
  std::optional<Cell> selected;
};

using Trace = std::vector<TickRecord>;

struct UncertaintyReduction {
  double max = 0.0;
  double min = 0.0;
  double diff = 0.0;
  double percent = 0.0;  // 100 (max - min) / max
};

// Throws std::invalid_argument unless 0 < min <= max.
UncertaintyReduction ComputeUncertaintyReduction(double max, double min);

struct RunSummary {
  std::string method;
  std::uint64_t seed = 0;
  std::string status;
  int ticks = 0;
  double distance = 0.0;
  double coverage = 0.0;
  double map_entropy = 0.0;
  double algebraic_connectivity = 0.0;
  double average_degree = 0.0;
  double normalized_tree_connectivity = 0.0;
  double ssim = 0.0;
  double ssim_masked = 0.0;
  double rmse = 0.0;
  double d_opt_max = 0.0;
  double d_opt_min = 0.0;
  double d_opt_diff = 0.0;
  double percent_r = 0.0;
  int node_count = 0;
  int edge_count = 0;
};

// Final-tick values plus map quality of `belief` against `truth`. The D-opt
// extrema are taken over the per-tick graph_uncertainty series (ticks where
// it is defined); with none they are NaN. Throws std::invalid_argument for an
// empty trace.
RunSummary Summarize(const Trace& trace, const OccupancyGrid& belief,
                     const OccupancyGrid& truth, const std::string& method,
                     std::uint64_t seed, const std::string& status,
                     int ssim_window = kDefaultSsimWindow);

// CSV, RFC 4180, numbers with six significant digits, NaN as an empty field.
// trace.csv columns:
//   tick,distance,coverage,map_entropy,algebraic_connectivity,average_degree,
//   normalized_tree_connectivity,graph_uncertainty,node_count,edge_count,
//   selected_x,selected_y
// summary.csv columns:
//   method,seed,status,ticks,distance,coverage,map_entropy,
//   algebraic_connectivity,average_degree,normalized_tree_connectivity,ssim,
//   ssim_masked,rmse,d_opt_max,d_opt_min,d_opt_diff,percent_r,node_count,
//   edge_count
void WriteTraceCsv(std::ostream& out, const Trace& trace);
void WriteSummaryCsv(std::ostream& out, const std::vector<RunSummary>& runs);
Trace ReadTraceCsv(std::istream& in);
std::vector<RunSummary> ReadSummaryCsv(std::istream& in);

// Throws std::runtime_error naming `path` on I/O failure.
void WriteTraceCsv(const std::string& path, const Trace& trace);
void WriteSummaryCsv(const std::string& path,
                     const std::vector<RunSummary>& runs);

// Coverage of each trace resampled on a common distance grid (step-wise:
// the last record at or before each grid point), then mean and population
// standard deviation across traces.
struct CoverageSeries {
  std::vector<double> distance;
  std::vector<double> mean;
  std::vector<double> stddev;
};
CoverageSeries AggregateCoverage(const std::vector<const Trace*>& traces,
                                 double step);

}  // namespace pathent

#endif  // PATHENT_METRICS_TRACE_H_
