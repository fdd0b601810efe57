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

#ifndef PATHENT_EXPERIMENT_BATCH_H_
#define PATHENT_EXPERIMENT_BATCH_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pathent/experiment/config.h"
#include "pathent/metrics/trace.h"

namespace pathent {

// Loads a map file, or builds "room:W:H" / "multiroom:SEED". Map file
// problems surface as MapFormatError naming the path; a malformed synthetic
// spec as ConfigError.
OccupancyGrid LoadMapSpec(const std::string& spec);

struct RunResult {
  Method method = Method::kProposed;
  std::uint64_t seed = 0;
  RunSummary summary;
  Trace trace;
  OccupancyGrid belief;
};

RunResult RunOne(const OccupancyGrid& truth, Method method, std::uint64_t seed,
                 const ExperimentConfig& config, const RunHooks& hooks = {});

struct MethodSeries {
  Method method = Method::kProposed;
  CoverageSeries series;
};

struct BatchResult {
  // Ordered by config.methods, then config.seeds.
  std::vector<RunResult> runs;
  std::vector<MethodSeries> coverage;
};

// Runs config.methods x config.seeds on `truth` with up to `jobs` runs in
// flight (0 = hardware threads). The result does not depend on `jobs`.
BatchResult RunBatch(const OccupancyGrid& truth, const ExperimentConfig& config,
                     int jobs);

// coverage_series.csv columns: method,distance,mean,std
void WriteCoverageSeriesCsv(std::ostream& out,
                            const std::vector<MethodSeries>& coverage);

// Writes <dir>/summary.csv, <dir>/coverage_series.csv and
// <dir>/runs/<method>_seed<seed>/trace.csv.
void WriteBatch(const std::filesystem::path& dir, const BatchResult& batch);

}  // namespace pathent

#endif  // PATHENT_EXPERIMENT_BATCH_H_
