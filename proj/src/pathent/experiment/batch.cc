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

#include "pathent/experiment/batch.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include "pathent/common/csv.h"
#include "pathent/grid_map/map_io.h"
#include "pathent/simulator/synthetic_maps.h"

namespace pathent {
namespace {

std::vector<std::string> SplitColon(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ':')) parts.push_back(part);
  return parts;
}

long ParseSpecNumber(const std::string& spec, const std::string& text) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw ConfigError("bad synthetic map spec '" + spec + "'");
  }
  return value;
}

}  // namespace

OccupancyGrid LoadMapSpec(const std::string& spec) {
  if (spec.empty()) throw ConfigError("no map given");
  const auto parts = SplitColon(spec);
  if (parts[0] == "room") {
    if (parts.size() != 3) throw ConfigError("expected room:W:H, got " + spec);
    const long w = ParseSpecNumber(spec, parts[1]);
    const long h = ParseSpecNumber(spec, parts[2]);
    if (w < 3 || h < 3 || w > 100000 || h > 100000) {
      throw ConfigError("room sides must lie in [3, 100000]: " + spec);
    }
    return MakeRoom(static_cast<int>(w), static_cast<int>(h));
  }
  if (parts[0] == "multiroom") {
    if (parts.size() != 2) {
      throw ConfigError("expected multiroom:SEED, got " + spec);
    }
    const long seed = ParseSpecNumber(spec, parts[1]);
    if (seed < 0) throw ConfigError("negative multiroom seed: " + spec);
    return MakeMultiRoom(static_cast<std::uint64_t>(seed));
  }
  return LoadMap(spec);
}

RunResult RunOne(const OccupancyGrid& truth, Method method, std::uint64_t seed,
                 const ExperimentConfig& config, const RunHooks& hooks) {
  ExplorationOutcome out =
      RunExploration(truth, method, config.sim, seed, hooks);
  RunResult r;
  r.method = method;
  r.seed = seed;
  r.summary =
      Summarize(out.trace, out.final_state.belief, truth, MethodName(method),
                seed, StatusName(out.status), config.ssim_window);
  r.trace = std::move(out.trace);
  r.belief = std::move(out.final_state.belief);
  return r;
}

BatchResult RunBatch(const OccupancyGrid& truth, const ExperimentConfig& config,
                     int jobs) {
  config.Validate();
  struct Job {
    Method method;
    std::uint64_t seed;
  };
  std::vector<Job> work;
  for (Method m : config.methods) {
    for (std::uint64_t s : config.seeds) work.push_back({m, s});
  }

  BatchResult batch;
  batch.runs.resize(work.size());
  std::vector<std::exception_ptr> errors(work.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      try {
        batch.runs[i] = RunOne(truth, work[i].method, work[i].seed, config);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::clamp(jobs, 1,
                    static_cast<int>(std::max<std::size_t>(work.size(), 1)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  for (Method m : config.methods) {
    std::vector<const Trace*> traces;
    for (const RunResult& r : batch.runs) {
      if (r.method == m) traces.push_back(&r.trace);
    }
    batch.coverage.push_back(
        {m, AggregateCoverage(traces, config.coverage_step)});
  }
  return batch;
}

void WriteCoverageSeriesCsv(std::ostream& out,
                            const std::vector<MethodSeries>& coverage) {
  CsvWriter csv(out);
  csv.Row({"method", "distance", "mean", "std"});
  for (const MethodSeries& m : coverage) {
    for (std::size_t i = 0; i < m.series.distance.size(); ++i) {
      csv.Row({MethodName(m.method), FormatNumber(m.series.distance[i]),
               FormatNumber(m.series.mean[i]),
               FormatNumber(m.series.stddev[i])});
    }
  }
}

void WriteBatch(const std::filesystem::path& dir, const BatchResult& batch) {
  std::filesystem::create_directories(dir / "runs");
  std::vector<RunSummary> summaries;
  for (const RunResult& r : batch.runs) {
    summaries.push_back(r.summary);
    const auto run_dir =
        dir / "runs" /
        (std::string(MethodName(r.method)) + "_seed" + std::to_string(r.seed));
    std::filesystem::create_directories(run_dir);
    WriteTraceCsv((run_dir / "trace.csv").string(), r.trace);
  }
  WriteSummaryCsv((dir / "summary.csv").string(), summaries);
  const auto series_path = dir / "coverage_series.csv";
  std::ofstream out(series_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + series_path.string() +
                             " for writing");
  }
  WriteCoverageSeriesCsv(out, batch.coverage);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + series_path.string());
}

}  // namespace pathent
