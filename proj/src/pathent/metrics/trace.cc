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


#include "pathent/metrics/trace.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "pathent/common/csv.h"
#include "pathent/grid_map/map_metrics.h"

namespace pathent {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const std::vector<std::string> kTraceColumns = {
    "tick",           "distance",
    "coverage",       "map_entropy",
    "algebraic_connectivity", "average_degree",
    "normalized_tree_connectivity", "graph_uncertainty",
    "node_count",     "edge_count",
    "selected_x",     "selected_y"};

const std::vector<std::string> kSummaryColumns = {
    "method",     "seed",        "status",
    "ticks",      "distance",    "coverage",
    "map_entropy", "algebraic_connectivity", "average_degree",
    "normalized_tree_connectivity", "ssim", "ssim_masked",
    "rmse",       "d_opt_max",   "d_opt_min",
    "d_opt_diff", "percent_r",   "node_count",
    "edge_count"};

int ParseInt(const std::string& field) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (field.empty() || used != field.size()) {
    throw std::invalid_argument("not an integer: '" + field + "'");
  }
  return value;
}

CsvTable ParseWithHeader(std::istream& in,
                         const std::vector<std::string>& columns,
                         const char* what) {
  CsvTable table = ParseCsv(in);
  if (table.empty() || table.front() != columns) {
    throw std::invalid_argument(std::string(what) + ": unexpected header");
  }
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (table[i].size() != columns.size()) {
      throw std::invalid_argument(std::string(what) + ": row " +
                                  std::to_string(i) + " has wrong width");
    }
  }
  table.erase(table.begin());
  return table;
}

template <typename Writer>
void WriteFile(const std::string& path, Writer write) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write(out);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

UncertaintyReduction ComputeUncertaintyReduction(double max, double min) {
  if (!(min > 0.0) || !(max >= min)) {
    throw std::invalid_argument("need 0 < min <= max for %R");
  }
  return {max, min, max - min, 100.0 * (max - min) / max};
}

RunSummary Summarize(const Trace& trace, const OccupancyGrid& belief,
                     const OccupancyGrid& truth, const std::string& method,
                     std::uint64_t seed, const std::string& status,
                     int ssim_window) {
  if (trace.empty()) throw std::invalid_argument("summarize: empty trace");
  const TickRecord& last = trace.back();
  RunSummary s;
  s.method = method;
  s.seed = seed;
  s.status = status;
  s.ticks = last.tick;
  s.distance = last.distance;
  s.coverage = last.coverage;
  s.map_entropy = last.map_entropy;
  s.algebraic_connectivity = last.algebraic_connectivity;
  s.average_degree = last.average_degree;
  s.normalized_tree_connectivity = last.normalized_tree_connectivity;
  s.node_count = last.node_count;
  s.edge_count = last.edge_count;
  s.ssim = Ssim(belief, truth, ssim_window);
  s.ssim_masked = SsimMasked(belief, truth, ssim_window);
  s.rmse = Rmse(belief, truth);

  double hi = -std::numeric_limits<double>::infinity();
  double lo = std::numeric_limits<double>::infinity();
  for (const TickRecord& r : trace) {
    if (std::isnan(r.graph_uncertainty)) continue;
    hi = std::max(hi, r.graph_uncertainty);
    lo = std::min(lo, r.graph_uncertainty);
  }
  if (lo > hi) {
    s.d_opt_max = s.d_opt_min = s.d_opt_diff = s.percent_r = kNaN;
  } else {
    const UncertaintyReduction r = ComputeUncertaintyReduction(hi, lo);
    s.d_opt_max = r.max;
    s.d_opt_min = r.min;
    s.d_opt_diff = r.diff;
    s.percent_r = r.percent;
  }
  return s;
}

void WriteTraceCsv(std::ostream& out, const Trace& trace) {
  CsvWriter writer(out);
  writer.Row(kTraceColumns);
  for (const TickRecord& r : trace) {
    writer.Row({std::to_string(r.tick), FormatNumber(r.distance),
                FormatNumber(r.coverage), FormatNumber(r.map_entropy),
                FormatNumber(r.algebraic_connectivity),
                FormatNumber(r.average_degree),
                FormatNumber(r.normalized_tree_connectivity),
                FormatNumber(r.graph_uncertainty),
                std::to_string(r.node_count), std::to_string(r.edge_count),
                r.selected ? std::to_string(r.selected->x) : "",
                r.selected ? std::to_string(r.selected->y) : ""});
  }
}

void WriteSummaryCsv(std::ostream& out, const std::vector<RunSummary>& runs) {
  CsvWriter writer(out);
  writer.Row(kSummaryColumns);
  for (const RunSummary& s : runs) {
    writer.Row({s.method, std::to_string(s.seed), s.status,
                std::to_string(s.ticks), FormatNumber(s.distance),
                FormatNumber(s.coverage), FormatNumber(s.map_entropy),
                FormatNumber(s.algebraic_connectivity),
                FormatNumber(s.average_degree),
                FormatNumber(s.normalized_tree_connectivity),
                FormatNumber(s.ssim), FormatNumber(s.ssim_masked),
                FormatNumber(s.rmse), FormatNumber(s.d_opt_max),
                FormatNumber(s.d_opt_min), FormatNumber(s.d_opt_diff),
                FormatNumber(s.percent_r), std::to_string(s.node_count),
                std::to_string(s.edge_count)});
  }
}

Trace ReadTraceCsv(std::istream& in) {
  Trace trace;
  for (const auto& row : ParseWithHeader(in, kTraceColumns, "trace.csv")) {
    TickRecord r;
    r.tick = ParseInt(row[0]);
    r.distance = ParseNumber(row[1]);
    r.coverage = ParseNumber(row[2]);
    r.map_entropy = ParseNumber(row[3]);
    r.algebraic_connectivity = ParseNumber(row[4]);
    r.average_degree = ParseNumber(row[5]);
    r.normalized_tree_connectivity = ParseNumber(row[6]);
    r.graph_uncertainty = ParseNumber(row[7]);
    r.node_count = ParseInt(row[8]);
    r.edge_count = ParseInt(row[9]);
    if (!row[10].empty()) r.selected = Cell{ParseInt(row[10]), ParseInt(row[11])};
    trace.push_back(r);
  }
  return trace;
}

std::vector<RunSummary> ReadSummaryCsv(std::istream& in) {
  std::vector<RunSummary> runs;
  for (const auto& row :
       ParseWithHeader(in, kSummaryColumns, "summary.csv")) {
    RunSummary s;
    s.method = row[0];
    s.seed = std::stoull(row[1]);
    s.status = row[2];
    s.ticks = ParseInt(row[3]);
    s.distance = ParseNumber(row[4]);
    s.coverage = ParseNumber(row[5]);
    s.map_entropy = ParseNumber(row[6]);
    s.algebraic_connectivity = ParseNumber(row[7]);
    s.average_degree = ParseNumber(row[8]);
    s.normalized_tree_connectivity = ParseNumber(row[9]);
    s.ssim = ParseNumber(row[10]);
    s.ssim_masked = ParseNumber(row[11]);
    s.rmse = ParseNumber(row[12]);
    s.d_opt_max = ParseNumber(row[13]);
    s.d_opt_min = ParseNumber(row[14]);
    s.d_opt_diff = ParseNumber(row[15]);
    s.percent_r = ParseNumber(row[16]);
    s.node_count = ParseInt(row[17]);
    s.edge_count = ParseInt(row[18]);
    runs.push_back(s);
  }
  return runs;
}

void WriteTraceCsv(const std::string& path, const Trace& trace) {
  WriteFile(path, [&](std::ostream& out) { WriteTraceCsv(out, trace); });
}

void WriteSummaryCsv(const std::string& path,
                     const std::vector<RunSummary>& runs) {
  WriteFile(path, [&](std::ostream& out) { WriteSummaryCsv(out, runs); });
}

CoverageSeries AggregateCoverage(const std::vector<const Trace*>& traces,
                                 double step) {
  if (!(step > 0.0)) throw std::invalid_argument("step must be > 0");
  CoverageSeries series;
  double horizon = 0.0;
  for (const Trace* t : traces) {
    if (!t->empty()) horizon = std::max(horizon, t->back().distance);
  }
  if (traces.empty()) return series;
  if (std::none_of(traces.begin(), traces.end(),
                   [](const Trace* t) { return !t->empty(); })) {
    return series;
  }
  const int points = static_cast<int>(std::floor(horizon / step + 1e-9)) + 1;
  for (int k = 0; k < points; ++k) {
    const double d = k * step;
    std::vector<double> values;
    for (const Trace* t : traces) {
      if (t->empty()) continue;
      double value = t->front().coverage;
      for (const TickRecord& r : *t) {
        if (r.distance > d) break;
        value = r.coverage;
      }
      values.push_back(value);
    }
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size());
    series.distance.push_back(d);
    series.mean.push_back(mean);
    series.stddev.push_back(std::sqrt(var));
  }
  return series;
}

}  // namespace pathent
