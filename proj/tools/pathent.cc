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

// pathent: run explorations, compare methods over seeds, compare maps.
//
//   pathent run --map multiroom:1 --method proposed --seed 1 --output out
//   pathent compare --config experiment.cfg --seeds 1-10 --jobs 4
//   pathent map-stats belief.pgm truth.pgm
//   pathent make-map multiroom:3 truth.pgm
//
// Exit codes: 0 success, 1 usage or config error, 2 runtime error.

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pathent/experiment/batch.h"
#include "pathent/experiment/config.h"
#include "pathent/grid_map/map_io.h"
#include "pathent/grid_map/map_metrics.h"

namespace pathent {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

namespace fs = std::filesystem;

// Flags shared by run and compare, one per config key.
struct ExperimentFlags {
  std::string config_file;
  bool dump_config = false;
  std::map<std::string, std::optional<std::string>> values;
};

void AddExperimentFlags(CLI::App& cmd, ExperimentFlags& flags) {
  cmd.add_option("--config", flags.config_file,
                 "config file of key = value lines; flags override it");
  cmd.add_flag("--dump-config", flags.dump_config,
               "print the resolved config and exit");
  for (const ConfigKey& k : ConfigKeys()) {
    std::string flag = "--" + k.name;
    std::replace(flag.begin(), flag.end(), '_', '-');
    cmd.add_option(flag, flags.values[k.name], k.help);
  }
}

ExperimentConfig Resolve(const ExperimentFlags& flags) {
  ExperimentConfig config;
  if (!flags.config_file.empty()) ApplyConfigFile(flags.config_file, config);
  for (const ConfigKey& k : ConfigKeys()) {
    const auto& value = flags.values.at(k.name);
    if (value) SetConfigValue(k.name, *value, config);
  }
  config.Validate();
  return config;
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string DumpText(const ExperimentConfig& config) {
  std::ostringstream out;
  DumpConfig(out, config);
  return out.str();
}

std::string Exact(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

int CmdRun(const ExperimentConfig& config) {
  const OccupancyGrid truth = LoadMapSpec(config.map);
  const fs::path dir = config.output;
  fs::create_directories(dir);
  RunHooks hooks;
  if (config.snapshots) {
    fs::create_directories(dir / "snapshots");
    hooks.on_tick = [&dir](const SimState& state, const TickRecord& r) {
      char name[32];
      std::snprintf(name, sizeof(name), "belief_%04d", r.tick);
      SaveMap(state.belief, dir / "snapshots" / (std::string(name) + ".pgm"),
              dir / "snapshots" / (std::string(name) + ".yaml"), MapMode::kRaw);
    };
  }
  std::ofstream candidates;
  if (config.candidates) {
    candidates.open(dir / "candidates.csv", std::ios::binary);
    if (!candidates) {
      throw std::runtime_error("cannot write " +
                               (dir / "candidates.csv").string());
    }
    hooks.candidates_csv = &candidates;
  }
  const RunResult r = RunOne(truth, config.method, config.seed, config, hooks);
  WriteTraceCsv((dir / "trace.csv").string(), r.trace);
  WriteSummaryCsv((dir / "summary.csv").string(), {r.summary});
  SaveMap(r.belief, dir / "belief.pgm", dir / "belief.yaml", MapMode::kRaw);
  WriteText(dir / "config.txt", DumpText(config));
  WriteSummaryCsv(std::cout, {r.summary});
  return kExitOk;
}

int CmdCompare(const ExperimentConfig& config) {
  const OccupancyGrid truth = LoadMapSpec(config.map);
  const BatchResult batch = RunBatch(truth, config, config.jobs);
  WriteBatch(config.output, batch);
  WriteText(fs::path(config.output) / "config.txt", DumpText(config));
  std::vector<RunSummary> summaries;
  for (const RunResult& r : batch.runs) summaries.push_back(r.summary);
  WriteSummaryCsv(std::cout, summaries);
  return kExitOk;
}

int CmdMapStats(const std::string& a_spec, const std::string& b_spec,
                int window) {
  if (window < 1) throw ConfigError("ssim window must be >= 1");
  const OccupancyGrid a = LoadMapSpec(a_spec);
  const OccupancyGrid b = LoadMapSpec(b_spec);
  if (a.width() != b.width() || a.height() != b.height()) {
    throw std::runtime_error("map sizes differ: " + std::to_string(a.width()) +
                             "x" + std::to_string(a.height()) + " vs " +
                             std::to_string(b.width()) + "x" +
                             std::to_string(b.height()));
  }
  std::cout << "entropy_a,entropy_b,ssim,ssim_masked,rmse,coverage\n"
            << Exact(MapEntropy(a)) << "," << Exact(MapEntropy(b)) << ","
            << Exact(Ssim(a, b, window)) << ","
            << Exact(SsimMasked(a, b, window)) << "," << Exact(Rmse(a, b))
            << "," << Exact(CoveragePercent(a, b)) << "\n";
  return kExitOk;
}

int CmdMakeMap(const std::string& spec, const std::string& pgm) {
  const OccupancyGrid map = LoadMapSpec(spec);
  fs::path yaml = pgm;
  yaml.replace_extension(".yaml");
  SaveMap(map, pgm, yaml);
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Occupancy-grid exploration simulator"};
  app.require_subcommand(1);

  ExperimentFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "run one exploration");
  AddExperimentFlags(*run, run_flags);

  ExperimentFlags compare_flags;
  CLI::App* compare =
      app.add_subcommand("compare", "run methods x seeds and merge results");
  AddExperimentFlags(*compare, compare_flags);

  std::string map_a;
  std::string map_b;
  int window = kDefaultSsimWindow;
  CLI::App* stats =
      app.add_subcommand("map-stats", "entropy, SSIM, RMSE and coverage");
  stats->add_option("map_a", map_a, "belief map")->required();
  stats->add_option("map_b", map_b, "reference map")->required();
  stats->add_option("--ssim-window", window, "SSIM window side, cells");

  std::string spec;
  std::string out_pgm;
  CLI::App* make = app.add_subcommand(
      "make-map", "write a synthetic map (room:W:H, multiroom:SEED)");
  make->add_option("spec", spec, "synthetic map spec")->required();
  make->add_option("output", out_pgm, "output PGM; a YAML sidecar is added")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run || *compare) {
      const ExperimentFlags& flags = *run ? run_flags : compare_flags;
      const ExperimentConfig config = Resolve(flags);
      if (flags.dump_config) {
        DumpConfig(std::cout, config);
        return kExitOk;
      }
      if (config.map.empty()) throw ConfigError("no map given (--map)");
      return *run ? CmdRun(config) : CmdCompare(config);
    }
    if (*stats) return CmdMapStats(map_a, map_b, window);
    return CmdMakeMap(spec, out_pgm);
  } catch (const ConfigError& e) {
    std::cerr << "pathent: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "pathent: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace
}  // namespace pathent

int main(int argc, char** argv) { return pathent::Main(argc, argv); }
